"""Core configuration settings for alternata."""

import logging
import os
from typing import Any, Dict, Optional

import yaml
from pydantic import BaseModel, Field, field_validator

from .constants import (
    DEFAULT_SAMPLE_COUNT,
    DEFAULT_SEED,
    DETERMINIZE_STATE_CAP,
    ENUMERATION_BOUND,
    LAYER_CAP,
    MAX_WORD_LEN,
)

logger = logging.getLogger(__name__)

DEFAULT_CONFIG = {
    'automata': {
        'max_word_len': MAX_WORD_LEN,
        'determinize_state_cap': DETERMINIZE_STATE_CAP,
    },
    'harness': {
        'sample_count': DEFAULT_SAMPLE_COUNT,
        'seed': DEFAULT_SEED,
        'layer_cap': LAYER_CAP,
        'enumeration_bound': ENUMERATION_BOUND,
    },
    'logging': {
        'level': 'WARNING',
    },
}


def load_config(path: Optional[str] = None) -> Dict[str, Any]:
    """Load configuration from a YAML file layered over the defaults.

    Args:
        path: Optional path to a YAML file; missing file means defaults

    Returns:
        Merged configuration dictionary
    """
    if path is None:
        return deep_merge(DEFAULT_CONFIG, {})

    if not os.path.exists(path):
        logger.warning(f"Config file {path} not found, using defaults")
        return deep_merge(DEFAULT_CONFIG, {})

    with open(path, 'r', encoding='utf-8') as f:
        try:
            user_config = yaml.safe_load(f) or {}
        except yaml.YAMLError as e:
            raise ValueError(f"Config file {path} is not valid YAML: {e}") from e
    if not isinstance(user_config, dict):
        raise ValueError(f"Config file {path} must contain a mapping")
    return deep_merge(DEFAULT_CONFIG, user_config)


def deep_merge(default: Dict[str, Any], override: Dict[str, Any]) -> Dict[str, Any]:
    """Deep merge two dictionaries"""
    result = default.copy()

    for key, value in override.items():
        if key in result and isinstance(result[key], dict) and isinstance(value, dict):
            result[key] = deep_merge(result[key], value)
        else:
            result[key] = value

    return result


class CliConfig(BaseModel):
    """Validated run configuration shared by the CLI and the law harness."""
    max_word_len: int = Field(default=MAX_WORD_LEN)
    determinize_state_cap: int = Field(default=DETERMINIZE_STATE_CAP)
    sample_count: int = Field(default=DEFAULT_SAMPLE_COUNT)
    seed: int = Field(default=DEFAULT_SEED)
    layer_cap: int = Field(default=LAYER_CAP)
    enumeration_bound: int = Field(default=ENUMERATION_BOUND)
    log_level: str = 'WARNING'

    model_config = {'frozen': True}

    @field_validator(
        'max_word_len', 'determinize_state_cap', 'sample_count',
        'seed', 'layer_cap', 'enumeration_bound'
    )
    @classmethod
    def _positive(cls, value: int) -> int:
        if value <= 0:
            raise ValueError('must be positive')
        return value

    @field_validator('log_level')
    @classmethod
    def _known_level(cls, value: str) -> str:
        level = value.upper()
        if not isinstance(logging.getLevelName(level), int):
            raise ValueError(f'unknown log level {value}')
        return level

    @classmethod
    def from_settings(
        cls,
        settings: Optional[Dict[str, Any]] = None,
        **overrides: Any
    ) -> 'CliConfig':
        """Build a config from a merged settings dict plus flag overrides.

        Args:
            settings: Output of load_config; defaults when omitted
            **overrides: Flag values; None entries are ignored

        Returns:
            Validated CliConfig
        """
        settings = settings or load_config()
        values = {
            'max_word_len': settings['automata']['max_word_len'],
            'determinize_state_cap': settings['automata']['determinize_state_cap'],
            'sample_count': settings['harness']['sample_count'],
            'seed': settings['harness']['seed'],
            'layer_cap': settings['harness']['layer_cap'],
            'enumeration_bound': settings['harness']['enumeration_bound'],
            'log_level': settings['logging']['level'],
        }
        values.update({k: v for k, v in overrides.items() if v is not None})
        return cls(**values)
