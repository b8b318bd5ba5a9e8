"""Configuration management for alternata."""

from .settings import DEFAULT_CONFIG, CliConfig, deep_merge, load_config
from .constants import *

__all__ = [
    'DEFAULT_CONFIG',
    'CliConfig',
    'deep_merge',
    'load_config',
    'STATESET_WIDTH',
    'ENUMERATION_BOUND',
    'LAYER_CAP',
    'DEFAULT_SEED',
    'DEFAULT_SAMPLE_COUNT',
    'MAX_WORD_LEN',
    'DETERMINIZE_STATE_CAP',
]
