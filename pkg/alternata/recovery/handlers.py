import logging
from datetime import datetime
from typing import Any, Dict, Optional

from ..types import CapacityError, DomainError, ExitCode, ParseError

logger = logging.getLogger(__name__)


class ErrorHandler:
    """Records errors raised while serving a command.

    Provides consistent error recording, logging, and the mapping from
    exception type to process exit code.
    """

    EXIT_CODES = {
        CapacityError: ExitCode.CAPACITY,
        ParseError: ExitCode.USAGE,
        DomainError: ExitCode.USAGE,
    }

    def __init__(self):
        self.errors: list[Dict[str, Any]] = []

    def handle(self, error: Exception, context: Optional[Dict[str, Any]] = None) -> ExitCode:
        """Handle an error with context.

        Args:
            error: The error that occurred
            context: Error context (command, file, etc)

        Returns:
            Exit code the command should terminate with
        """
        error_info = {
            "type": type(error).__name__,
            "message": str(error),
            "context": context or {},
            "timestamp": datetime.now().isoformat()
        }
        self.errors.append(error_info)
        logger.error(f"{error_info['type']}: {error_info['message']}")
        return self.exit_code(error)

    def exit_code(self, error: Exception) -> ExitCode:
        """Map an exception to its exit code; unknown errors are usage errors."""
        for exc_type, code in self.EXIT_CODES.items():
            if isinstance(error, exc_type):
                return code
        return ExitCode.USAGE

    def get_errors(self) -> list[Dict[str, Any]]:
        """Get list of handled errors."""
        return self.errors

    def clear_errors(self) -> None:
        """Clear error history."""
        self.errors = []
