from .handlers import ErrorHandler

__all__ = ['ErrorHandler']
