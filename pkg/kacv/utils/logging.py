"""Logging configuration."""

import logging
import sys
from typing import Optional

_default_level = logging.INFO


def get_logger(name: str, level: Optional[str] = None) -> logging.Logger:
    """
    Get configured logger.

    Reports go to stdout, so log records are written to stderr.

    Args:
        name: Logger name
        level: Log level; the global kacv level when omitted

    Returns:
        Configured logger
    """
    logger = logging.getLogger(name)

    if not logger.handlers:
        handler = logging.StreamHandler(sys.stderr)
        formatter = logging.Formatter(
            '%(asctime)s - %(name)s - %(levelname)s - %(message)s',
            datefmt='%Y-%m-%d %H:%M:%S'
        )
        handler.setFormatter(formatter)
        logger.addHandler(handler)
        logger.propagate = False

    if level is not None:
        logger.setLevel(getattr(logging, level.upper()))
    elif logger.level == logging.NOTSET:
        logger.setLevel(_default_level)
    return logger


def set_global_level(level: str) -> None:
    """Apply a level to every kacv logger, including ones created later."""
    global _default_level
    _default_level = getattr(logging, level.upper())
    for name, candidate in logging.Logger.manager.loggerDict.items():
        if isinstance(candidate, logging.Logger) and name.startswith('kacv'):
            candidate.setLevel(_default_level)
