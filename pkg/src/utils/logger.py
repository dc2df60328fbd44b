"""Logging configuration."""

import logging
import sys

import config

LOG_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'


def setup_logger(name: str = None, level: str = None) -> logging.Logger:
    """
    Setup logger with standard configuration.

    Records go to stderr so JSON and CSV reports on stdout stay clean. Calling
    it again for the same logger re-targets the existing handler at the
    current stderr instead of adding another one.
    """
    logger = logging.getLogger(name)
    for handler in logger.handlers:
        if getattr(handler, "_simplicial_codes", False):
            # the previous stream may already be closed; never flush it
            handler.stream = sys.stderr
            break
    else:
        handler = logging.StreamHandler(sys.stderr)
        handler.setFormatter(logging.Formatter(LOG_FORMAT))
        handler._simplicial_codes = True
        logger.addHandler(handler)
    logger.setLevel((level or config.LOG_LEVEL).upper())
    return logger
