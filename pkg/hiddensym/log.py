"""
Logging for the hiddensym package. All modules log through `logger`.
"""
from __future__ import unicode_literals
import logging

__all__ = (
    'logger',
    'setup_logging',
)


logger = logging.getLogger(__package__)


def setup_logging(logfile=None, level=logging.DEBUG):
    """
    Attach a handler to the package logger.

    :param logfile: When given, everything from `level` upwards goes to this
        file. Otherwise only warnings are written to stderr.
    """
    if logfile:
        handler = logging.FileHandler(logfile)
        handler.setLevel(level)
        logger.setLevel(level)
    else:
        handler = logging.StreamHandler()
        handler.setLevel(logging.WARNING)

    handler.setFormatter(logging.Formatter(
        '%(asctime)s %(levelname)s %(name)s: %(message)s'))
    logger.addHandler(handler)
    return handler
