"""
Tagged logging for the engine and the command line.

Messages look like ``[COLLAPSE] integrated 14 steps`` or
``[CLI ERROR] residual breach at n=3``: the tag is the last component
of the logger name, upper-cased, with ERROR appended for failures.
Output always goes to stderr so stdout stays clean for data.
"""

import logging
import sys

ROOT_LOGGER = "bohr"


class TagFormatter(logging.Formatter):
    def format(self, record):
        tag = record.name.rsplit(".", 1)[-1].upper()
        if record.levelno >= logging.ERROR:
            tag = f"{tag} ERROR"
        elif record.levelno == logging.WARNING:
            tag = f"{tag} WARNING"
        return f"[{tag}] {record.getMessage()}"


def get_logger(name):
    """Return a child of the package logger, e.g. ``get_logger("collapse")``."""
    return logging.getLogger(f"{ROOT_LOGGER}.{name}")


def setup_logging(verbosity=0, stream=None):
    """Install the tagged stderr handler. Safe to call more than once."""
    level = {0: logging.WARNING, 1: logging.INFO}.get(verbosity, logging.DEBUG)

    root = logging.getLogger(ROOT_LOGGER)
    for handler in list(root.handlers):
        if getattr(handler, "_bohr_handler", False):
            root.removeHandler(handler)

    handler = logging.StreamHandler(stream if stream is not None else sys.stderr)
    handler.setFormatter(TagFormatter())
    handler._bohr_handler = True
    root.addHandler(handler)
    root.setLevel(level)
    root.propagate = False
    return root
