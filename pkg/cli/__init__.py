"""
Command-line surface for the bohr engine.
"""

from .main import main

__all__ = ["main"]
