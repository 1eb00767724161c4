"""Grundy and pseudo-Grundy edge colorings of complete geometric graphs."""

__version__ = "1.0.0"
