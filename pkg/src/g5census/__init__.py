"""Exhaustive census of genus-5 curves over F_2."""

__version__ = "0.1.0"
