"""Enumeration toolkit for vincular permutation patterns of type (2,1)."""

__version__ = "0.1.0"
