"""Exact-arithmetic toolkit for Carter diagrams and Weyl group words."""

__version__ = "0.1.0"
