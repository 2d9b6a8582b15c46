"""Structured-matrix spectral toolkit."""

__version__ = "0.1.0"
