"""Unit tests for the spectral analysis package."""
