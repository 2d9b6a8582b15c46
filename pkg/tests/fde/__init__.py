"""Unit tests for the fractional diffusion package."""
