"""Unit tests for the American put package."""
