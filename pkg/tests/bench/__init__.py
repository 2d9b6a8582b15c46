"""Unit tests for the experiment runners."""
