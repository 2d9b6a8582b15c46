"""Unit tests for the CLI commands."""
