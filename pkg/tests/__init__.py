"""Unit tests for tauprec."""
