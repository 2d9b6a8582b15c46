"""Experiment runners behind the command line."""
