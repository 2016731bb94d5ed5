"""Flat-file input and output shared by all commands."""
