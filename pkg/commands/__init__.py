"""Command adapters, one per command-line verb."""
