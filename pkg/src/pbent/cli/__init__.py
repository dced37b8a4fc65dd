"""Command-line entry point (see :mod:`pbent.cli.main`)."""
