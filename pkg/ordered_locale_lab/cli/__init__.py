"""Command-line interface for the ordered-locale workbench."""

from ordered_locale_lab.cli.main import cli

__all__ = ["cli"]
