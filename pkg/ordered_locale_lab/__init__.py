"""Ordered Locale Lab - finite-model checks for ordered locales and causal coverage."""

__version__ = "0.1.0"
