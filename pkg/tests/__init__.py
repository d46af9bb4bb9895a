"""Tests for Ordered Locale Lab."""
