"""Integration tests for Ordered Locale Lab.

These tests verify cross-component behavior including:
- Identical reports for any worker count
- Reports free of wall-clock data
"""
