"""Tests for thaqkd utilities."""
