"""Tests for thaqkd.keyrate."""
