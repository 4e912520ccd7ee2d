"""Tests for thaqkd.attack."""
