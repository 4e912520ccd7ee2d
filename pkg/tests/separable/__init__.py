"""Tests for thaqkd.separable."""
