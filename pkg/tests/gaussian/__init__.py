"""Tests for thaqkd.gaussian."""
