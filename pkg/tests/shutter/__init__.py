"""Tests for thaqkd.shutter."""
