"""Tests for thaqkd command implementations."""
