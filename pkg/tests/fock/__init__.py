"""Tests for thaqkd.fock."""
