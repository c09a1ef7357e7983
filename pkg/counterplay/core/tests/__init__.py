"""Tests for counterplay.core."""
