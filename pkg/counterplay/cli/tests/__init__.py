"""Tests for counterplay.cli."""
