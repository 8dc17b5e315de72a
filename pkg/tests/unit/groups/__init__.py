"""Unit tests for the groups package."""
