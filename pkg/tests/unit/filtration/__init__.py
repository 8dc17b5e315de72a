"""Unit tests for the filtration package."""
