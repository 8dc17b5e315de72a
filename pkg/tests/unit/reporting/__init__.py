"""Unit tests for the reporting package."""
