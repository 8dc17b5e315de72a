"""Unit tests for the reproduce package."""
