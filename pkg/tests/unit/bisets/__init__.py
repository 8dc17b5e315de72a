"""Unit tests for the bisets package."""
