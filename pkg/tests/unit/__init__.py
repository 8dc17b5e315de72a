"""Unit tests for symprod modules."""
