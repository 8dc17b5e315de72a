"""Unit tests for the burnside package."""
