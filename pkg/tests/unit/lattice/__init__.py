"""Unit tests for the lattice package."""
