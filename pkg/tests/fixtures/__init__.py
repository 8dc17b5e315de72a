"""Reusable group factories for symprod tests."""
