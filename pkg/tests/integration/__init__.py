"""Integration tests for pipelines across symprod packages."""
