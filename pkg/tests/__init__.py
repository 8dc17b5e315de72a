"""symprod test suite."""
