"""Built-in reproduction suites."""
