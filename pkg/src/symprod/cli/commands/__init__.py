"""CLI sub-commands for symprod."""
