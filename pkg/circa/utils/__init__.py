# Provide module documentation for the shared utilities package.
"""Shared utilities: errors, tolerances and logging setup."""

# Import the tolerance record and its defaults for convenience.
from circa.utils.tolerances import DEFAULT_TOLERANCES, Tolerances

# Define the public API for the utilities package.
__all__ = ["DEFAULT_TOLERANCES", "Tolerances"]
