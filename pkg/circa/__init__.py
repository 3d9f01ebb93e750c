# Provide module documentation for the circa package.
"""Macroscopic circulation of Markov flux fields on planar graphs."""

# Package version reported by the command line.
__version__ = "0.1.0"
