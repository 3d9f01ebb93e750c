# Provide module documentation for the potential package.
"""Curl potential on dual vertices, its extrema and the maximal circulation value."""

# Import the operations for package-level access.
from circa.potential.curl import compute_psi, dual_path_flux, extrema, extrema_pairs, max_circulation
# Import the domain models for package-level access.
from circa.potential.models import CurlPotential, Extrema

# Define the public API for the potential package.
__all__ = [
    "CurlPotential",
    "Extrema",
    "compute_psi",
    "dual_path_flux",
    "extrema",
    "extrema_pairs",
    "max_circulation",
]
