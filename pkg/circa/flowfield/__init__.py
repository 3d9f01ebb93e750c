# Provide module documentation for the flow field package.
"""Markov-chain side of the pipeline: stationary distribution, currents and net flux."""

# Import the operations for package-level access.
from circa.flowfield.markov import (
    MASS_PLACEMENTS,
    center_flux,
    markov_from_flow,
    net_flux,
    net_flux_from_edges,
    positive_part,
    probability_current,
    stationary_distribution,
)
# Import the domain models for package-level access.
from circa.flowfield.models import NetFluxField, ProbabilityCurrent, StationaryDistribution, TransitionMatrix

# Define the public API for the flow field package.
__all__ = [
    "MASS_PLACEMENTS",
    "NetFluxField",
    "ProbabilityCurrent",
    "StationaryDistribution",
    "TransitionMatrix",
    "center_flux",
    "markov_from_flow",
    "net_flux",
    "net_flux_from_edges",
    "positive_part",
    "probability_current",
    "stationary_distribution",
]
