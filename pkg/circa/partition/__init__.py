# Provide module documentation for the partition package.
"""3-partition algebra: pair fluxes, circulation, density flux and exhaustive search."""

# Import the operations for package-level access.
from circa.partition.circulation import boundary, circulation, pair_flux
from circa.partition.enumeration import (
    DEFAULT_MAX_N,
    BruteForceResult,
    brute_force_cmax,
    iter_partitions,
    stirling3,
    support_graph,
)
# Import the domain models for package-level access.
from circa.partition.models import (
    PART_NAMES,
    Boundary,
    CirculationReport,
    ThreePartition,
    partition_from_parts,
    validate_partition,
)

# Define the public API for the partition package.
__all__ = [
    "DEFAULT_MAX_N",
    "PART_NAMES",
    "Boundary",
    "BruteForceResult",
    "CirculationReport",
    "ThreePartition",
    "boundary",
    "brute_force_cmax",
    "circulation",
    "iter_partitions",
    "pair_flux",
    "partition_from_parts",
    "stirling3",
    "support_graph",
    "validate_partition",
]
