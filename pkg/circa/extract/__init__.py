# Provide module documentation for the extract package.
"""Maximal-circulation partitions from three disjoint dual paths."""

# Import the cut and verification operations.
from circa.extract.cut import (
    DEFAULT_DECOMPOSITION_ATTEMPTS,
    close_outer_face,
    cut_partition,
    extract_partition,
    part_connectivity,
    verify_partition,
)
# Import the domain models for package-level access.
from circa.extract.models import EDGE_DISJOINT, VERTEX_DISJOINT, DualPath, ExtractionResult, PathTriple
# Import the path search.
from circa.extract.paths import FlowNetwork, check_disjoint, edge_connectivity, three_disjoint_paths

# Define the public API for the extract package.
__all__ = [
    "DEFAULT_DECOMPOSITION_ATTEMPTS",
    "EDGE_DISJOINT",
    "VERTEX_DISJOINT",
    "DualPath",
    "ExtractionResult",
    "FlowNetwork",
    "PathTriple",
    "check_disjoint",
    "close_outer_face",
    "cut_partition",
    "edge_connectivity",
    "extract_partition",
    "part_connectivity",
    "three_disjoint_paths",
    "verify_partition",
]
