# Document the purpose of the partition domain model module.
"""3-partition domain models."""
# Overview: Defines the validated 3-partition, inter-part boundaries and circulation reports.
# Details: Labels are stored as integers 0, 1, 2 for A, B, C; serialization uses the letters.

# Enable postponed evaluation so annotations can use forward references.
from __future__ import annotations

# Import dataclass helpers for the immutable records.
from dataclasses import dataclass, field
# Import typing helpers for structured payloads.
from typing import Any, Dict, List, Sequence, Tuple

# Import numpy for characteristic vectors.
import numpy as np

# Import the errors raised by partition validation.
from circa.utils.errors import BadLength, EmptyPart, InvalidLabel

# Part names in label order.
PART_NAMES = ("A", "B", "C")
# The cyclic pair order used for pair fluxes and boundaries.
CYCLIC_PAIRS = ((0, 1), (1, 2), (2, 0))


# Convert a user label (letter or integer) into 0, 1 or 2.
def label_index(label: Any) -> int:
    """Return the integer index of a part label."""
    if isinstance(label, str) and label.upper() in PART_NAMES:
        return PART_NAMES.index(label.upper())
    if isinstance(label, (int, np.integer)) and not isinstance(label, bool) and 0 <= int(label) <= 2:
        return int(label)
    raise InvalidLabel(f"Unknown part label: {label!r}", label=repr(label))


# Enable dataclass generation for validated partitions.
@dataclass(frozen=True)
# Represent a 3-partition as a label per vertex.
class ThreePartition:
    """Disjoint nonempty parts A, B, C covering the vertex set."""

    # Part index per vertex (0 = A, 1 = B, 2 = C).
    labels: Tuple[int, ...]

    # Expose the vertex count.
    @property
    def n(self) -> int:
        """Return the number of vertices."""
        return len(self.labels)

    # Characteristic vector I_S of one part.
    def indicator(self, part: Any) -> np.ndarray:
        """Return the 0/1 characteristic vector of a part."""
        index = label_index(part)
        return np.array([1.0 if label == index else 0.0 for label in self.labels])

    # Vertex list of one part.
    def members(self, part: Any) -> List[int]:
        """Return the 0-based vertices of a part."""
        index = label_index(part)
        return [vertex for vertex, label in enumerate(self.labels) if label == index]

    # All three parts as vertex lists.
    @property
    def parts(self) -> Tuple[List[int], List[int], List[int]]:
        """Return the vertex lists of A, B and C."""
        return (self.members(0), self.members(1), self.members(2))

    # Unordered view used to compare partitions regardless of naming.
    def as_sets(self) -> frozenset:
        """Return the partition as a set of frozensets of vertices."""
        return frozenset(frozenset(part) for part in self.parts)

    # Serialize with 1-based vertex ids and letter labels.
    def to_dict(self) -> Dict[str, Any]:
        """Serialize the partition for JSON reports."""
        return {
            "labels": [PART_NAMES[label] for label in self.labels],
            "parts": {name: [vertex + 1 for vertex in self.members(index)] for index, name in enumerate(PART_NAMES)},
        }


# Validate a label vector as a 3-partition.
def validate_partition(labels: Sequence[Any], n: int) -> ThreePartition:
    """Return a ThreePartition after checking length, labels and nonempty parts."""
    if len(labels) != n:
        raise BadLength(f"Expected {n} labels, got {len(labels)}", expected=n, got=len(labels))
    indices = tuple(label_index(label) for label in labels)
    # The Boolean sum of the three indicators is 1 and the pairwise products are 0 by construction.
    for index, name in enumerate(PART_NAMES):
        if index not in indices:
            raise EmptyPart(f"Part {name} is empty", label=name)
    return ThreePartition(labels=indices)


# Build a partition from three vertex collections.
def partition_from_parts(parts: Sequence[Sequence[int]], n: int) -> ThreePartition:
    """Return the partition whose k-th part gets label k (0-based vertices)."""
    labels: List[Any] = [None] * n
    for index, part in enumerate(parts):
        for vertex in part:
            if not 0 <= vertex < n or labels[vertex] is not None:
                raise BadLength(f"Vertex {vertex} is out of range or listed twice", vertex=vertex)
            labels[vertex] = index
    if any(label is None for label in labels):
        raise BadLength("Parts do not cover every vertex", missing=[v for v, lab in enumerate(labels) if lab is None])
    return validate_partition(labels, n)


# Enable dataclass generation for boundaries.
@dataclass(frozen=True)
# Represent the edges between two parts.
class Boundary:
    """Support edges linking two parts."""

    # Source part index.
    from_part: int
    # Target part index.
    to_part: int
    # Unordered vertex pairs (i < j) with non-zero flux crossing between the parts.
    edges: Tuple[Tuple[int, int], ...] = ()

    # Boundary size |d^A_B|.
    @property
    def size(self) -> int:
        """Return the number of boundary edges."""
        return len(self.edges)

    # Serialize with 1-based ids.
    def to_dict(self) -> Dict[str, Any]:
        """Serialize the boundary for JSON reports."""
        return {
            "from": PART_NAMES[self.from_part],
            "to": PART_NAMES[self.to_part],
            "edges": [[i + 1, j + 1] for i, j in self.edges],
        }


# Enable dataclass generation for circulation reports.
@dataclass(frozen=True)
# Represent circulation and density-flux results for one partition.
class CirculationReport:
    """Circulation, pair fluxes and density fluxes of a 3-partition."""

    # Common absolute value of the three cyclic pair fluxes.
    circulation: float
    # Signed fluxes A->B, B->C, C->A.
    pair_fluxes: Tuple[float, float, float]
    # Density fluxes |pair| / |boundary| in the same order.
    density_fluxes: Tuple[float, float, float]
    # True where the boundary is empty and the density is undefined (reported as 0).
    undefined: Tuple[bool, bool, bool]
    # Minimum density flux over defined boundaries.
    f_min: float
    # Maximum density flux over defined boundaries.
    f_max: float
    # Boundaries in the cyclic pair order.
    boundaries: Tuple[Boundary, Boundary, Boundary] = field(default_factory=tuple)

    # Serialize for JSON reports.
    def to_dict(self) -> Dict[str, Any]:
        """Serialize the report for JSON output."""
        return {
            "circulation": self.circulation,
            "pair_fluxes": list(self.pair_fluxes),
            "density_fluxes": list(self.density_fluxes),
            "undefined": list(self.undefined),
            "f_min": self.f_min,
            "f_max": self.f_max,
            "boundaries": [boundary.to_dict() for boundary in self.boundaries],
        }
