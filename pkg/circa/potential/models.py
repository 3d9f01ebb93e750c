# Document the purpose of the potential domain model module.
"""Curl potential model."""

# Enable postponed evaluation so annotations can use forward references.
from __future__ import annotations

# Import dataclass helpers for the immutable record.
from dataclasses import dataclass
# Import typing helpers for serialization payloads.
from typing import Any, Dict, NamedTuple, Tuple


# Argmin and argmax faces of a potential.
class Extrema(NamedTuple):
    """Faces with minimal and maximal potential (lowest index on ties)."""

    face_min: int
    face_max: int


# Enable dataclass generation for curl potentials.
@dataclass(frozen=True)
# Represent psi on the faces of a triangulated embedding.
class CurlPotential:
    """Potential per face, pinned to 0 on the outer face (face 0)."""

    # Potential value per face id.
    values: Tuple[float, ...]
    # Dual edge ids of the breadth-first tree.
    tree_edges: Tuple[int, ...] = ()
    # Number of non-tree dual edges checked for closure.
    checks: int = 0
    # Largest closure residual seen on a non-tree edge.
    max_residual: float = 0.0

    # Number of faces.
    @property
    def n_faces(self) -> int:
        """Return the number of faces."""
        return len(self.values)

    # Number of assignments made by the traversal.
    @property
    def assignments(self) -> int:
        """Return the number of faces assigned from a neighbor (m - 1)."""
        return len(self.tree_edges)

    # True when every face has the same potential.
    @property
    def is_flat(self) -> bool:
        """Return True when the potential is constant."""
        return not self.values or max(self.values) == min(self.values)

    # Serialize keyed by face id.
    def to_dict(self) -> Dict[str, Any]:
        """Serialize the potential for JSON reports."""
        return {
            "values": {str(face): value for face, value in enumerate(self.values)},
            "assignments": self.assignments,
            "checks": self.checks,
            "max_residual": self.max_residual,
        }
