# Document the purpose of the extraction domain model module.
"""Dual path triples and extraction results."""

# Enable postponed evaluation so annotations can use forward references.
from __future__ import annotations

# Import dataclass helpers for the immutable records.
from dataclasses import dataclass
# Import typing helpers for serialization payloads.
from typing import Any, Dict, Optional, Tuple

# Import the embedding models.
from circa.embedding.models import Edge, TriangulatedGraph
# Import the partition models carried by the result.
from circa.partition.models import CirculationReport, ThreePartition
# Import the potential model of a closed triangulation.
from circa.potential.models import CurlPotential

# Disjointness classes of a path triple.
VERTEX_DISJOINT = "vertex-disjoint"
EDGE_DISJOINT = "edge-disjoint-only"


# Enable dataclass generation for dual paths.
@dataclass(frozen=True)
# Represent one walk in the dual graph.
class DualPath:
    """Face sequence and the dual edge ids joining consecutive faces."""

    # Faces from start to end.
    faces: Tuple[int, ...]
    # Dual edge ids, one fewer than faces.
    edges: Tuple[int, ...]
    # Primal edges crossed, as (min, max).
    crossed: Tuple[Edge, ...] = ()

    # Serialize with 1-based primal ids.
    def to_dict(self) -> Dict[str, Any]:
        """Serialize the path for JSON reports."""
        return {
            "faces": list(self.faces),
            "dual_edges": list(self.edges),
            "crossed": [[u + 1, v + 1] for u, v in self.crossed],
        }


# Enable dataclass generation for path triples.
@dataclass(frozen=True)
# Represent three edge-disjoint dual paths between two faces.
class PathTriple:
    """Three pairwise edge-disjoint dual paths from face_min to face_max."""

    # The three paths.
    paths: Tuple[DualPath, DualPath, DualPath]
    # Either VERTEX_DISJOINT or EDGE_DISJOINT.
    disjointness: str
    # Start face.
    source: int
    # End face.
    target: int

    # All dual edge ids used.
    def edge_ids(self) -> Tuple[int, ...]:
        """Return every dual edge id across the three paths."""
        return tuple(edge for path in self.paths for edge in path.edges)

    # All primal edges crossed.
    def crossed(self) -> Tuple[Edge, ...]:
        """Return every crossed primal edge."""
        return tuple(edge for path in self.paths for edge in path.crossed)

    # Serialize for JSON reports.
    def to_dict(self) -> Dict[str, Any]:
        """Serialize the triple for JSON reports."""
        return {
            "source": self.source,
            "target": self.target,
            "disjointness": self.disjointness,
            "paths": [path.to_dict() for path in self.paths],
        }


# Enable dataclass generation for extraction results.
@dataclass(frozen=True)
# Represent the verified outcome of partition extraction.
class ExtractionResult:
    """Partition cut by a path triple, its verification report and the attempt used."""

    # Extracted partition.
    partition: ThreePartition
    # Path triple that produced the cut.
    paths: PathTriple
    # Circulation report on the original field.
    report: CirculationReport
    # Zero-based attempt index (scan offset).
    attempt: int
    # Whether each part induces a connected subgraph of the flux support.
    connected_parts: Tuple[bool, bool, bool]
    # Completion with the outer face triangulated, when the cut needed it.
    triangulated: Optional[TriangulatedGraph] = None
    # Potential on that completion.
    psi: Optional[CurlPotential] = None

    # Whether the outer face was closed for this result.
    @property
    def outer_closed(self) -> bool:
        """Return True when the paths live in the outer-triangulated completion."""
        return self.triangulated is not None

    # Serialize for JSON reports.
    def to_dict(self) -> Dict[str, Any]:
        """Serialize the result for JSON reports."""
        payload = self.partition.to_dict()
        payload.update(
            {
                "connected_parts": list(self.connected_parts),
                "attempt": self.attempt,
                "outer_face_closed": self.outer_closed,
                "paths": self.paths.to_dict(),
            }
        )
        return payload
