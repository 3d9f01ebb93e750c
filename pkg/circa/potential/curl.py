# Document the purpose of the curl potential module.
"""Curl potential on the dual graph and its extrema."""
# Overview: Assigns psi face by face from the outer face and checks every remaining dual edge.
# Details: Crossing a dual edge from the left face to the right face of tail -> head lowers psi by its flux.

# Enable postponed evaluation so annotations can use forward references.
from __future__ import annotations

# Import logging for traversal diagnostics.
import logging
# Import deque for the breadth-first queue.
from collections import deque
# Import typing helpers for path inputs.
from typing import Dict, List, Optional, Sequence, Tuple

# Import numpy for extrema.
import numpy as np

# Import the embedding models.
from circa.embedding.models import DualEdge, DualGraph, TriangulatedGraph
# Import the potential models.
from circa.potential.models import CurlPotential, Extrema
# Import the errors raised here.
from circa.utils.errors import InconsistentPotential, NoSuchFace
# Import default tolerances.
from circa.utils.tolerances import DEFAULT_TOLERANCES, Tolerances

# Build a named logger for the potential package.
LOGGER = logging.getLogger("circa.potential")


# Potential change when crossing an edge away from a face.
def _step(edge: DualEdge, origin: int) -> float:
    return -edge.flux if origin == edge.left else edge.flux


# Compute psi by breadth-first search over the dual.
def compute_psi(
    t: TriangulatedGraph,
    d: Optional[DualGraph] = None,
    tolerances: Tolerances = DEFAULT_TOLERANCES,
) -> CurlPotential:
    """Return psi with psi(outer) = 0 and psi(left) - psi(right) = flux on every dual edge."""
    graph = d if d is not None else t.dual
    incident: Dict[int, List[DualEdge]] = {face: [] for face in range(graph.n_faces)}
    for edge in graph.edges:
        incident[edge.left].append(edge)
        if edge.right != edge.left:
            incident[edge.right].append(edge)

    values: List[Optional[float]] = [None] * graph.n_faces
    values[graph.outer_face] = 0.0
    tree: List[int] = []
    queue = deque([graph.outer_face])
    while queue:
        face = queue.popleft()
        for edge in incident[face]:
            other = edge.other(face)
            if values[other] is None:
                values[other] = values[face] + _step(edge, face)  # type: ignore[operator]
                tree.append(edge.id)
                LOGGER.debug("psi[%d] = %.6g via dual edge %d", other, values[other], edge.id)
                queue.append(other)
    if any(value is None for value in values):
        missing = [face for face, value in enumerate(values) if value is None]
        raise InconsistentPotential("Dual graph is not connected", unreached=missing)

    tree_set = set(tree)
    checks = 0
    worst = 0.0
    for edge in graph.edges:
        if edge.id in tree_set:
            continue
        checks += 1
        residual = values[edge.left] - values[edge.right] - edge.flux  # type: ignore[operator]
        worst = max(worst, abs(residual))
        if abs(residual) > tolerances.psi:
            raise InconsistentPotential(
                f"Dual edge {edge.id} does not close: residual {residual:.3g}",
                edge=edge.id,
                crosses=[edge.tail, edge.head],
                residual=residual,
            )
    LOGGER.info("Curl potential: %d faces, %d closure checks, max residual %.3g", graph.n_faces, checks, worst)
    return CurlPotential(values=tuple(float(value) for value in values), tree_edges=tuple(tree), checks=checks, max_residual=worst)  # type: ignore[arg-type]


# Faces of minimal and maximal potential.
def extrema(psi: CurlPotential) -> Extrema:
    """Return (face_min, face_max); ties go to the lowest face index."""
    values = np.asarray(psi.values)
    return Extrema(face_min=int(np.argmin(values)), face_max=int(np.argmax(values)))


# Largest potential difference.
def max_circulation(psi: CurlPotential) -> float:
    """Return psi_max - psi_min."""
    if not psi.values:
        return 0.0
    return float(max(psi.values) - min(psi.values))


# Every pair of faces achieving the largest difference.
def extrema_pairs(psi: CurlPotential, tol: float = 0.0) -> List[Tuple[int, int]]:
    """Return all (face_min, face_max) pairs whose difference is within tol of the maximum."""
    if psi.is_flat:
        return []
    low, high = min(psi.values), max(psi.values)
    minima = [face for face, value in enumerate(psi.values) if value <= low + tol]
    maxima = [face for face, value in enumerate(psi.values) if value >= high - tol]
    return [(a, b) for a in minima for b in maxima]


# Signed flux across a walk in the dual.
def dual_path_flux(dual: DualGraph, start: int, edge_ids: Sequence[int]) -> float:
    """Return the change of psi along a dual walk from start through the given edges."""
    by_id = {edge.id: edge for edge in dual.edges}
    face = start
    total = 0.0
    for edge_id in edge_ids:
        edge = by_id[edge_id]
        if face not in (edge.left, edge.right):
            raise NoSuchFace(f"Dual edge {edge_id} does not touch face {face}", edge=edge_id, face=face)
        if edge.left == edge.right:
            continue
        total += _step(edge, face)
        face = edge.other(face)
    return total
