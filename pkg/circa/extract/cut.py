# Document the purpose of the cut module.
"""Partition extraction from dual paths and its verification."""
# Overview: Removes the primal edges crossed by a path triple and reads the parts off the components.
# Details: extract_partition retries with rotated scan orders, then once more with the outer face closed.

# Enable postponed evaluation so annotations can use forward references.
from __future__ import annotations

# Import logging for extraction diagnostics.
import logging
# Import replace to attach the closed completion.
from dataclasses import replace
# Import typing helpers for result tuples.
from typing import Optional, Tuple

# Import networkx for connected components.
import networkx as nx

# Import the flux field model.
from circa.flowfield.models import NetFluxField
# Import the embedding model.
from circa.embedding.models import TriangulatedGraph
# Import the triangulation used to close the outer face.
from circa.embedding.triangulation import triangulate
# Import the extraction models.
from circa.extract.models import ExtractionResult, PathTriple
# Import the path search.
from circa.extract.paths import three_disjoint_paths
# Import the partition operations.
from circa.partition.circulation import circulation
from circa.partition.enumeration import support_graph
from circa.partition.models import CirculationReport, ThreePartition, validate_partition
# Import the potential operations.
from circa.potential.curl import compute_psi, extrema, max_circulation
from circa.potential.models import CurlPotential
# Import the errors raised here.
from circa.utils.errors import BadComponentCount, CircaError, InsufficientConnectivity, MismatchCirculation, SameFace
# Import default tolerances.
from circa.utils.tolerances import DEFAULT_TOLERANCES, Tolerances

# Build a named logger for the extract package.
LOGGER = logging.getLogger("circa.extract")

# Number of scan orders tried before giving up.
DEFAULT_DECOMPOSITION_ATTEMPTS = 16


# Cut the triangulated graph along a path triple.
def cut_partition(t: TriangulatedGraph, paths: PathTriple) -> ThreePartition:
    """Return the 3-partition formed by the components left after removing crossed edges.

    Parts are labelled A, B, C by ascending smallest vertex.
    """
    graph = t.to_networkx()
    graph.remove_edges_from(paths.crossed())
    components = sorted((sorted(part) for part in nx.connected_components(graph)), key=lambda part: part[0])
    if len(components) != 3:
        raise BadComponentCount(
            f"Cutting along the dual paths leaves {len(components)} components",
            k=len(components),
            components=components,
        )
    labels = [0] * t.n
    for index, part in enumerate(components):
        for vertex in part:
            labels[vertex] = index
    return validate_partition(labels, t.n)


# Whether each part induces a connected subgraph of the flux support.
def part_connectivity(f: NetFluxField, p: ThreePartition) -> Tuple[bool, bool, bool]:
    """Return the connectivity flag of A, B and C in the support of f."""
    graph = support_graph(f)
    return tuple(nx.is_connected(graph.subgraph(part)) for part in p.parts)  # type: ignore[return-value]


# Check that a partition achieves the potential gap.
def verify_partition(
    f: NetFluxField,
    p: ThreePartition,
    psi: CurlPotential,
    tolerances: Tolerances = DEFAULT_TOLERANCES,
) -> CirculationReport:
    """Return the circulation report after checking it equals psi_max - psi_min."""
    report = circulation(f, p, tolerances=tolerances)
    expected = max_circulation(psi)
    limit = tolerances.psi * max(len(f.support_pairs()), 1)
    if abs(report.circulation - expected) > limit:
        raise MismatchCirculation(
            f"Partition circulation {report.circulation:.6g} differs from the potential gap {expected:.6g}",
            got=report.circulation,
            expected=expected,
        )
    return report


# Try every scan order on one triangulation.
def _extract_on(
    t: TriangulatedGraph,
    psi: CurlPotential,
    f: NetFluxField,
    source: int,
    target: int,
    attempts: int,
    tolerances: Tolerances,
) -> ExtractionResult:
    last_error: Optional[CircaError] = None
    for attempt in range(max(1, attempts)):
        paths = three_disjoint_paths(t.dual, source, target, scan_offset=attempt)
        try:
            partition = cut_partition(t, paths)
            report = verify_partition(f, partition, psi, tolerances=tolerances)
        except (BadComponentCount, MismatchCirculation) as error:
            LOGGER.warning("Attempt %d rejected: %s", attempt, error.message)
            last_error = error
            continue
        LOGGER.info("Extracted partition on attempt %d (%s paths)", attempt, paths.disjointness)
        return ExtractionResult(
            partition=partition,
            paths=paths,
            report=report,
            attempt=attempt,
            connected_parts=part_connectivity(f, partition),
        )
    # The loop runs at least once, so an error was recorded.
    raise last_error  # type: ignore[misc]


# Triangulate the outer face of an inner-only completion.
def close_outer_face(t: TriangulatedGraph) -> TriangulatedGraph:
    """Return t with zero-flux chords added inside the outer face as well.

    Interior faces and the chords already present are kept.
    """
    closed = triangulate(t.base, t.embedding, include_outer=True)
    return replace(closed, base_embedding=t.base_embedding, chords=t.chords + closed.chords)


# Face of the closed completion that lies inside a face of t.
def _face_after_closing(t: TriangulatedGraph, closed: TriangulatedGraph, face: int) -> int:
    walk = t.embedding.faces[face]
    return closed.embedding.face_of_dart(walk[0], walk[1 % len(walk)])


# Extract a verified maximal-circulation partition.
def extract_partition(
    t: TriangulatedGraph,
    psi: CurlPotential,
    field: Optional[NetFluxField] = None,
    attempts: int = DEFAULT_DECOMPOSITION_ATTEMPTS,
    tolerances: Tolerances = DEFAULT_TOLERANCES,
    faces: Optional[Tuple[int, int]] = None,
    close_outer: bool = True,
) -> ExtractionResult:
    """Return the partition cut by three dual paths between the extremal faces.

    When every scan order fails and the outer face is still open, the outer
    face is triangulated with zero-flux chords and the search runs again on
    the closed completion; the potential gap does not change.
    """
    f = field if field is not None else t.base.field
    source, target = faces if faces is not None else extrema(psi)
    if source == target:
        raise SameFace("Potential is flat; no extremal faces to join", face=source)
    try:
        return _extract_on(t, psi, f, source, target, attempts, tolerances)
    except (BadComponentCount, MismatchCirculation, InsufficientConnectivity) as error:
        if not close_outer or t.include_outer or len(t.embedding.faces[0]) <= 3:
            raise
        LOGGER.warning("Extraction with an open outer face failed (%s); closing the outer face", error.message)
    closed = close_outer_face(t)
    closed_psi = compute_psi(closed, tolerances=tolerances)
    ends = (_face_after_closing(t, closed, source), _face_after_closing(t, closed, target))
    result = _extract_on(closed, closed_psi, f, ends[0], ends[1], attempts, tolerances)
    return replace(result, triangulated=closed, psi=closed_psi)
