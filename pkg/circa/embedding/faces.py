# Document the purpose of the face tracing module.
"""Flow graph construction, rotation systems and face tracing."""
# Overview: Builds the flow graph of a field and embeds it from coordinates or an explicit rotation.
# Details: Faces come from networkx traverse_face and keep their face on the left of every dart.

# Enable postponed evaluation so annotations can use forward references.
from __future__ import annotations

# Import logging for embedding diagnostics.
import logging
# Import math for angular sorting.
import math
# Import typing helpers for rotation inputs.
from typing import Any, List, Mapping, Optional, Sequence, Tuple, Union

# Import networkx for support connectivity and half-edge structures.
import networkx as nx

# Import the flux field model.
from circa.flowfield.models import NetFluxField
# Import the embedding models.
from circa.embedding.models import FlowEdge, FlowGraph, PlanarEmbedding, face_darts, planar_structure
# Import the errors raised here.
from circa.utils.errors import (
    DimensionMismatch,
    DisconnectedGraph,
    EmptyFlowGraph,
    EulerViolation,
    InvalidRotation,
    IsolatedVertex,
    MissingOuterFace,
    NoSuchFace,
    NotGenusZero,
)

# Build a named logger for the embedding package.
LOGGER = logging.getLogger("circa.embedding")

# Rotation input: list indexed by vertex or mapping vertex -> neighbors.
RotationInput = Union[Sequence[Sequence[int]], Mapping[int, Sequence[int]]]
# Outer face hint: face index or boundary vertex cycle.
OuterHint = Union[int, Sequence[int], None]


# Build the directed support graph of a flux field.
def build_flow_graph(f: NetFluxField) -> FlowGraph:
    """Return the flow graph with edges oriented along positive flux."""
    pairs = f.support_pairs()
    if not pairs:
        raise EmptyFlowGraph("Flux field has no non-zero entry")
    edges = []
    for i, j in pairs:
        value = float(f.upper[i, j])
        tail, head = (i, j) if value > 0 else (j, i)
        edges.append(FlowEdge(tail=tail, head=head, weight=abs(value), sign=1 if value > 0 else -1))
    graph = FlowGraph(n=f.n, edges=tuple(edges), field=f)
    support = graph.to_networkx()
    isolated = sorted(nx.isolates(support))
    if isolated:
        raise IsolatedVertex(f"Vertex {isolated[0]} carries no flux", vertex=isolated[0], isolated=isolated)
    if not nx.is_connected(support):
        raise DisconnectedGraph(
            "Flux support is not connected",
            components=[sorted(part) for part in nx.connected_components(support)],
        )
    LOGGER.debug("Flow graph: %d vertices, %d edges", graph.n, len(graph.edges))
    return graph



# Trace every face of a half-edge structure.
def faces_of(structure: nx.PlanarEmbedding, rotation: Sequence[Sequence[int]]) -> List[Tuple[int, ...]]:
    """Return face walks in discovery order (vertices ascending, rotation order).

    Each walk keeps its face on the left of every dart. networkx walks the
    face on the right of a half-edge, so the walk of (start, first) is read
    backwards from traverse_face(first, start).
    """
    seen = set()
    faces = []
    for start, around in enumerate(rotation):
        for first in around:
            if (start, first) in seen:
                continue
            nodes = structure.traverse_face(first, start)
            walk = (start, first) + tuple(reversed(nodes[2:]))
            seen.update(face_darts(walk))
            faces.append(walk)
    return faces


# Trace every face of a rotation system.
def trace_faces(rotation: Sequence[Sequence[int]]) -> List[Tuple[int, ...]]:
    """Return face walks in discovery order (vertices ascending, rotation order)."""
    return faces_of(planar_structure(rotation), rotation)


# Shoelace signed area of a face walk.
def signed_area(walk: Sequence[int], coords: Sequence[Tuple[float, float]]) -> float:
    """Return the signed area (positive when counterclockwise)."""
    total = 0.0
    for k, u in enumerate(walk):
        v = walk[(k + 1) % len(walk)]
        total += coords[u][0] * coords[v][1] - coords[v][0] * coords[u][1]
    return total / 2.0


# Check that a rotation lists every neighbor exactly once.
def _validate_rotation(g: FlowGraph, rotation: Sequence[Sequence[int]]) -> None:
    if len(rotation) != g.n:
        raise InvalidRotation(f"Rotation covers {len(rotation)} vertices, graph has {g.n}", expected=g.n, got=len(rotation))
    for vertex, around in enumerate(rotation):
        expected = g.neighbors(vertex)
        if len(around) != len(set(around)) or sorted(around) != expected:
            raise InvalidRotation(
                f"Rotation at vertex {vertex} must list its neighbors exactly once",
                vertex=vertex,
                expected=expected,
                got=list(around),
            )


# Run the networkx structure check on a half-edge structure.
def check_structure(structure: nx.PlanarEmbedding) -> None:
    """Raise EulerViolation when networkx rejects the embedding."""
    try:
        structure.check_structure()
    except nx.NetworkXException as error:
        raise EulerViolation(f"Half-edge structure is not a planar embedding: {error}") from None


# Move the outer face to index 0 and build the embedding.
def assemble_embedding(
    rotation: Sequence[Sequence[int]],
    faces: List[Tuple[int, ...]],
    outer: int,
    coords: Optional[Sequence[Tuple[float, float]]],
    structure: Optional[nx.PlanarEmbedding] = None,
) -> PlanarEmbedding:
    ordered = [faces[outer]] + [walk for index, walk in enumerate(faces) if index != outer]
    return PlanarEmbedding(
        rotation=tuple(tuple(around) for around in rotation),
        faces=tuple(ordered),
        coords=tuple((float(x), float(y)) for x, y in coords) if coords is not None else None,
        structure=structure,
    )


# Normalise coordinates given as a list or a vertex mapping.
def _coords_list(coords: Any, n: int) -> List[Tuple[float, float]]:
    if isinstance(coords, Mapping):
        coords = [coords[vertex] for vertex in range(n)]
    points = [(float(point[0]), float(point[1])) for point in coords]
    if len(points) != n:
        raise DimensionMismatch(f"Expected {n} coordinates, got {len(points)}", expected=n, got=len(points))
    return points


# Index of the single clockwise face of a drawing.
def _clockwise_face(faces: Sequence[Tuple[int, ...]], points: Sequence[Tuple[float, float]]) -> Optional[int]:
    negative = [index for index, walk in enumerate(faces) if signed_area(walk, points) < 0]
    return negative[0] if len(negative) == 1 else None


# Embed a straight-line drawing.
def embed_from_coords(g: FlowGraph, coords: Any, outer_face_hint: OuterHint = None) -> PlanarEmbedding:
    """Return the embedding induced by sorting neighbors by angle.

    The outer face is the clockwise face of the drawing unless a hint
    names another one; integer hints index faces in trace order.
    """
    points = _coords_list(coords, g.n)
    rotation = []
    for vertex in range(g.n):
        x, y = points[vertex]
        around = sorted(g.neighbors(vertex), key=lambda w: math.atan2(points[w][1] - y, points[w][0] - x))
        rotation.append(around)
    structure = planar_structure(rotation)
    faces = faces_of(structure, rotation)
    chi = g.n - len(g.edges) + len(faces)
    if chi != 2:
        raise EulerViolation(f"V - E + F = {chi}; the drawing is not crossing-free", characteristic=chi)
    clockwise = _clockwise_face(faces, points)
    if clockwise is None:
        raise EulerViolation(
            "Expected one clockwise face; the drawing is not crossing-free",
            characteristic=chi,
            clockwise_faces=[index for index, walk in enumerate(faces) if signed_area(walk, points) < 0],
        )
    outer = clockwise if outer_face_hint is None else resolve_outer_hint(faces, outer_face_hint)
    LOGGER.debug("Embedded from coordinates: %d faces, outer face walk %s", len(faces), faces[outer])
    return assemble_embedding(rotation, faces, outer, points, structure)


# Resolve an outer face hint against traced faces.
def resolve_outer_hint(faces: Sequence[Tuple[int, ...]], hint: OuterHint) -> int:
    """Return the index of the face named by a trace-order index or a vertex cycle."""
    if hint is None:
        raise MissingOuterFace("An outer face is required when embedding from a rotation system")
    if isinstance(hint, int):
        if not 0 <= hint < len(faces):
            raise MissingOuterFace(f"Outer face {hint} does not exist", face=hint, faces=len(faces))
        return hint
    cycle = [int(vertex) for vertex in hint]
    matches = [index for index, walk in enumerate(faces) if frozenset(walk) == frozenset(cycle) and len(walk) == len(cycle)]
    if len(matches) > 1:
        # Two faces with one vertex set differ by direction; the walk order decides.
        matches = [index for index in matches if _same_cycle(faces[index], cycle)]
    if len(matches) != 1:
        raise MissingOuterFace(f"No unique face matches the outer boundary {cycle}", boundary=cycle)
    return matches[0]


# Compare two cyclic sequences.
def _same_cycle(walk: Sequence[int], cycle: Sequence[int]) -> bool:
    if len(walk) != len(cycle):
        return False
    doubled = list(walk) + list(walk)
    return any(doubled[k : k + len(cycle)] == list(cycle) for k in range(len(walk)))


# Normalise a rotation given as a list or mapping.
def _rotation_list(rotation: RotationInput, n: int) -> List[List[int]]:
    if isinstance(rotation, Mapping):
        return [[int(w) for w in rotation.get(vertex, ())] for vertex in range(n)]
    return [[int(w) for w in around] for around in rotation]


# Embed from an explicit rotation system.
def embed_from_rotation(
    g: FlowGraph,
    rotation: RotationInput,
    outer_face_hint: OuterHint = None,
    coords: Any = None,
) -> PlanarEmbedding:
    """Return the embedding of a rotation system; the outer face comes from the hint or coords."""
    rotation_list = _rotation_list(rotation, g.n)
    _validate_rotation(g, rotation_list)
    structure = planar_structure(rotation_list)
    faces = faces_of(structure, rotation_list)
    chi = g.n - len(g.edges) + len(faces)
    if chi != 2:
        raise NotGenusZero(f"Rotation system has genus {(2 - chi) // 2}", genus=(2 - chi) // 2, faces=len(faces))
    check_structure(structure)
    points = _coords_list(coords, g.n) if coords is not None else None
    if outer_face_hint is None and points is not None:
        clockwise = _clockwise_face(faces, points)
        outer = clockwise if clockwise is not None else resolve_outer_hint(faces, None)
    else:
        outer = resolve_outer_hint(faces, outer_face_hint)
    LOGGER.debug("Embedded from rotation: %d faces, outer face walk %s", len(faces), faces[outer])
    return assemble_embedding(rotation_list, faces, outer, points, structure)


# Designate another face as the outer face.
def reroot_outer_face(e: PlanarEmbedding, face: int) -> PlanarEmbedding:
    """Return the same rotation system with the given face moved to index 0."""
    if not 0 <= face < len(e.faces):
        raise NoSuchFace(f"Face {face} does not exist", face=face, faces=len(e.faces))
    if face == 0:
        return e
    return assemble_embedding(e.rotation, list(e.faces), face, e.coords, e.structure)
