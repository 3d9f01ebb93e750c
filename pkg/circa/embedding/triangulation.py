# Document the purpose of the triangulation module.
"""Zero-flux chordal completion of an embedded flow graph."""
# Overview: Splits every interior face (and optionally the outer face) into triangles by adding chords.
# Details: Explicit chords are applied first; remaining faces are fanned from their lowest-index vertex.

# Enable postponed evaluation so annotations can use forward references.
from __future__ import annotations

# Import logging for chord diagnostics.
import logging
# Import typing helpers for chord lists.
from typing import Iterable, List, Optional, Sequence, Tuple

# Import networkx for the half-edge structure.
import networkx as nx

# Import the dual builder for the completed embedding.
from circa.embedding.dual import dual
# Import face tracing helpers.
from circa.embedding.faces import assemble_embedding, check_structure, faces_of
# Import the embedding models.
from circa.embedding.models import Dart, Edge, FlowGraph, PlanarEmbedding, TriangulatedGraph, ccw_neighbors, edge_key
# Import the errors raised here.
from circa.utils.errors import CannotTriangulate, EulerViolation

# Build a named logger for the embedding package.
LOGGER = logging.getLogger("circa.embedding")


# Insert chord walk[i] - walk[j] inside the face traced by walk.
def _split_face(structure: nx.PlanarEmbedding, walk: Sequence[int], i: int, j: int) -> Edge:
    size = len(walk)
    u, v = walk[i], walk[j]
    # The face occupies the wedge just counterclockwise of walk[i+1] at u and of walk[j+1] at v.
    structure.add_half_edge(u, v, cw=walk[(i + 1) % size])
    structure.add_half_edge(v, u, cw=walk[(j + 1) % size])
    LOGGER.debug("Chord %d-%d", u, v)
    return edge_key(u, v)


# Rotation lists that keep each vertex's original first neighbor.
def _rotation(structure: nx.PlanarEmbedding, starts: Sequence[Optional[int]]) -> List[Tuple[int, ...]]:
    return [ccw_neighbors(structure, vertex, first) for vertex, first in enumerate(starts)]


# Faces that still need chords, with the outer face located by its root dart.
def _faces(structure: nx.PlanarEmbedding, starts: Sequence[Optional[int]], root: Dart) -> Tuple[List[Tuple[int, ...]], int]:
    faces = faces_of(structure, _rotation(structure, starts))
    for index, walk in enumerate(faces):
        size = len(walk)
        if any((walk[k], walk[(k + 1) % size]) == root for k in range(size)):
            return faces, index
    raise CannotTriangulate("Outer face was lost during chord insertion", root=list(root))


# Choose a fan apex and chord targets for one face.
def _fan(structure: nx.PlanarEmbedding, walk: Sequence[int]) -> Optional[List[int]]:
    size = len(walk)
    start = walk.index(min(walk))
    for step in range(size):
        apex_at = (start + step) % size
        cycle = [walk[(apex_at + k) % size] for k in range(size)]
        apex, targets = cycle[0], cycle[2 : size - 1]
        if apex in cycle[1:]:
            continue
        if len(set(targets)) != len(targets):
            continue
        if any(structure.has_edge(apex, target) for target in targets):
            continue
        return cycle
    return None


# Apply one user-requested chord.
def _apply_chord(
    structure: nx.PlanarEmbedding,
    starts: Sequence[Optional[int]],
    root: Dart,
    chord: Edge,
    include_outer: bool,
) -> Edge:
    a, b = chord
    if a == b or structure.has_edge(a, b):
        raise CannotTriangulate(f"Chord {a}-{b} duplicates an edge or is a loop", chord=[a, b])
    faces, outer = _faces(structure, starts, root)
    for index, walk in enumerate(faces):
        if index == outer and not include_outer:
            continue
        if a not in walk or b not in walk:
            continue
        i, j = walk.index(a), walk.index(b)
        # Adjacent positions would duplicate a boundary edge.
        if (i - j) % len(walk) in (1, len(walk) - 1):
            continue
        return _split_face(structure, walk, i, j)
    raise CannotTriangulate(f"No face admits the chord {a}-{b}", chord=[a, b])


# Triangulate an embedded flow graph.
def triangulate(
    g: FlowGraph,
    e: PlanarEmbedding,
    include_outer: bool = False,
    chords: Iterable[Tuple[int, int]] = (),
) -> TriangulatedGraph:
    """Return the chordal completion of g with zero-flux chords.

    Every interior face (and the outer face when include_outer is set)
    ends with boundary length 3. Explicit chords are inserted first into
    the first face containing both endpoints non-adjacently.
    """
    structure = e.structure.copy()
    # Rotations are read back starting from each vertex's original first neighbor.
    starts = [around[0] if around else None for around in e.rotation]
    outer_walk = e.faces[e.outer_face]
    root: Dart = (outer_walk[0], outer_walk[1 % len(outer_walk)])
    added: List[Edge] = []
    for chord in chords:
        added.append(_apply_chord(structure, starts, root, edge_key(int(chord[0]), int(chord[1])), include_outer))

    while True:
        faces, outer = _faces(structure, starts, root)
        pending = [
            (index, walk)
            for index, walk in enumerate(faces)
            if len(walk) > 3 and (include_outer or index != outer)
        ]
        if not pending:
            break
        index, walk = pending[0]
        cycle = _fan(structure, walk)
        if cycle is None:
            raise CannotTriangulate(f"No fan apex triangulates face {list(walk)}", face=list(walk))
        while len(cycle) > 3:
            added.append(_split_face(structure, cycle, 0, 2))
            cycle = [cycle[0]] + cycle[2:]

    faces, outer = _faces(structure, starts, root)
    embedding = assemble_embedding(_rotation(structure, starts), faces, outer, e.coords, structure)
    if embedding.euler_characteristic() != 2:
        raise EulerViolation(
            f"Triangulated embedding has V - E + F = {embedding.euler_characteristic()}",
            characteristic=embedding.euler_characteristic(),
        )
    check_structure(structure)
    LOGGER.info("Triangulation added %d chords (include_outer=%s)", len(added), include_outer)
    return TriangulatedGraph(
        base=g,
        base_embedding=e,
        chords=tuple(added),
        embedding=embedding,
        dual=dual(embedding, g),
        include_outer=include_outer,
    )
