# Document the purpose of the shared test helpers.
"""Builders shared by the unit and integration suites."""
# Overview: Golden values for the eight-state example, the hexagon field and random planar instances.
# Details: Random instances assign a potential to every face and set each edge flux to the potential jump across it.

# Allow future annotations for type hints in tests.
from __future__ import annotations

# Import math for polygon coordinates.
import math
# Import Path for fixture lookup.
from pathlib import Path
# Import typing helpers for builder signatures.
from typing import Dict, FrozenSet, List, Sequence, Tuple

# Import numpy for random fields.
import numpy as np

# Import the embedding operations used to trace faces of random drawings.
from circa.embedding import build_flow_graph, embed_from_coords
# Import the flux field helpers.
from circa.flowfield import NetFluxField, center_flux, net_flux_from_edges

# Directory holding the problem files.
FIXTURES = Path(__file__).resolve().parent / "fixtures"

# Tolerance for values printed with four decimals.
PRINTED_TOL = 5e-4

# Net flux of the eight-state chain as (tail, head, flux), 1-based.
EIGHT_STATE_FLUX = [
    (2, 1, 0.0076),
    (1, 5, 0.0140),
    (7, 1, 0.0160),
    (1, 8, 0.0096),
    (2, 3, 0.0082),
    (2, 4, 0.0099),
    (5, 2, 0.0256),
    (3, 4, 0.0017),
    (6, 3, 0.0025),
    (3, 8, 0.0090),
    (4, 5, 0.0116),
    (6, 8, 0.0115),
    (7, 6, 0.0140),
    (8, 7, 0.0300),
]

# Potential per face of the first embedding, keyed by 1-based vertex set.
G1_PSI: Dict[FrozenSet[int], float] = {
    frozenset({1, 2, 3, 8}): 0.0,
    frozenset({1, 2, 5}): -0.0076,
    frozenset({2, 4, 5}): 0.0181,
    frozenset({2, 3, 4}): 0.0082,
    frozenset({1, 5, 7}): 0.0064,
    frozenset({5, 6, 7}): 0.0064,
    frozenset({4, 5, 6}): 0.0064,
    frozenset({3, 4, 6}): 0.0064,
    frozenset({1, 7, 8}): -0.0096,
    frozenset({6, 7, 8}): 0.0205,
    frozenset({3, 6, 8}): 0.0090,
}

# Potential per face of the second embedding, keyed by 1-based vertex set.
G2_PSI: Dict[FrozenSet[int], float] = {
    frozenset({1, 2, 3, 6, 7}): 0.0,
    frozenset({1, 2, 5}): -0.0076,
    frozenset({2, 4, 5}): 0.0181,
    frozenset({2, 3, 4}): 0.0082,
    frozenset({1, 5, 8}): 0.0064,
    frozenset({4, 5, 8}): 0.0064,
    frozenset({3, 4, 8}): 0.0064,
    frozenset({1, 7, 8}): 0.0160,
    frozenset({6, 7, 8}): -0.0140,
    frozenset({3, 6, 8}): -0.0025,
}


# Convert a 1-based vertex set to 0-based.
def zero_based(vertices: Sequence[int]) -> FrozenSet[int]:
    """Return the 0-based vertex set."""
    return frozenset(vertex - 1 for vertex in vertices)


# Hexagon drawn counterclockwise on the unit circle.
def hexagon_coords() -> List[Tuple[float, float]]:
    """Return six counterclockwise points."""
    return [(math.cos(math.pi * k / 3), math.sin(math.pi * k / 3)) for k in range(6)]


# Unit flux around the hexagon.
def hexagon_field() -> NetFluxField:
    """Return the field with flux 1 on each directed cycle edge k -> k+1."""
    return net_flux_from_edges(6, [(k, (k + 1) % 6, 1.0) for k in range(6)])


# Field with unit flux on every listed edge, ignoring divergence.
def unit_field(n: int, edges: Sequence[Tuple[int, int]]) -> NetFluxField:
    """Return a field whose support is exactly the listed edges."""
    return net_flux_from_edges(n, [(u, v, 1.0) for u, v in edges], require_divergence_free=False)


# Wheel with k rim vertices around hub 0.
def wheel(k: int) -> Tuple[List[Tuple[float, float]], List[Tuple[int, int]]]:
    """Return coordinates and edges of a wheel."""
    coords = [(0.0, 0.0)] + [(math.cos(2 * math.pi * i / k), math.sin(2 * math.pi * i / k)) for i in range(k)]
    edges = [(0, i + 1) for i in range(k)] + [(i + 1, (i + 1) % k + 1) for i in range(k)]
    return coords, edges


# Grid with one diagonal per cell.
def grid(rows: int, cols: int) -> Tuple[List[Tuple[float, float]], List[Tuple[int, int]]]:
    """Return coordinates and edges of a triangulated grid."""
    coords = [(float(c), float(r)) for r in range(rows) for c in range(cols)]
    edges = []
    for r in range(rows):
        for c in range(cols):
            here = r * cols + c
            if c + 1 < cols:
                edges.append((here, here + 1))
            if r + 1 < rows:
                edges.append((here, here + cols))
            if c + 1 < cols and r + 1 < rows:
                edges.append((here, here + cols + 1))
    return coords, edges


# Flux field generated by random face potentials.
def potential_instance(
    coords: Sequence[Tuple[float, float]],
    edges: Sequence[Tuple[int, int]],
    rng: np.random.Generator,
) -> Tuple[NetFluxField, Dict[FrozenSet[int], float]]:
    """Return a divergence-free field on the drawing and the potential used per face vertex set."""
    embedding = embed_from_coords(build_flow_graph(unit_field(len(coords), edges)), coords)
    # The outer face is pinned to zero; interior faces get random values.
    potentials = [0.0] + [float(value) for value in rng.uniform(-1.0, 1.0, size=len(embedding.faces) - 1)]
    by_vertices = {frozenset(walk): potentials[index] for index, walk in enumerate(embedding.faces)}
    return field_from_face_potentials(coords, edges, by_vertices), by_vertices


# Flux field whose potential jump across each edge comes from given face values.
def field_from_face_potentials(
    coords: Sequence[Tuple[float, float]],
    edges: Sequence[Tuple[int, int]],
    potentials: Dict[FrozenSet[int], float],
) -> NetFluxField:
    """Return the field with F[u, v] = potential(left of u -> v) - potential(right); missing faces are 0."""
    n = len(coords)
    embedding = embed_from_coords(build_flow_graph(unit_field(n, edges)), coords)
    values = [potentials.get(frozenset(walk), 0.0) for walk in embedding.faces]
    matrix = np.zeros((n, n))
    for u, v in edges:
        jump = values[embedding.face_of_dart(u, v)] - values[embedding.face_of_dart(v, u)]
        matrix[u, v] = jump
        matrix[v, u] = -jump
    return NetFluxField.from_matrix(matrix)


# Potentials on the 3x3 grid, 0-based, with both extremes in corner triangles.
CORNER_GRID_PSI: Dict[FrozenSet[int], float] = {
    frozenset({1, 2, 5}): 5.0,
    frozenset({3, 6, 7}): -5.0,
    frozenset({0, 1, 4}): 1.0,
    frozenset({0, 3, 4}): -1.0,
    frozenset({1, 4, 5}): 2.0,
    frozenset({3, 4, 7}): -2.0,
    frozenset({4, 5, 8}): 3.0,
    frozenset({4, 7, 8}): -3.0,
}


# Field on the 3x3 grid whose extremal faces each touch a degree-two corner.
def corner_grid_field() -> NetFluxField:
    """Return the corner grid field; its potential gap is 10."""
    coords, edges = grid(3, 3)
    return field_from_face_potentials(coords, edges, CORNER_GRID_PSI)


# Random divergence-free antisymmetric field.
def random_divergence_free(n: int, rng: np.random.Generator, scale: float = 1.0) -> np.ndarray:
    """Return a centered random antisymmetric matrix."""
    raw = rng.normal(size=(n, n))
    return scale * center_flux(raw - raw.T)


# Random labels with every part used.
def random_labels(n: int, rng: np.random.Generator) -> List[int]:
    """Return a random label vector over 0, 1, 2 with all three present."""
    labels = [0, 1, 2] + [int(value) for value in rng.integers(0, 3, size=n - 3)]
    rng.shuffle(labels)
    return labels
