# Document the purpose of the embedding domain model module.
"""Flow graph, planar embedding, dual graph and triangulation models."""
# Overview: Immutable records for the combinatorial side of the pipeline.
# Details: Vertices are 0-based; faces are vertex walks with the face on the left of every dart.

# Enable postponed evaluation so annotations can use forward references.
from __future__ import annotations

# Import dataclass helpers for the immutable records.
from dataclasses import dataclass, field, replace
# Import typing helpers for the nested tuples.
from typing import Any, Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

# Import networkx for graph views used by connectivity checks.
import networkx as nx

# Import the flux field model carried by the flow graph.
from circa.flowfield.models import NetFluxField
# Import the errors raised by lookups.
from circa.utils.errors import NoSuchFace

# A directed half-edge (tail, head).
Dart = Tuple[int, int]
# An undirected edge stored as (min, max).
Edge = Tuple[int, int]


# Normalise an undirected edge.
def edge_key(u: int, v: int) -> Edge:
    """Return the pair (min, max)."""
    return (u, v) if u < v else (v, u)


# Enable dataclass generation for flow edges.
@dataclass(frozen=True)
# Represent one directed edge of the flow graph.
class FlowEdge:
    """Support edge oriented along its positive flux."""

    # Vertex the flux leaves.
    tail: int
    # Vertex the flux enters.
    head: int
    # Flux magnitude |F_ij| > 0.
    weight: float
    # Sign of F[min, max] (+1 when min -> max).
    sign: int

    # Undirected key of the edge.
    @property
    def key(self) -> Edge:
        """Return the undirected (min, max) pair."""
        return edge_key(self.tail, self.head)


# Enable dataclass generation for flow graphs.
@dataclass(frozen=True)
# Represent the directed support graph of a flux field.
class FlowGraph:
    """Directed graph with one edge per non-zero flux pair."""

    # Number of vertices.
    n: int
    # Directed edges sorted by undirected key.
    edges: Tuple[FlowEdge, ...]
    # Field the graph was built from.
    field: NetFluxField

    # Undirected edge keys.
    def undirected_edges(self) -> List[Edge]:
        """Return the (min, max) pairs of all edges."""
        return [edge.key for edge in self.edges]

    # Look up the flow edge of an undirected pair.
    def edge(self, u: int, v: int) -> Optional[FlowEdge]:
        """Return the flow edge joining u and v, if any."""
        key = edge_key(u, v)
        for candidate in self.edges:
            if candidate.key == key:
                return candidate
        return None

    # Neighbor lists in ascending order.
    def neighbors(self, vertex: int) -> List[int]:
        """Return the sorted neighbors of a vertex."""
        result = [edge.head if edge.tail == vertex else edge.tail for edge in self.edges if vertex in (edge.tail, edge.head)]
        return sorted(result)

    # Undirected networkx view.
    def to_networkx(self) -> nx.Graph:
        """Return the undirected support graph."""
        graph = nx.Graph()
        graph.add_nodes_from(range(self.n))
        graph.add_edges_from(self.undirected_edges())
        return graph


# Enable dataclass generation for embeddings.
@dataclass(frozen=True)
# Represent a rotation system with its traced faces.
class PlanarEmbedding:
    """Counterclockwise rotation system, face walks and designated outer face.

    Face 0 is always the outer face. Each face is the vertex walk whose
    consecutive pairs are its darts; the face lies to the left of them.
    """

    # Counterclockwise neighbor order per vertex.
    rotation: Tuple[Tuple[int, ...], ...]
    # Face walks with the outer face first.
    faces: Tuple[Tuple[int, ...], ...]
    # Optional 2D point per vertex.
    coords: Optional[Tuple[Tuple[float, float], ...]] = None
    # Dart to face index, derived from faces.
    dart_faces: Mapping[Dart, int] = field(default_factory=dict, compare=False, repr=False)
    # networkx half-edge structure of the rotation.
    structure: Optional[nx.PlanarEmbedding] = field(default=None, compare=False, repr=False)

    # Build the dart lookup and the half-edge structure after construction.
    def __post_init__(self) -> None:
        if not self.dart_faces:
            lookup: Dict[Dart, int] = {}
            for index, walk in enumerate(self.faces):
                for dart in face_darts(walk):
                    lookup[dart] = index
            object.__setattr__(self, "dart_faces", lookup)
        if self.structure is None:
            object.__setattr__(self, "structure", planar_structure(self.rotation))

    # Index of the outer face.
    @property
    def outer_face(self) -> int:
        """Return the outer face index (always 0)."""
        return 0

    # Vertex count.
    @property
    def n(self) -> int:
        """Return the number of vertices."""
        return len(self.rotation)

    # Undirected edges of the embedding.
    def edges(self) -> List[Edge]:
        """Return the sorted (min, max) edge list."""
        return sorted({edge_key(u, v) for u, around in enumerate(self.rotation) for v in around})

    # Counterclockwise neighbors of one vertex.
    def rotation_of(self, vertex: int) -> Tuple[int, ...]:
        """Return the rotation at a vertex."""
        return self.rotation[vertex]

    # Face on the left of a dart.
    def face_of_dart(self, u: int, v: int) -> int:
        """Return the index of the face whose walk contains dart (u, v)."""
        try:
            return self.dart_faces[(u, v)]
        except KeyError:
            raise NoSuchFace(f"No face contains the dart ({u}, {v})", dart=[u, v]) from None

    # Find a face by its vertex set.
    def face_with_vertices(self, vertices: Iterable[int]) -> int:
        """Return the lowest face index whose vertex set equals the given set."""
        wanted = frozenset(vertices)
        for index, walk in enumerate(self.faces):
            if frozenset(walk) == wanted:
                return index
        raise NoSuchFace(f"No face has vertex set {sorted(wanted)}", vertices=sorted(wanted))

    # V - E + F.
    def euler_characteristic(self) -> int:
        """Return |V| - |E| + |F|."""
        return self.n - len(self.edges()) + len(self.faces)

    # Orientable genus from the Euler formula.
    def genus(self) -> int:
        """Return (2 - chi) / 2."""
        return (2 - self.euler_characteristic()) // 2

    # Serialize with 1-based vertex ids.
    def to_dict(self) -> Dict[str, Any]:
        """Serialize the embedding for JSON reports."""
        return {
            "rotation": {str(v + 1): [w + 1 for w in around] for v, around in enumerate(self.rotation)},
            "faces": [[v + 1 for v in walk] for walk in self.faces],
            "outer_face": self.outer_face,
            "euler_characteristic": self.euler_characteristic(),
        }


# Half-edge structure of a counterclockwise rotation system.
def planar_structure(rotation: Sequence[Sequence[int]]) -> nx.PlanarEmbedding:
    """Return the networkx embedding whose counterclockwise order at each vertex follows rotation."""
    structure = nx.PlanarEmbedding()
    structure.add_nodes_from(range(len(rotation)))
    for vertex, around in enumerate(rotation):
        previous = None
        for neighbor in around:
            # cw=previous puts the neighbor just counterclockwise of the one before it.
            structure.add_half_edge(vertex, neighbor, cw=previous)
            previous = neighbor
    return structure


# Counterclockwise neighbors read back from a half-edge structure.
def ccw_neighbors(structure: nx.PlanarEmbedding, vertex: int, first: Optional[int] = None) -> Tuple[int, ...]:
    """Return the counterclockwise rotation at vertex, starting at first when given."""
    order = list(reversed(list(structure.neighbors_cw_order(vertex))))
    if first is not None and first in order:
        start = order.index(first)
        order = order[start:] + order[:start]
    return tuple(order)


# Darts of a face walk.
def face_darts(walk: Sequence[int]) -> List[Dart]:
    """Return the darts (w_k, w_k+1) of a closed walk."""
    return [(walk[k], walk[(k + 1) % len(walk)]) for k in range(len(walk))]


# Enable dataclass generation for dual edges.
@dataclass(frozen=True)
# Represent one dual edge and the primal edge it crosses.
class DualEdge:
    """Dual edge joining the faces on either side of a primal edge."""

    # Dual edge id (primal edges sorted by (min, max)).
    id: int
    # Face on the left of tail -> head.
    left: int
    # Face on the right of tail -> head.
    right: int
    # Tail of the crossed primal edge (positive flux direction).
    tail: int
    # Head of the crossed primal edge.
    head: int
    # Flux along tail -> head, 0 for chords.
    flux: float
    # True when the crossed edge is a zero-flux chord.
    is_chord: bool = False

    # Undirected key of the crossed primal edge.
    @property
    def crossed(self) -> Edge:
        """Return the crossed primal edge as (min, max)."""
        return edge_key(self.tail, self.head)

    # The face across the edge from a given face.
    def other(self, face: int) -> int:
        """Return the opposite endpoint of the dual edge."""
        return self.right if face == self.left else self.left

    # Serialize with 1-based primal vertex ids.
    def to_dict(self) -> Dict[str, Any]:
        """Serialize the dual edge for JSON reports."""
        return {
            "id": self.id,
            "left": self.left,
            "right": self.right,
            "crosses": [self.tail + 1, self.head + 1],
            "flux": self.flux,
            "chord": self.is_chord,
        }


# Enable dataclass generation for dual graphs.
@dataclass(frozen=True)
# Represent the dual multigraph of an embedding.
class DualGraph:
    """Faces as vertices; one edge per primal edge, parallel edges and loops kept."""

    # Number of faces.
    n_faces: int
    # Dual edges by id.
    edges: Tuple[DualEdge, ...]

    # Outer face index.
    @property
    def outer_face(self) -> int:
        """Return the outer face index (always 0)."""
        return 0

    # Dual edges incident to a face, in id order.
    def incident(self, face: int) -> List[DualEdge]:
        """Return the dual edges touching a face."""
        return [edge for edge in self.edges if face in (edge.left, edge.right)]

    # Multigraph view keyed by dual edge id.
    def to_networkx(self) -> nx.MultiGraph:
        """Return the dual as a networkx multigraph."""
        graph = nx.MultiGraph()
        graph.add_nodes_from(range(self.n_faces))
        for edge in self.edges:
            graph.add_edge(edge.left, edge.right, key=edge.id, flux=edge.flux)
        return graph

    # Connectivity of the dual.
    def is_connected(self) -> bool:
        """Return True when every face is reachable from the outer face."""
        return self.n_faces > 0 and nx.is_connected(self.to_networkx())

    # Linear rescaling of every crossed flux.
    def scaled(self, factor: float) -> "DualGraph":
        """Return the dual with every flux multiplied by factor."""
        return replace(self, edges=tuple(replace(edge, flux=edge.flux * factor) for edge in self.edges))

    # Serialize for JSON reports.
    def to_dict(self) -> Dict[str, Any]:
        """Serialize the dual for JSON reports."""
        return {"faces": self.n_faces, "edges": [edge.to_dict() for edge in self.edges]}


# Enable dataclass generation for triangulated graphs.
@dataclass(frozen=True)
# Represent the chordal completion of an embedded flow graph.
class TriangulatedGraph:
    """Flow graph plus zero-flux chords, with the updated embedding and dual."""

    # Flow graph before triangulation.
    base: FlowGraph
    # Embedding before triangulation.
    base_embedding: PlanarEmbedding
    # Added chords as (min, max) pairs in insertion order.
    chords: Tuple[Edge, ...]
    # Embedding after triangulation.
    embedding: PlanarEmbedding
    # Dual of the triangulated embedding.
    dual: DualGraph
    # Whether the outer face was triangulated as well.
    include_outer: bool = False

    # Vertex count.
    @property
    def n(self) -> int:
        """Return the number of vertices."""
        return self.base.n

    # All primal edges including chords.
    def edges(self) -> List[Edge]:
        """Return every primal edge as (min, max)."""
        return self.embedding.edges()

    # Signed flux on any primal pair (chords carry 0).
    def flux(self, u: int, v: int) -> float:
        """Return F[u, v] on the triangulated graph."""
        return self.base.field.flux(u, v)

    # Undirected networkx view including chords.
    def to_networkx(self) -> nx.Graph:
        """Return the undirected triangulated graph."""
        graph = nx.Graph()
        graph.add_nodes_from(range(self.n))
        graph.add_edges_from(self.edges())
        return graph
