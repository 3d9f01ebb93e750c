# Document the purpose of the dual path module.
"""Unit-capacity max-flow and disjoint dual paths."""
# Overview: Finds three edge-disjoint dual paths between two faces by augmenting paths.
# Details: Vertex splitting is tried first so that the paths share no internal face.

# Enable postponed evaluation so annotations can use forward references.
from __future__ import annotations

# Import logging for search diagnostics.
import logging
# Import deque for breadth-first search.
from collections import deque
# Import dataclass helpers for arcs.
from dataclasses import dataclass
# Import typing helpers for network structures.
from typing import Callable, Dict, List, Optional, Tuple

# Import the dual graph model.
from circa.embedding.models import DualGraph
# Import the path models.
from circa.extract.models import EDGE_DISJOINT, VERTEX_DISJOINT, DualPath, PathTriple
# Import the errors raised here.
from circa.utils.errors import InsufficientConnectivity, OverlappingPaths, SameFace

# Build a named logger for the extract package.
LOGGER = logging.getLogger("circa.extract")

# Capacity for arcs that never limit the flow.
UNBOUNDED = 1 << 30
# Number of paths required between the extremal faces.
PATH_COUNT = 3


# Enable dataclass generation for network arcs.
@dataclass
# Represent one residual arc.
class Arc:
    """Directed arc paired with a reverse arc."""

    # Tail node.
    tail: int
    # Head node.
    head: int
    # Remaining residual capacity.
    capacity: int
    # Index of the paired arc.
    reverse: int
    # Dual edge carried by a forward arc.
    dual_edge: Optional[int] = None
    # False for the zero-capacity reverse arcs.
    forward: bool = True
    # Net flow pushed through the arc.
    flow: int = 0


# Residual network with integral capacities.
class FlowNetwork:
    """Adjacency-list residual network for unit-capacity max-flow."""

    # Create an empty network.
    def __init__(self, nodes: int) -> None:
        self.arcs: List[Arc] = []
        self.adjacency: List[List[int]] = [[] for _ in range(nodes)]

    # Add an arc and its reverse.
    def add_arc(self, tail: int, head: int, capacity: int, dual_edge: Optional[int] = None) -> int:
        """Add tail -> head with the given capacity and return its index."""
        index = len(self.arcs)
        # Forward arc at index, its zero-capacity partner at index + 1.
        self.arcs.append(Arc(tail, head, capacity, index + 1, dual_edge, True))
        self.arcs.append(Arc(head, tail, 0, index, dual_edge, False))
        # Both arcs are scanned from their tails.
        self.adjacency[tail].append(index)
        self.adjacency[head].append(index + 1)
        return index

    # Arcs leaving a node in rotated scan order.
    def scan(self, node: int, offset: int) -> List[int]:
        """Return the arc indices leaving node, rotated by offset."""
        around = self.adjacency[node]
        if not around:
            return []
        shift = offset % len(around)
        return around[shift:] + around[:shift]

    # Breadth-first search for a residual path.
    def _augmenting_path(self, source: int, sink: int, offset: int) -> Optional[List[int]]:
        # Arc used to reach each node; -1 marks the source.
        parent: Dict[int, int] = {source: -1}
        queue = deque([source])
        while queue:
            node = queue.popleft()
            for index in self.scan(node, offset):
                arc = self.arcs[index]
                if arc.capacity <= 0 or arc.head in parent:
                    continue
                parent[arc.head] = index
                if arc.head == sink:
                    # Walk the parent arcs back to the source.
                    path = []
                    cursor = sink
                    while parent[cursor] != -1:
                        path.append(parent[cursor])
                        cursor = self.arcs[parent[cursor]].tail
                    return path[::-1]
                queue.append(arc.head)
        return None

    # Push unit flows until the limit or no path remains.
    def max_flow(self, source: int, sink: int, limit: Optional[int] = None, offset: int = 0) -> int:
        """Return the flow value pushed from source to sink."""
        value = 0
        while limit is None or value < limit:
            path = self._augmenting_path(source, sink, offset)
            if path is None:
                break
            # Push one unit and open the reverse residual.
            for index in path:
                arc = self.arcs[index]
                partner = self.arcs[arc.reverse]
                arc.capacity -= 1
                partner.capacity += 1
                arc.flow += 1
                partner.flow -= 1
            value += 1
            LOGGER.debug("Augmenting path %d: %d arcs", value, len(path))
        return value

    # Split the flow into source-sink walks without loops.
    def decompose(self, source: int, sink: int, count: int, offset: int = 0) -> List[List[int]]:
        """Return count arc-index paths carrying the flow from source to sink."""
        # Units still to assign, per forward arc.
        remaining = {index: arc.flow for index, arc in enumerate(self.arcs) if arc.forward and arc.flow > 0}
        paths = []
        for _ in range(count):
            nodes = [source]
            used: List[int] = []
            node = source
            while node != sink:
                # Follow any arc that still carries unassigned flow.
                index = next(i for i in self.scan(node, offset) if remaining.get(i, 0) > 0)
                remaining[index] -= 1
                node = self.arcs[index].head
                if node in nodes:
                    # Drop the loop just closed.
                    cut = nodes.index(node)
                    nodes, used = nodes[: cut + 1], used[:cut]
                else:
                    nodes.append(node)
                    used.append(index)
            paths.append(used)
        return paths


# Dual edges that join two different faces.
def _proper_edges(dual: DualGraph) -> List[Tuple[int, int, int]]:
    return [(edge.id, edge.left, edge.right) for edge in dual.edges if edge.left != edge.right]


# Network in which every dual edge has unit capacity in each direction.
def _edge_network(dual: DualGraph) -> FlowNetwork:
    network = FlowNetwork(dual.n_faces)
    # One unit each way per dual edge; loops are skipped.
    for edge_id, left, right in _proper_edges(dual):
        network.add_arc(left, right, 1, edge_id)
        network.add_arc(right, left, 1, edge_id)
    return network


# Network in which every face other than the endpoints has unit capacity.
def _split_network(dual: DualGraph, s: int, t: int) -> FlowNetwork:
    # Face f becomes 2f (in) and 2f + 1 (out).
    network = FlowNetwork(2 * dual.n_faces)
    for face in range(dual.n_faces):
        network.add_arc(2 * face, 2 * face + 1, UNBOUNDED if face in (s, t) else 1)
    for edge_id, left, right in _proper_edges(dual):
        network.add_arc(2 * left + 1, 2 * right, 1, edge_id)
        network.add_arc(2 * right + 1, 2 * left, 1, edge_id)
    return network


# Remove flow running both ways along one dual edge.
def _cancel_opposite(network: FlowNetwork) -> None:
    # Forward arcs with flow, grouped by dual edge.
    by_edge: Dict[int, List[Arc]] = {}
    for arc in network.arcs:
        if arc.forward and arc.dual_edge is not None and arc.flow > 0:
            by_edge.setdefault(arc.dual_edge, []).append(arc)
    for arcs in by_edge.values():
        if len(arcs) == 2:
            for arc in arcs:
                arc.flow -= 1


# Turn arc paths into dual paths.
def _dual_paths(
    network: FlowNetwork,
    dual: DualGraph,
    arc_paths: List[List[int]],
    s: int,
    face_of: Callable[[int], int],
) -> Tuple[DualPath, ...]:
    by_id = {edge.id: edge for edge in dual.edges}
    result = []
    for arc_path in arc_paths:
        faces = [s]
        edges = []
        for index in arc_path:
            arc = network.arcs[index]
            # Split arcs inside a face cross no primal edge.
            if arc.dual_edge is None:
                continue
            edges.append(arc.dual_edge)
            faces.append(face_of(arc.head))
        result.append(
            DualPath(
                faces=tuple(faces),
                edges=tuple(edges),
                crossed=tuple(by_id[edge].crossed for edge in edges),
            )
        )
    return tuple(result)


# Check that no dual edge appears twice across a triple.
def check_disjoint(triple: PathTriple) -> PathTriple:
    """Return the triple unchanged, or raise OverlappingPaths when a dual edge repeats."""
    # Path index that first used each dual edge.
    seen: Dict[int, int] = {}
    for index, path in enumerate(triple.paths):
        for edge in path.edges:
            if edge in seen:
                raise OverlappingPaths(
                    f"Dual edge {edge} lies on paths {seen[edge]} and {index}",
                    edge=edge,
                    paths=[seen[edge], index],
                )
            seen[edge] = index
    return triple


# Find three disjoint dual paths between two faces.
def three_disjoint_paths(dual: DualGraph, s: int, t: int, scan_offset: int = 0) -> PathTriple:
    """Return three edge-disjoint s-t paths, internally face-disjoint when possible."""
    if s == t:
        raise SameFace(f"Source and target are the same face {s}", face=s)
    # Face-disjoint paths first.
    split = _split_network(dual, s, t)
    if split.max_flow(2 * s + 1, 2 * t, limit=PATH_COUNT, offset=scan_offset) >= PATH_COUNT:
        arc_paths = split.decompose(2 * s + 1, 2 * t, PATH_COUNT, offset=scan_offset)
        paths = _dual_paths(split, dual, arc_paths, s, lambda node: node // 2)
        return check_disjoint(PathTriple(paths=paths, disjointness=VERTEX_DISJOINT, source=s, target=t))  # type: ignore[arg-type]

    LOGGER.warning("No face-disjoint path triple between faces %d and %d; using edge-disjoint paths", s, t)
    # Fall back to paths that may share faces.
    network = _edge_network(dual)
    value = network.max_flow(s, t, limit=PATH_COUNT, offset=scan_offset)
    if value < PATH_COUNT:
        raise InsufficientConnectivity(
            f"Only {value} edge-disjoint dual paths join faces {s} and {t}",
            k=value,
            source=s,
            target=t,
        )
    # Flow both ways along one edge would reuse it.
    _cancel_opposite(network)
    arc_paths = network.decompose(s, t, PATH_COUNT, offset=scan_offset)
    paths = _dual_paths(network, dual, arc_paths, s, lambda node: node)
    return check_disjoint(PathTriple(paths=paths, disjointness=EDGE_DISJOINT, source=s, target=t))  # type: ignore[arg-type]


# Global edge connectivity of the dual multigraph.
def edge_connectivity(dual: DualGraph) -> int:
    """Return the minimum number of dual edges whose removal disconnects the dual."""
    if dual.n_faces < 2:
        return 0
    # Some minimum cut separates face 0 from another face.
    return min(_edge_network(dual).max_flow(0, target) for target in range(1, dual.n_faces))
