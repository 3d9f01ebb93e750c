# Document the purpose of the enumeration module.
"""Exhaustive search for the maximal-circulation 3-partition."""
# Overview: Enumerates unordered 3-partitions once each and keeps the best by a chosen objective.
# Details: Vertex 0 is always A and the first non-A vertex is always B, which removes label permutations.

# Enable postponed evaluation so annotations can use forward references.
from __future__ import annotations

# Import itertools for the label product.
import itertools
# Import logging for search diagnostics.
import logging
# Import the thread pool used for optional parallel search.
from concurrent.futures import ThreadPoolExecutor
# Import typing helpers for the result record.
from typing import Dict, Iterator, List, NamedTuple, Optional, Tuple

# Import networkx for part connectivity checks.
import networkx as nx
# Import numpy for the pair-flux bilinear form.
import numpy as np

# Import the flux field model.
from circa.flowfield.models import NetFluxField
# Import the circulation report builder for density objectives.
from circa.partition.circulation import circulation
# Import the partition model.
from circa.partition.models import ThreePartition
# Import the errors raised here.
from circa.utils.errors import BadLength, TooLarge
# Import default tolerances.
from circa.utils.tolerances import DEFAULT_TOLERANCES, Tolerances

# Build a named logger for the partition package.
LOGGER = logging.getLogger("circa.partition")

# Largest vertex count accepted by the exhaustive search.
DEFAULT_MAX_N = 12
# Objectives the search can maximise.
OBJECTIVES = ("circulation", "f_min", "f_max")


# Result of an exhaustive search.
class BruteForceResult(NamedTuple):
    """Best partition, its objective value and the number of partitions examined."""

    best: Optional[ThreePartition]
    value: float
    count_examined: int

    # Serialize with 1-based ids.
    def to_dict(self) -> Dict[str, object]:
        """Serialize the result for JSON reports."""
        return {
            "best": self.best.to_dict() if self.best is not None else None,
            "value": self.value,
            "count_examined": self.count_examined,
        }


# Stirling number of the second kind for k = 3.
def stirling3(n: int) -> int:
    """Return S(n, 3) via S(n, k) = k S(n-1, k) + S(n-1, k-1)."""
    # Row of S(m, 0..3), starting at m = 0.
    row = [1, 0, 0, 0]
    for _ in range(n):
        row = [0] + [k * row[k] + row[k - 1] for k in range(1, 4)]
    return row[3]


# Enumerate canonical label vectors.
def iter_partitions(n: int) -> Iterator[Tuple[int, ...]]:
    """Yield each unordered 3-partition of n vertices once, in lexicographic order."""
    if n < 3:
        return
    for tail in itertools.product((0, 1, 2), repeat=n - 1):
        # The first non-A label must be B and C must appear.
        first = next((label for label in tail if label != 0), None)
        if first != 1 or 2 not in tail:
            continue
        yield (0,) + tail


# Undirected support graph of a flux field.
def support_graph(f: NetFluxField) -> nx.Graph:
    """Return the undirected graph of pairs with non-zero flux."""
    graph = nx.Graph()
    graph.add_nodes_from(range(f.n))
    graph.add_edges_from(f.support_pairs())
    return graph


# Check that every part induces a connected subgraph.
def _parts_connected(labels: Tuple[int, ...], adjacency: nx.Graph) -> bool:
    for part in range(3):
        members = [vertex for vertex, label in enumerate(labels) if label == part]
        if not nx.is_connected(adjacency.subgraph(members)):
            return False
    return True


# Evaluate one labeling under the selected objective.
def _objective_value(
    f: NetFluxField,
    matrix: np.ndarray,
    labels: Tuple[int, ...],
    objective: str,
    tolerances: Tolerances,
) -> float:
    if objective == "circulation":
        array = np.asarray(labels)
        return abs(float(matrix[np.ix_(array == 0, array == 1)].sum()))
    report = circulation(f, ThreePartition(labels=labels), tolerances=tolerances)
    return report.f_min if objective == "f_min" else report.f_max


# Search one stride of the enumeration.
def _search_stride(
    f: NetFluxField,
    candidates: List[Tuple[int, ...]],
    offset: int,
    stride: int,
    connected_only: bool,
    adjacency: nx.Graph,
    objective: str,
    tie: float,
    tolerances: Tolerances,
) -> Tuple[Optional[Tuple[int, ...]], float]:
    matrix = f.matrix
    best: Optional[Tuple[int, ...]] = None
    best_value = -np.inf
    for labels in candidates[offset::stride]:
        if connected_only and not _parts_connected(labels, adjacency):
            continue
        value = _objective_value(f, matrix, labels, objective, tolerances)
        # Candidates arrive in lexicographic order, so only strict gains replace the incumbent.
        if value > best_value + tie:
            best, best_value = labels, value
    return best, float(best_value)


# Exhaustive maximal-circulation search.
def brute_force_cmax(
    f: NetFluxField,
    connected_only: bool = False,
    adjacency: Optional[nx.Graph] = None,
    max_n: int = DEFAULT_MAX_N,
    workers: int = 1,
    objective: str = "circulation",
    tolerances: Tolerances = DEFAULT_TOLERANCES,
) -> BruteForceResult:
    """Return the best 3-partition over all S(n, 3) unordered partitions.

    With connected_only, each part must induce a connected subgraph of
    adjacency (the undirected flux support by default). Ties within a
    tolerance relative to max |F| go to the lexicographically smallest
    label vector.
    """
    n = f.n
    if n > max_n:
        raise TooLarge(f"Exhaustive search over n={n} exceeds the limit {max_n}", n=n, max_n=max_n)
    if n < 3:
        raise BadLength(f"A 3-partition needs at least 3 vertices, got {n}", expected=3, got=n)
    if objective not in OBJECTIVES:
        raise ValueError(f"Unknown objective: {objective} (expected one of {', '.join(OBJECTIVES)})")
    graph = adjacency if adjacency is not None else support_graph(f)
    scale = float(np.max(np.abs(f.upper))) if f.n else 0.0
    tie = tolerances.div * max(scale, 1e-300)
    candidates = list(iter_partitions(n))
    workers = max(1, int(workers))
    LOGGER.debug("Searching %d partitions (connected_only=%s, workers=%d)", len(candidates), connected_only, workers)

    if workers == 1:
        results = [_search_stride(f, candidates, 0, 1, connected_only, graph, objective, tie, tolerances)]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            futures = [
                pool.submit(_search_stride, f, candidates, offset, workers, connected_only, graph, objective, tie, tolerances)
                for offset in range(workers)
            ]
            results = [future.result() for future in futures]

    # Merge worker optima; the smallest label vector wins ties.
    best: Optional[Tuple[int, ...]] = None
    best_value = -np.inf
    for labels, value in results:
        if labels is None:
            continue
        if value > best_value + tie or (abs(value - best_value) <= tie and best is not None and labels < best):
            best, best_value = labels, value
    if best is None:
        LOGGER.warning("No partition satisfies the connectivity constraint")
        return BruteForceResult(best=None, value=0.0, count_examined=len(candidates))
    return BruteForceResult(best=ThreePartition(labels=best), value=best_value, count_examined=len(candidates))
