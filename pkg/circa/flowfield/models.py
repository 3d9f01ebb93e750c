# Document the purpose of the flow field domain model module.
"""Markov chain and flux field domain models."""
# Overview: Immutable wrappers around the matrices and vectors of the Markov side of the pipeline.
# Details: Constructors validate invariants; arrays are copied and made read-only.

# Enable postponed evaluation so annotations can use forward references.
from __future__ import annotations

# Import dataclass helpers for the immutable records.
from dataclasses import dataclass
# Import typing helpers for serialization payloads.
from typing import Any, Dict, List, Sequence

# Import networkx for the strong connectivity check of the transition graph.
import networkx as nx
# Import numpy for all matrix storage and arithmetic.
import numpy as np

# Import the domain errors raised by the validators.
from circa.utils.errors import (
    DimensionMismatch,
    NegativeEntry,
    NotDivergenceFree,
    NotErgodic,
    NotRowStochastic,
)
# Import default tolerances for the validators.
from circa.utils.tolerances import DEFAULT_TOLERANCES, Tolerances


# Copy an array-like into a read-only float matrix.
def _frozen_matrix(values: Any) -> np.ndarray:
    # Convert the input to a fresh float array.
    matrix = np.array(values, dtype=float)
    # Prevent accidental mutation of the stored value.
    matrix.setflags(write=False)
    return matrix


# Reject anything that is not a square matrix.
def _require_square(matrix: np.ndarray, what: str) -> int:
    if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1]:
        raise DimensionMismatch(f"{what} must be square, got shape {matrix.shape}", shape=list(matrix.shape))
    return int(matrix.shape[0])


# Build the directed graph induced by the non-zero pattern of a matrix.
def transition_graph(matrix: np.ndarray) -> nx.DiGraph:
    """Return the directed graph with an edge wherever the entry is non-zero."""
    graph = nx.DiGraph()
    # Every state is a node even when it has no transitions.
    graph.add_nodes_from(range(matrix.shape[0]))
    # Add one directed edge per non-zero entry.
    rows, cols = np.nonzero(matrix)
    graph.add_edges_from(zip(rows.tolist(), cols.tolist()))
    return graph


# Enable dataclass generation for transition matrices.
@dataclass(frozen=True)
# Represent a validated row-stochastic matrix.
class TransitionMatrix:
    """Row-stochastic transition matrix of an ergodic finite Markov chain."""

    # Stored transition probabilities, read-only.
    entries: np.ndarray

    # Validate and wrap a transition matrix.
    @classmethod
    def from_rows(
        cls,
        rows: Sequence[Sequence[float]] | np.ndarray,
        tolerances: Tolerances = DEFAULT_TOLERANCES,
        normalize_rows: bool = False,
    ) -> "TransitionMatrix":
        """Validate the rows and return a TransitionMatrix."""
        matrix = np.array(rows, dtype=float)
        # Reject non-square input before any arithmetic.
        _require_square(matrix, "transition matrix")
        # Probabilities must be nonnegative.
        if np.any(matrix < 0):
            row, col = np.argwhere(matrix < 0)[0]
            raise NegativeEntry(
                f"Negative transition probability at ({row}, {col})",
                row=int(row),
                col=int(col),
                value=float(matrix[row, col]),
            )
        # Printed matrices with rounded entries can be rescaled row by row.
        if normalize_rows:
            sums = matrix.sum(axis=1)
            if np.any(sums <= 0):
                raise NotRowStochastic("Cannot normalize a row with zero total", row=int(np.argmin(sums)))
            matrix = matrix / sums[:, None]
        # Every row must sum to one within the row tolerance.
        deviation = np.abs(matrix.sum(axis=1) - 1.0)
        if np.any(deviation > tolerances.row):
            row = int(np.argmax(deviation))
            raise NotRowStochastic(
                f"Row {row} sums to {matrix[row].sum():.12g}, expected 1",
                row=row,
                deviation=float(deviation[row]),
            )
        # Ergodicity requires a strongly connected transition graph.
        if not nx.is_strongly_connected(transition_graph(matrix)):
            raise NotErgodic("Transition graph is not strongly connected")
        return cls(entries=_frozen_matrix(matrix))

    # Expose the state count.
    @property
    def n(self) -> int:
        """Return the number of states."""
        return int(self.entries.shape[0])

    # Report aperiodicity; only strong connectivity is enforced.
    def is_aperiodic(self) -> bool:
        """Return True when the transition graph is aperiodic."""
        return bool(nx.is_aperiodic(transition_graph(self.entries)))


# Enable dataclass generation for stationary distributions.
@dataclass(frozen=True)
# Represent the stationary probability vector.
class StationaryDistribution:
    """Stationary probability vector pi with pi^T Pi = pi^T."""

    # Stationary probabilities, read-only.
    probabilities: np.ndarray
    # Infinity-norm residual of the fixed-point equation.
    residual: float = 0.0
    # Name of the solver that produced the vector.
    method: str = "direct"

    # Expose the state count.
    @property
    def n(self) -> int:
        """Return the number of states."""
        return int(self.probabilities.shape[0])

    # Serialize for reports.
    def to_list(self) -> List[float]:
        """Return the probabilities as a plain list."""
        return [float(value) for value in self.probabilities]


# Enable dataclass generation for probability currents.
@dataclass(frozen=True)
# Represent the per-step probability current matrix.
class ProbabilityCurrent:
    """Probability current P = diag(pi) Pi."""

    # Current entries p_ij, read-only.
    entries: np.ndarray

    # Expose the state count.
    @property
    def n(self) -> int:
        """Return the number of states."""
        return int(self.entries.shape[0])


# Enable dataclass generation for net-flux fields.
@dataclass(frozen=True)
# Represent an antisymmetric, divergence-free flux field.
class NetFluxField:
    """Antisymmetric net flux F stored as its strict upper triangle."""

    # Strict upper triangle of F; the lower triangle is derived.
    upper: np.ndarray
    # True when 1^T F_+ 1 <= 1, i.e. the field can come from a Markov chain.
    markov_normalized: bool = False

    # Build a field from a full matrix.
    @classmethod
    def from_matrix(
        cls,
        matrix: Sequence[Sequence[float]] | np.ndarray,
        tolerances: Tolerances = DEFAULT_TOLERANCES,
        require_divergence_free: bool = True,
    ) -> "NetFluxField":
        """Validate antisymmetry and divergence and return the field."""
        full = np.array(matrix, dtype=float)
        n = _require_square(full, "net flux matrix")
        # Antisymmetry must hold before the lower triangle is discarded.
        asymmetry = np.abs(full + full.T)
        if np.any(asymmetry > tolerances.div):
            row, col = np.unravel_index(int(np.argmax(asymmetry)), asymmetry.shape)
            raise NotDivergenceFree(
                f"Flux matrix is not antisymmetric at ({row}, {col})",
                row=int(row),
                col=int(col),
                residual=float(asymmetry[row, col]),
            )
        # Keep the strict upper triangle only; antisymmetry is then structural.
        upper = np.triu(full, k=1)
        # Snap numerical noise to exact zero so the flow graph edge set is stable.
        upper[np.abs(upper) < tolerances.flux] = 0.0
        field = cls(upper=_frozen_matrix(upper))
        # Divergence-free means every row of F sums to zero.
        if require_divergence_free:
            divergence = field.max_divergence()
            if divergence > tolerances.div:
                raise NotDivergenceFree(
                    f"Flux field has divergence {divergence:.3g} (n={n})",
                    residual=divergence,
                    row=int(np.argmax(np.abs(field.matrix.sum(axis=1)))),
                )
        # Record whether the positive part carries at most unit mass.
        total = float(np.maximum(field.matrix, 0.0).sum())
        return cls(upper=field.upper, markov_normalized=total <= 1.0 + tolerances.row)

    # Expose the state count.
    @property
    def n(self) -> int:
        """Return the number of states."""
        return int(self.upper.shape[0])

    # Derive the full antisymmetric matrix.
    @property
    def matrix(self) -> np.ndarray:
        """Return F = U - U^T."""
        return self.upper - self.upper.T

    # Signed flux from u to v.
    def flux(self, u: int, v: int) -> float:
        """Return F[u, v]."""
        if u < v:
            return float(self.upper[u, v])
        return -float(self.upper[v, u])

    # Largest absolute row sum of F.
    def max_divergence(self) -> float:
        """Return max_i |sum_j F_ij|."""
        if self.n == 0:
            return 0.0
        return float(np.max(np.abs(self.matrix.sum(axis=1))))

    # List the non-zero unordered pairs.
    def support_pairs(self) -> List[tuple[int, int]]:
        """Return the (i, j), i < j, pairs with non-zero flux."""
        rows, cols = np.nonzero(self.upper)
        return sorted(zip(rows.tolist(), cols.tolist()))

    # Return a scaled copy of the field.
    def scaled(self, factor: float) -> "NetFluxField":
        """Return the field multiplied by factor."""
        return NetFluxField(upper=_frozen_matrix(self.upper * factor), markov_normalized=self.markov_normalized)

    # Serialize a compact summary for reports.
    def summary(self) -> Dict[str, Any]:
        """Return a JSON-ready summary of the field (1-based vertex ids)."""
        edges = []
        for i, j in self.support_pairs():
            value = float(self.upper[i, j])
            # Orient each edge along its positive flux.
            tail, head = (i, j) if value > 0 else (j, i)
            edges.append({"tail": tail + 1, "head": head + 1, "flux": abs(value)})
        return {
            "n": self.n,
            "edges": edges,
            "total_positive_flux": float(np.maximum(self.matrix, 0.0).sum()),
            "max_divergence": self.max_divergence(),
            "markov_normalized": self.markov_normalized,
        }
