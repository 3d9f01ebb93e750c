# Document the purpose of the Markov operations module.
"""Stationary distribution, probability currents and net flux."""
# Overview: Implements the Markov side of the pipeline and the inverse construction from a flux field.
# Details: Pure functions on immutable models; tolerances default to DEFAULT_TOLERANCES.

# Enable postponed evaluation so annotations can use forward references.
from __future__ import annotations

# Import logging for solver diagnostics.
import logging
# Import typing helpers for edge lists.
from typing import Iterable, Sequence, Tuple

# Import networkx to re-check strong connectivity before solving.
import networkx as nx
# Import numpy for the linear algebra.
import numpy as np

# Import the flow field models.
from circa.flowfield.models import (
    NetFluxField,
    ProbabilityCurrent,
    StationaryDistribution,
    TransitionMatrix,
    transition_graph,
)
# Import the domain errors raised here.
from circa.utils.errors import (
    DimensionMismatch,
    InfeasibleMass,
    NonConvergence,
    NotDivergenceFree,
    NotErgodic,
    ZeroColumn,
)
# Import default tolerances.
from circa.utils.tolerances import DEFAULT_TOLERANCES, Tolerances

# Build a named logger for the flow field package.
LOGGER = logging.getLogger("circa.flowfield")

# Iteration cap for the power-iteration fallback.
DEFAULT_MAX_ITER = 10_000

# Supported symmetric mass placements for markov_from_flow.
MASS_PLACEMENTS = ("uniform-offdiagonal", "uniform-diagonal-plus", "uniform-all")


# Infinity-norm residual of pi^T Pi = pi^T.
def _stationarity_residual(entries: np.ndarray, pi: np.ndarray) -> float:
    return float(np.max(np.abs(pi @ entries - pi))) if pi.size else 0.0


# Solve (Pi^T - I) x = 0 with sum(x) = 1 replacing the last equation.
def _direct_solve(entries: np.ndarray) -> np.ndarray:
    n = entries.shape[0]
    system = entries.T - np.eye(n)
    # The normalisation row makes the singular system uniquely solvable.
    system[-1, :] = 1.0
    rhs = np.zeros(n)
    rhs[-1] = 1.0
    return np.linalg.solve(system, rhs)


# Power iteration on the lazy chain (I + Pi) / 2, which shares pi and is aperiodic.
def _power_iteration(entries: np.ndarray, tol: float, max_iter: int) -> Tuple[np.ndarray, int]:
    n = entries.shape[0]
    lazy = 0.5 * (np.eye(n) + entries)
    pi = np.full(n, 1.0 / n)
    for iteration in range(1, max_iter + 1):
        updated = pi @ lazy
        updated /= updated.sum()
        if np.max(np.abs(updated - pi)) < tol * 1e-3:
            return updated, iteration
        pi = updated
    return pi, max_iter


# Compute the stationary distribution of a transition matrix.
def stationary_distribution(
    tm: TransitionMatrix,
    tol: float | None = None,
    max_iter: int = DEFAULT_MAX_ITER,
    tolerances: Tolerances = DEFAULT_TOLERANCES,
) -> StationaryDistribution:
    """Return pi with pi^T Pi = pi^T and sum(pi) = 1.

    A direct solve is used first; power iteration on the lazy chain is the
    fallback when the direct system is singular or the result fails its
    residual or positivity check.
    """
    # Default the residual tolerance to the fixed-point tolerance.
    tol = tolerances.fix if tol is None else tol
    entries = tm.entries
    # Strong connectivity is what makes pi unique and positive.
    if not nx.is_strongly_connected(transition_graph(entries)):
        raise NotErgodic("Transition graph is not strongly connected")
    if not tm.is_aperiodic():
        LOGGER.warning("Transition graph is periodic; stationary distribution is still unique")

    method = "direct"
    iterations = 0
    try:
        pi = _direct_solve(entries)
        residual = _stationarity_residual(entries, pi)
        usable = residual < tol and np.all(pi > 0)
    except np.linalg.LinAlgError:
        usable = False
    if not usable:
        LOGGER.info("Direct stationary solve rejected; falling back to power iteration")
        pi, iterations = _power_iteration(entries, tol, max_iter)
        method = "power"
    # Normalise and post-check the fixed point.
    pi = pi / pi.sum()
    residual = _stationarity_residual(entries, pi)
    if residual >= tol:
        raise NonConvergence(
            f"Stationary residual {residual:.3g} exceeds {tol:.3g}",
            iterations=iterations or max_iter,
            residual=residual,
        )
    if np.any(pi <= 0):
        raise NotErgodic("Stationary distribution has a non-positive entry")
    LOGGER.debug("Stationary distribution via %s, residual=%.3g", method, residual)
    frozen = np.array(pi, dtype=float)
    frozen.setflags(write=False)
    return StationaryDistribution(probabilities=frozen, residual=residual, method=method)


# Compute the probability current matrix.
def probability_current(
    tm: TransitionMatrix,
    pi: StationaryDistribution,
    tolerances: Tolerances = DEFAULT_TOLERANCES,
) -> ProbabilityCurrent:
    """Return P = diag(pi) Pi."""
    if tm.n != pi.n:
        raise DimensionMismatch(f"Transition matrix has {tm.n} states, distribution has {pi.n}", left=tm.n, right=pi.n)
    # Scale each row by its stationary probability; zeros stay zeros.
    entries = pi.probabilities[:, None] * tm.entries
    total = float(entries.sum())
    if abs(total - 1.0) > tolerances.row:
        raise NotDivergenceFree(f"Probability current sums to {total:.12g}, expected 1", residual=abs(total - 1.0))
    # Stationarity makes inflow equal outflow at every state.
    balance = float(np.max(np.abs(entries.sum(axis=1) - entries.sum(axis=0))))
    if balance > tolerances.fix:
        raise NotDivergenceFree(f"Probability current is unbalanced by {balance:.3g}", residual=balance)
    entries.setflags(write=False)
    return ProbabilityCurrent(entries=entries)


# Compute the antisymmetric net flux.
def net_flux(p: ProbabilityCurrent, tolerances: Tolerances = DEFAULT_TOLERANCES) -> NetFluxField:
    """Return F = P - P^T."""
    return NetFluxField.from_matrix(p.entries - p.entries.T, tolerances=tolerances)


# Positive part of a flux field.
def positive_part(f: NetFluxField) -> np.ndarray:
    """Return F_+ = max(F, 0) entrywise."""
    return np.maximum(f.matrix, 0.0)


# Project an antisymmetric matrix onto the divergence-free subspace.
def center_flux(matrix: Sequence[Sequence[float]] | np.ndarray) -> np.ndarray:
    """Return (I - 11^T/N) F (I - 11^T/N)."""
    full = np.array(matrix, dtype=float)
    n = full.shape[0]
    projector = np.eye(n) - np.full((n, n), 1.0 / n)
    centered = projector @ full @ projector
    # Re-antisymmetrise to remove rounding asymmetry.
    return 0.5 * (centered - centered.T)


# Build a flux field from (u, v, flux) triples with 0-based vertex ids.
def net_flux_from_edges(
    n: int,
    edges: Iterable[Tuple[int, int, float]],
    tolerances: Tolerances = DEFAULT_TOLERANCES,
    require_divergence_free: bool = True,
) -> NetFluxField:
    """Return the field with F[u, v] = flux and F[v, u] = -flux per edge."""
    matrix = np.zeros((n, n))
    for u, v, value in edges:
        if not (0 <= u < n and 0 <= v < n) or u == v:
            raise DimensionMismatch(f"Flux edge ({u}, {v}) is out of range for n={n}", u=u, v=v, n=n)
        matrix[u, v] += value
        matrix[v, u] -= value
    return NetFluxField.from_matrix(matrix, tolerances=tolerances, require_divergence_free=require_divergence_free)


# Build the symmetric mass matrix M for markov_from_flow.
def _mass_matrix(f: NetFluxField, mass: float, placement: str) -> np.ndarray:
    n = f.n
    if placement == "uniform-all":
        return np.full((n, n), mass / (n * n))
    if placement == "uniform-offdiagonal":
        if n < 2:
            return np.full((n, n), mass)
        matrix = np.full((n, n), mass / (n * (n - 1)))
        np.fill_diagonal(matrix, 0.0)
        return matrix
    if placement == "uniform-diagonal-plus":
        pairs = f.support_pairs()
        matrix = np.zeros((n, n))
        # With no support edge, everything lands on the diagonal.
        diagonal_share = mass if not pairs else mass / 2.0
        np.fill_diagonal(matrix, diagonal_share / n)
        for i, j in pairs:
            matrix[i, j] = matrix[j, i] = (mass - diagonal_share) / (2 * len(pairs))
        return matrix
    raise ValueError(f"Unknown mass placement: {placement} (expected one of {', '.join(MASS_PLACEMENTS)})")


# Construct a Markov chain whose stationary net flux is the given field.
def markov_from_flow(
    f: NetFluxField,
    mass_placement: str = "uniform-offdiagonal",
    tolerances: Tolerances = DEFAULT_TOLERANCES,
) -> TransitionMatrix:
    """Return Pi = diag(pi)^-1 (M + F_+) with pi^T = 1^T (M + F_+)."""
    plus = positive_part(f)
    mass = 1.0 - float(plus.sum())
    if mass < -tolerances.row:
        raise InfeasibleMass(f"1^T F_+ 1 = {1.0 - mass:.12g} exceeds 1", total=1.0 - mass)
    if abs(mass) <= tolerances.row:
        # Equality branch: the positive part alone is the current.
        LOGGER.info("Positive flux mass is 1; using P = F_+")
        current = plus
    else:
        current = _mass_matrix(f, mass, mass_placement) + plus
    pi = current.sum(axis=0)
    if np.any(pi <= 0):
        column = int(np.argmin(pi))
        raise ZeroColumn(f"Vertex {column} receives zero stationary mass", vertex=column)
    # Rows of diag(pi)^-1 P sum to one because P 1 = P^T 1.
    return TransitionMatrix.from_rows(current / pi[:, None], tolerances=tolerances)
