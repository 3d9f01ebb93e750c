# Document the purpose of the circulation module.
"""Pair fluxes, boundaries and circulation of a 3-partition."""
# Overview: Evaluates I_X^T F I_Y, boundary edge sets and density fluxes.
# Details: The equality of the three cyclic pair fluxes is asserted, not assumed.

# Enable postponed evaluation so annotations can use forward references.
from __future__ import annotations

# Import typing helpers for label arguments.
from typing import Any

# Import numpy for the bilinear forms.
import numpy as np

# Import the flux field model.
from circa.flowfield.models import NetFluxField
# Import the partition models.
from circa.partition.models import CYCLIC_PAIRS, Boundary, CirculationReport, ThreePartition, label_index
# Import the errors raised here.
from circa.utils.errors import DimensionMismatch, EmptyBoundary, LemmaViolation
# Import default tolerances.
from circa.utils.tolerances import DEFAULT_TOLERANCES, Tolerances


# Guard against fields and partitions of different sizes.
def _check_sizes(f: NetFluxField, p: ThreePartition) -> None:
    if f.n != p.n:
        raise DimensionMismatch(f"Flux field has {f.n} vertices, partition has {p.n}", left=f.n, right=p.n)


# Signed flux from one part to another.
def pair_flux(f: NetFluxField, p: ThreePartition, source: Any, target: Any) -> float:
    """Return I_source^T F I_target."""
    # Refuse mismatched sizes before the matrix product.
    _check_sizes(f, p)
    # Sum F over source rows and target columns.
    return float(p.indicator(source) @ f.matrix @ p.indicator(target))


# Support edges between two parts.
def boundary(f: NetFluxField, p: ThreePartition, source: Any, target: Any) -> Boundary:
    """Return the non-zero-flux edges with one endpoint in each part."""
    _check_sizes(f, p)
    # Accept labels as letters or indices.
    first, second = label_index(source), label_index(target)
    # Keep support pairs whose endpoints sit in the two parts.
    edges = tuple(
        (i, j)
        for i, j in f.support_pairs()
        if {p.labels[i], p.labels[j]} == {first, second} and first != second
    )
    return Boundary(from_part=first, to_part=second, edges=edges)


# Full circulation report for a partition.
def circulation(
    f: NetFluxField,
    p: ThreePartition,
    tolerances: Tolerances = DEFAULT_TOLERANCES,
) -> CirculationReport:
    """Return the circulation report of p under f."""
    _check_sizes(f, p)
    # A to B, B to C and C to A.
    fluxes = tuple(pair_flux(f, p, a, b) for a, b in CYCLIC_PAIRS)
    # Row-sum errors accumulate over at most n rows.
    limit = tolerances.div * max(f.n, 1)
    # The three values agree on divergence-free fields.
    spread = max(fluxes) - min(fluxes)
    if spread > limit:
        raise LemmaViolation(
            f"Cyclic pair fluxes disagree by {spread:.3g}; the field is not divergence-free",
            pair_fluxes=list(fluxes),
        )
    value = abs(float(np.mean(fluxes)))
    # Edge sets behind each pair flux.
    boundaries = tuple(boundary(f, p, a, b) for a, b in CYCLIC_PAIRS)
    # Per-edge density, undefined where a boundary is empty.
    densities = []
    undefined = []
    for pair_value, edge_set in zip(fluxes, boundaries):
        if edge_set.size == 0:
            # Flux only moves along support edges, so an empty boundary must carry none.
            if abs(pair_value) > limit:
                raise EmptyBoundary(
                    "Non-zero flux between parts that share no edge",
                    from_part=edge_set.from_part,
                    to_part=edge_set.to_part,
                )
            densities.append(0.0)
            undefined.append(True)
        else:
            densities.append(abs(pair_value) / edge_set.size)
            undefined.append(False)
    # Extremes over the defined densities only.
    defined = [density for density, missing in zip(densities, undefined) if not missing]
    return CirculationReport(
        circulation=value,
        pair_fluxes=fluxes,  # type: ignore[arg-type]
        density_fluxes=tuple(densities),  # type: ignore[arg-type]
        undefined=tuple(undefined),  # type: ignore[arg-type]
        f_min=min(defined) if defined else 0.0,
        f_max=max(defined) if defined else 0.0,
        boundaries=boundaries,  # type: ignore[arg-type]
    )
