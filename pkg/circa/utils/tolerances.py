# Document the purpose of the tolerance configuration module.
"""Numerical tolerance configuration."""
# Overview: Holds the tolerances every operation checks its post-conditions against.
# Details: Frozen dataclass with defaults plus an override helper for CLI and file options.

# Enable postponed evaluation so annotations can use forward references.
from __future__ import annotations

# Import dataclass helpers for the immutable configuration record.
from dataclasses import asdict, dataclass, fields, replace
# Import typing helpers for override mappings.
from typing import Any, Dict, Mapping


# Enable dataclass generation for the tolerance record.
@dataclass(frozen=True)
# Represent the tolerance set as an immutable value.
class Tolerances:
    """Absolute tolerances used across the pipeline."""

    # Row-sum tolerance for stochastic matrices and total-mass checks.
    row: float = 1e-9
    # Fixed-point tolerance for stationarity and current balance.
    fix: float = 1e-9
    # Divergence tolerance for flux row sums and pair-flux agreement.
    div: float = 1e-9
    # Closure tolerance for curl potential consistency checks.
    psi: float = 1e-9
    # Fluxes below this magnitude are snapped to exact zero.
    flux: float = 1e-12

    # Return a copy with selected tolerances replaced.
    def with_overrides(self, **overrides: float | None) -> "Tolerances":
        """Return a copy with the non-None overrides applied."""
        # Drop unset values so callers can pass optional CLI arguments straight through.
        updates = {key: float(value) for key, value in overrides.items() if value is not None}
        # Reject unknown names early so typos in problem files surface.
        known = {item.name for item in fields(self)}
        # Collect any unknown override names.
        unknown = sorted(set(updates) - known)
        if unknown:
            raise KeyError(f"Unknown tolerance(s): {', '.join(unknown)}")
        return replace(self, **updates)

    # Apply one tolerance to every check except the flux snap threshold.
    def uniform(self, eps: float) -> "Tolerances":
        """Return a copy with row, fix, div and psi all set to eps."""
        return replace(self, row=eps, fix=eps, div=eps, psi=eps)

    # Build tolerances from a JSON-style mapping.
    @classmethod
    def from_mapping(cls, payload: Mapping[str, Any] | None) -> "Tolerances":
        """Build tolerances from an options mapping."""
        return DEFAULT_TOLERANCES.with_overrides(**dict(payload or {}))

    # Serialize the tolerances for reports.
    def to_dict(self) -> Dict[str, float]:
        """Serialize tolerances for JSON reports."""
        return asdict(self)


# Default tolerances shared by all operations.
DEFAULT_TOLERANCES = Tolerances()
