# Document the purpose of the shared error module.
"""Error hierarchy shared by every circa package."""
# Overview: Defines CircaError and one subclass per failure kind.
# Details: Each error carries the module, a machine-readable kind, an exit category and details.

# Enable postponed evaluation so annotations can use forward references.
from __future__ import annotations

# Import typing helpers for the structured details payload.
from typing import Any, Dict

# Exit code used for input validation failures.
EXIT_VALIDATION = 1
# Exit code used for failures inside the analysis pipeline.
EXIT_PIPELINE = 2


# Base class for every domain error raised by circa.
class CircaError(ValueError):
    """Domain error with a module, kind and JSON-ready details."""

    # Name of the package that raised the error.
    module: str = "circa"
    # Machine-readable error kind used in reports.
    kind: str = "error"
    # Either "validation" or "pipeline"; selects the CLI exit code.
    category: str = "pipeline"

    # Store the message and any structured diagnostics.
    def __init__(self, message: str, **details: Any) -> None:
        # Initialise ValueError with the human-readable message.
        super().__init__(message)
        # Keep the message separately for serialization.
        self.message = message
        # Keep structured diagnostics for the JSON error payload.
        self.details: Dict[str, Any] = details

    # Map the error category onto a process exit code.
    @property
    def exit_code(self) -> int:
        """Return the CLI exit code for this error."""
        return EXIT_VALIDATION if self.category == "validation" else EXIT_PIPELINE

    # Serialize the error for the CLI error payload.
    def to_dict(self) -> Dict[str, Any]:
        """Serialize the error for JSON output."""
        return {
            "module": self.module,
            "kind": self.kind,
            "message": self.message,
            "details": self.details,
        }


# Report a problem file that cannot be read or decoded.
class ProblemParseError(CircaError):
    """Problem file is not valid JSON or cannot be read."""

    # Raised while loading problem files.
    module = "cli"
    kind = "parse"
    # Bad input, not a pipeline failure.
    category = "validation"


# Report a decoded problem file with unknown keys or bad values.
class ProblemSchemaError(CircaError):
    """Problem file parses but violates the documented schema."""

    module = "cli"
    kind = "schema"
    category = "validation"


# Report a transition row whose probabilities do not sum to one.
class NotRowStochastic(CircaError):
    """A transition matrix row does not sum to one."""

    # Raised by the flow field stage.
    module = "flowfield"
    kind = "not_row_stochastic"
    category = "validation"


# Report a negative transition probability.
class NegativeEntry(CircaError):
    """A transition matrix holds a negative probability."""

    module = "flowfield"
    kind = "negative_entry"
    category = "validation"


# Report a chain whose transition graph is reducible.
class NotErgodic(CircaError):
    """The transition graph is not strongly connected."""

    module = "flowfield"
    kind = "not_ergodic"
    category = "validation"


# Report inputs with different state counts.
class DimensionMismatch(CircaError):
    """Two inputs disagree on the number of states."""

    module = "flowfield"
    kind = "dimension_mismatch"
    category = "validation"


# Report a stationary solve that never met its residual.
class NonConvergence(CircaError):
    """The stationary solve did not reach the residual tolerance."""

    module = "flowfield"
    # Pipeline category: the input was valid.
    kind = "non_convergence"


# Report a flux matrix with divergence or a symmetric part.
class NotDivergenceFree(CircaError):
    """A flux field is not antisymmetric or has non-zero row sums."""

    module = "flowfield"
    kind = "not_divergence_free"
    category = "validation"


# Report flux too large to come from a probability current.
class InfeasibleMass(CircaError):
    """The positive part of a flux field carries more than unit mass."""

    module = "flowfield"
    kind = "infeasible_mass"
    category = "validation"


# Report a reconstructed chain that would starve a state.
class ZeroColumn(CircaError):
    """A vertex would receive zero stationary mass."""

    module = "flowfield"
    kind = "zero_column"
    category = "validation"


# Report a label vector that leaves a part empty.
class EmptyPart(CircaError):
    """A 3-partition label is not used by any vertex."""

    # Raised while validating partitions.
    module = "partition"
    kind = "empty_part"
    category = "validation"


# Report a label vector of the wrong size.
class BadLength(CircaError):
    """A label vector does not match the number of vertices."""

    module = "partition"
    kind = "bad_length"
    category = "validation"


# Report a label outside A, B and C.
class InvalidLabel(CircaError):
    """A label is not one of A, B or C."""

    module = "partition"
    kind = "invalid_label"
    category = "validation"


# Report cyclic pair fluxes that do not agree.
class LemmaViolation(CircaError):
    """The three cyclic pair fluxes of a partition disagree."""

    module = "partition"
    kind = "lemma_violation"


# Report flux between parts that share no edge.
class EmptyBoundary(CircaError):
    """Two parts exchange flux without sharing a support edge."""

    module = "partition"
    kind = "empty_boundary"


# Report an exhaustive search beyond max_n.
class TooLarge(CircaError):
    """Exhaustive enumeration was requested for too many vertices."""

    module = "partition"
    kind = "too_large"


# Report a state with no flux at all.
class IsolatedVertex(CircaError):
    """A vertex carries no flux and has no edge in the flow graph."""

    # Raised while building and embedding the flow graph.
    module = "embedding"
    kind = "isolated_vertex"


# Report an all-zero flux field.
class EmptyFlowGraph(CircaError):
    """The flux field has no non-zero entry."""

    module = "embedding"
    kind = "empty_flow_graph"


# Report a flux support split into several pieces.
class DisconnectedGraph(CircaError):
    """The flow support graph has more than one component."""

    module = "embedding"
    kind = "disconnected_graph"


# Report a drawing or triangulation off the sphere.
class EulerViolation(CircaError):
    """A coordinate drawing does not satisfy V - E + F = 2."""

    module = "embedding"
    kind = "euler_violation"


# Report a rotation system of positive genus.
class NotGenusZero(CircaError):
    """A rotation system describes a surface of positive genus."""

    module = "embedding"
    kind = "not_genus_zero"


# Report a malformed rotation system.
class InvalidRotation(CircaError):
    """A rotation system does not list each incident edge exactly once."""

    module = "embedding"
    kind = "invalid_rotation"
    category = "validation"


# Report an absent or ambiguous outer face.
class MissingOuterFace(CircaError):
    """No outer face could be determined for an embedding."""

    module = "embedding"
    kind = "missing_outer_face"
    category = "validation"


# Report a face lookup that matches nothing.
class NoSuchFace(CircaError):
    """A face index or boundary cycle does not name a face."""

    module = "embedding"
    kind = "no_such_face"


# Report a face or chord the triangulation cannot handle.
class CannotTriangulate(CircaError):
    """No valid diagonal set exists for a face."""

    module = "embedding"
    kind = "cannot_triangulate"


# Report a dual cycle whose flux does not close.
class InconsistentPotential(CircaError):
    """A non-tree dual edge does not close within tolerance."""

    # Raised by the potential solve.
    module = "potential"
    kind = "inconsistent_potential"


# Report fewer than three disjoint dual paths.
class InsufficientConnectivity(CircaError):
    """Fewer than three edge-disjoint dual paths exist."""

    # Raised by the extraction stage.
    module = "extract"
    kind = "insufficient_connectivity"


# Report a path search from a face to itself.
class SameFace(CircaError):
    """Disjoint paths were requested between a face and itself."""

    module = "extract"
    kind = "same_face"


# Report dual paths that reuse a dual edge.
class OverlappingPaths(CircaError):
    """Two paths of a triple share a dual edge."""

    module = "extract"
    kind = "overlapping_paths"


# Report a cut that does not leave exactly three parts.
class BadComponentCount(CircaError):
    """Cutting along a path triple did not leave three components."""

    module = "extract"
    kind = "bad_component_count"


# Report a partition that misses the potential gap.
class MismatchCirculation(CircaError):
    """An extracted partition's circulation differs from the potential gap."""

    module = "extract"
    kind = "mismatch_circulation"
