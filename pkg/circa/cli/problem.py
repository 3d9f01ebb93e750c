# Document the purpose of the problem file module.
"""Problem file parsing and validation."""
# Overview: Loads a JSON problem file into a ProblemFile with 0-based vertex ids.
# Details: Files use 1-based vertex ids; vertex k in a file is k - 1 everywhere inside circa.

# Enable postponed evaluation so annotations can use forward references.
from __future__ import annotations

# Import json for problem file parsing.
import json
# Import dataclass helpers for the problem records.
from dataclasses import dataclass, field, replace
# Import Path for file access.
from pathlib import Path
# Import typing helpers for JSON payloads.
from typing import Any, Dict, List, Mapping, Optional, Sequence, Tuple, Union

# Import the mass placements accepted by the options block.
from circa.flowfield.markov import MASS_PLACEMENTS
# Import the default search limit.
from circa.partition.enumeration import DEFAULT_MAX_N
# Import the errors raised here.
from circa.utils.errors import ProblemParseError, ProblemSchemaError
# Import tolerance configuration.
from circa.utils.tolerances import DEFAULT_TOLERANCES, Tolerances

# Top-level keys a problem file may contain.
KNOWN_KEYS = ("n", "transition_matrix", "flux_edges", "coords", "rotation", "outer_face", "chords", "options")
# Keys the options block may contain.
KNOWN_OPTIONS = (
    "tolerances",
    "include_outer",
    "connected_only",
    "center_flux",
    "mass_placement",
    "normalize_rows",
    "max_n",
)


# Enable dataclass generation for problem options.
@dataclass(frozen=True)
# Represent the options block of a problem file.
class ProblemOptions:
    """Analysis options with their defaults."""

    # Tolerances after applying the file overrides.
    tolerances: Tolerances = DEFAULT_TOLERANCES
    # Whether the outer face is triangulated as well.
    include_outer: bool = False
    # Whether the exhaustive search requires connected parts.
    connected_only: bool = False
    # Whether the centering projection is applied before validation.
    center_flux: bool = False
    # Mass placement used when rebuilding a chain from flux input.
    mass_placement: str = "uniform-offdiagonal"
    # Whether transition rows are rescaled to sum to one.
    normalize_rows: bool = False
    # Largest vertex count for the exhaustive search.
    max_n: int = DEFAULT_MAX_N


# Enable dataclass generation for problem files.
@dataclass(frozen=True)
# Represent a parsed problem with 0-based vertex ids.
class ProblemFile:
    """Validated problem definition."""

    # Vertex count.
    n: int
    # Transition matrix rows, when the input is a Markov chain.
    transition_matrix: Optional[List[List[float]]] = None
    # Flux triples (tail, head, flux), when the input is a flux field.
    flux_edges: Optional[List[Tuple[int, int, float]]] = None
    # Point per vertex.
    coords: Optional[List[Tuple[float, float]]] = None
    # Counterclockwise neighbor lists per vertex.
    rotation: Optional[List[List[int]]] = None
    # Outer face as a face index or a vertex cycle.
    outer_face: Union[int, List[int], None] = None
    # Chords inserted before the automatic triangulation.
    chords: List[Tuple[int, int]] = field(default_factory=list)
    # Options block.
    options: ProblemOptions = field(default_factory=ProblemOptions)
    # Source path, when loaded from disk.
    source: Optional[str] = None

    # Input kind for reports.
    @property
    def kind(self) -> str:
        """Return "transition_matrix" or "flux_edges"."""
        return "transition_matrix" if self.transition_matrix is not None else "flux_edges"


# Read and parse a problem file.
def load_problem(path: Union[str, Path]) -> ProblemFile:
    """Load a JSON problem file."""
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as error:
        raise ProblemParseError(f"Cannot read {path}: {error.strerror}", path=str(path)) from error
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as error:
        raise ProblemParseError(f"Invalid JSON in {path}: {error.msg}", path=str(path), line=error.lineno) from error
    problem = parse_problem(payload)
    return replace(problem, source=str(path))


# Require a condition on the payload.
def _require(condition: bool, message: str, **details: Any) -> None:
    if not condition:
        raise ProblemSchemaError(message, **details)


# Convert a 1-based vertex id.
def _vertex(value: Any, n: int, where: str) -> int:
    _require(isinstance(value, int) and not isinstance(value, bool), f"{where}: vertex ids must be integers", value=value)
    _require(1 <= value <= n, f"{where}: vertex {value} is outside 1..{n}", value=value, n=n)
    return value - 1


# Convert a number.
def _number(value: Any, where: str) -> float:
    _require(isinstance(value, (int, float)) and not isinstance(value, bool), f"{where}: expected a number", value=value)
    return float(value)


# Parse the vertex count.
def _vertex_count(payload: Mapping[str, Any]) -> int:
    if "transition_matrix" in payload:
        rows = payload["transition_matrix"]
        _require(isinstance(rows, list) and len(rows) > 0, "transition_matrix must be a non-empty list of rows")
        return len(rows)
    if "n" in payload:
        _require(isinstance(payload["n"], int) and payload["n"] > 0, "n must be a positive integer", value=payload["n"])
        return int(payload["n"])
    edges = payload["flux_edges"]
    _require(isinstance(edges, list) and len(edges) > 0, "flux_edges must be a non-empty list")
    ids = [value for edge in edges if isinstance(edge, list) for value in edge[:2] if isinstance(value, int)]
    _require(bool(ids), "flux_edges lists no vertex ids")
    return max(ids)


# Parse the transition matrix rows.
def _matrix(rows: Any, n: int) -> List[List[float]]:
    parsed = []
    for index, row in enumerate(rows):
        _require(isinstance(row, list) and len(row) == n, f"transition_matrix row {index + 1} must have {n} entries", row=index + 1)
        parsed.append([_number(value, f"transition_matrix row {index + 1}") for value in row])
    return parsed


# Parse flux triples.
def _flux_edges(edges: Any, n: int) -> List[Tuple[int, int, float]]:
    _require(isinstance(edges, list), "flux_edges must be a list")
    parsed = []
    for index, edge in enumerate(edges):
        where = f"flux_edges[{index}]"
        _require(isinstance(edge, list) and len(edge) == 3, f"{where} must be [tail, head, flux]")
        parsed.append((_vertex(edge[0], n, where), _vertex(edge[1], n, where), _number(edge[2], where)))
    return parsed


# Parse coordinates given as a list or a vertex mapping.
def _coords(coords: Any, n: int) -> List[Tuple[float, float]]:
    if isinstance(coords, Mapping):
        _require(len(coords) == n, f"coords must give a point for each of the {n} vertices")
        points: List[Any] = [None] * n
        for key, point in coords.items():
            _require(str(key).isdigit(), "coords keys must be vertex ids", key=key)
            points[_vertex(int(key), n, "coords")] = point
    else:
        _require(isinstance(coords, list) and len(coords) == n, f"coords must give a point for each of the {n} vertices")
        points = list(coords)
    parsed = []
    for index, point in enumerate(points):
        _require(isinstance(point, list) and len(point) == 2, f"coords for vertex {index + 1} must be [x, y]")
        parsed.append((_number(point[0], "coords"), _number(point[1], "coords")))
    _require(len(set(parsed)) == n, "coords must be distinct points")
    return parsed


# Parse a rotation mapping.
def _rotation(rotation: Any, n: int) -> List[List[int]]:
    _require(isinstance(rotation, Mapping), "rotation must map vertex ids to neighbor lists")
    parsed: List[List[int]] = [[] for _ in range(n)]
    for key, around in rotation.items():
        _require(str(key).isdigit(), "rotation keys must be vertex ids", key=key)
        vertex = _vertex(int(key), n, "rotation")
        _require(isinstance(around, list), f"rotation for vertex {key} must be a list")
        parsed[vertex] = [_vertex(value, n, f"rotation[{key}]") for value in around]
    return parsed


# Parse the outer face hint.
def _outer_face(hint: Any, n: int) -> Union[int, List[int], None]:
    if hint is None:
        return None
    if isinstance(hint, int) and not isinstance(hint, bool):
        _require(hint >= 0, "outer_face index must be non-negative", value=hint)
        return hint
    _require(isinstance(hint, list) and len(hint) >= 3, "outer_face must be a face index or a vertex cycle")
    return [_vertex(value, n, "outer_face") for value in hint]


# Parse the chord list.
def _chords(chords: Any, n: int) -> List[Tuple[int, int]]:
    _require(isinstance(chords, list), "chords must be a list of [u, v] pairs")
    parsed = []
    for index, chord in enumerate(chords):
        _require(isinstance(chord, list) and len(chord) == 2, f"chords[{index}] must be [u, v]")
        parsed.append((_vertex(chord[0], n, "chords"), _vertex(chord[1], n, "chords")))
    return parsed


# Parse the options block.
def _options(options: Any) -> ProblemOptions:
    _require(isinstance(options, Mapping), "options must be an object")
    unknown = sorted(set(options) - set(KNOWN_OPTIONS))
    _require(not unknown, f"Unknown option(s): {', '.join(unknown)}", unknown=unknown)
    try:
        tolerances = Tolerances.from_mapping(options.get("tolerances"))
    except (KeyError, TypeError, ValueError) as error:
        raise ProblemSchemaError(f"Invalid tolerances: {error}") from error
    placement = options.get("mass_placement", "uniform-offdiagonal")
    _require(placement in MASS_PLACEMENTS, f"mass_placement must be one of {', '.join(MASS_PLACEMENTS)}", value=placement)
    max_n = options.get("max_n", DEFAULT_MAX_N)
    _require(isinstance(max_n, int) and max_n >= 3, "max_n must be an integer of at least 3", value=max_n)
    flags = {}
    for name in ("include_outer", "connected_only", "center_flux", "normalize_rows"):
        value = options.get(name, False)
        _require(isinstance(value, bool), f"{name} must be true or false", value=value)
        flags[name] = value
    return ProblemOptions(tolerances=tolerances, mass_placement=placement, max_n=max_n, **flags)


# Validate a decoded JSON payload.
def parse_problem(payload: Any) -> ProblemFile:
    """Return the ProblemFile described by a decoded JSON object."""
    _require(isinstance(payload, Mapping), "Problem file must contain a JSON object")
    unknown = sorted(set(payload) - set(KNOWN_KEYS))
    _require(not unknown, f"Unknown key(s): {', '.join(unknown)}", unknown=unknown)
    has_matrix, has_edges = "transition_matrix" in payload, "flux_edges" in payload
    _require(has_matrix != has_edges, "Give exactly one of transition_matrix and flux_edges")
    _require("coords" in payload or "rotation" in payload, "Give coords or rotation to embed the graph")
    n = _vertex_count(payload)
    return ProblemFile(
        n=n,
        transition_matrix=_matrix(payload["transition_matrix"], n) if has_matrix else None,
        flux_edges=_flux_edges(payload["flux_edges"], n) if has_edges else None,
        coords=_coords(payload["coords"], n) if "coords" in payload else None,
        rotation=_rotation(payload["rotation"], n) if "rotation" in payload else None,
        outer_face=_outer_face(payload.get("outer_face"), n),
        chords=_chords(payload.get("chords", []), n),
        options=_options(payload.get("options", {})),
    )


# Serialize options for reports.
def options_to_dict(options: ProblemOptions) -> Dict[str, Any]:
    """Serialize the effective options."""
    return {
        "tolerances": options.tolerances.to_dict(),
        "include_outer": options.include_outer,
        "connected_only": options.connected_only,
        "center_flux": options.center_flux,
        "mass_placement": options.mass_placement,
        "normalize_rows": options.normalize_rows,
        "max_n": options.max_n,
    }


# Convert 0-based pairs for reports.
def one_based(pairs: Sequence[Tuple[int, int]]) -> List[List[int]]:
    """Return pairs with 1-based vertex ids."""
    return [[u + 1, v + 1] for u, v in pairs]
