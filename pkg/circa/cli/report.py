# Document the purpose of the report module.
"""Analysis report model and JSON rendering."""
# Overview: Collects every pipeline product and serializes it with 1-based vertex ids.
# Details: Rendering is deterministic; only the timing block varies between runs.

# Enable postponed evaluation so annotations can use forward references.
from __future__ import annotations

# Import json for rendering.
import json
# Import dataclass helpers for the report record.
from dataclasses import dataclass, field
# Import Path for output files.
from pathlib import Path
# Import typing helpers for JSON payloads.
from typing import Any, Dict, List, Optional, Union

# Import the models carried by the report.
from circa.embedding.models import TriangulatedGraph
from circa.extract.models import ExtractionResult
from circa.flowfield.models import NetFluxField, StationaryDistribution
from circa.partition.enumeration import BruteForceResult
from circa.potential.models import CurlPotential, Extrema

# Key excluded from determinism comparisons.
TIMING_KEY = "timing"


# Enable dataclass generation for analysis reports.
@dataclass
# Represent the products of one analyze run.
class AnalysisReport:
    """Everything computed by one pipeline run."""

    # Input kind ("transition_matrix" or "flux_edges").
    input_kind: str
    # Net flux field analysed.
    field: NetFluxField
    # Triangulated embedding.
    triangulated: TriangulatedGraph
    # Curl potential.
    psi: CurlPotential
    # Extremal faces.
    extrema: Extrema
    # psi_max - psi_min.
    max_circulation: float
    # Extracted and verified partition.
    extraction: ExtractionResult
    # Global edge connectivity of the dual.
    dual_edge_connectivity: int
    # Effective options.
    options: Dict[str, Any]
    # Stationary distribution, for Markov input.
    stationary: Optional[StationaryDistribution] = None
    # Aperiodicity of the input chain, for Markov input.
    aperiodic: Optional[bool] = None
    # Stationary distribution of the chain rebuilt from flux input.
    reconstructed: Optional[StationaryDistribution] = None
    # Results for every extremal face pair.
    all_extrema: Optional[List[Dict[str, Any]]] = None
    # Exhaustive search results keyed by "unrestricted" and "connected".
    brute_force: Optional[Dict[str, BruteForceResult]] = None
    # Wall-clock seconds per stage.
    timing: Dict[str, float] = field(default_factory=dict)

    # Serialize the report.
    def to_dict(self) -> Dict[str, Any]:
        """Serialize the report for JSON output."""
        t = self.triangulated
        psi_values = self.psi.values
        payload: Dict[str, Any] = {
            "input": self.input_kind,
            "n": self.field.n,
            "net_flux": self.field.summary(),
            "embedding": t.base_embedding.to_dict(),
            "triangulation": {
                "include_outer": t.include_outer,
                "chords": [[u + 1, v + 1] for u, v in t.chords],
                "faces": [[v + 1 for v in walk] for walk in t.embedding.faces],
                "euler_characteristic": t.embedding.euler_characteristic(),
                "dual": t.dual.to_dict(),
                "dual_edge_connectivity": self.dual_edge_connectivity,
            },
            "potential": self.psi.to_dict(),
            "extrema": {
                "face_min": self.extrema.face_min,
                "face_max": self.extrema.face_max,
                "psi_min": psi_values[self.extrema.face_min],
                "psi_max": psi_values[self.extrema.face_max],
                "flat": self.psi.is_flat,
            },
            "max_circulation": self.max_circulation,
            "partition": self.extraction.to_dict(),
            "verification": self.extraction.report.to_dict(),
            "options": self.options,
            TIMING_KEY: self.timing,
        }
        if self.stationary is not None:
            payload["stationary_distribution"] = {
                "values": self.stationary.to_list(),
                "method": self.stationary.method,
                "residual": self.stationary.residual,
                "aperiodic": self.aperiodic,
            }
        if self.reconstructed is not None:
            payload["reconstructed_chain"] = {"stationary_distribution": self.reconstructed.to_list()}
        if self.all_extrema is not None:
            payload["all_extrema"] = self.all_extrema
        if self.brute_force is not None:
            payload["brute_force"] = {name: result.to_dict() for name, result in self.brute_force.items()}
        return payload


# Render a payload as stable JSON.
def render_json(payload: Dict[str, Any]) -> str:
    """Return sorted, indented JSON with a trailing newline."""
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"


# Drop the timing block for comparisons.
def strip_timing(payload: Dict[str, Any]) -> Dict[str, Any]:
    """Return a copy of the payload without timing."""
    return {key: value for key, value in payload.items() if key != TIMING_KEY}


# Write text to a file or return it for stdout.
def write_output(text: str, out: Union[str, Path, None]) -> Optional[Path]:
    """Write text to out when given and return the path."""
    if out is None:
        return None
    path = Path(out)
    path.write_text(text, encoding="utf-8")
    return path
