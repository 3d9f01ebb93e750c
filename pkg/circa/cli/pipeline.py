# Document the purpose of the pipeline module.
"""Analysis pipeline from a problem file to a report."""
# Overview: Runs flowfield, embedding, triangulation, potential and extraction in order.
# Details: Each stage is a method so commands can stop early (brute-force, export-dot).

# Enable postponed evaluation so annotations can use forward references.
from __future__ import annotations

# Import logging for the injected logger type.
import logging
# Import time for stage timing.
import time
# Import dataclass helpers for the stage bundle.
from dataclasses import dataclass, replace
# Import typing helpers for optional products.
from typing import Any, Dict, List, Optional, Tuple

# Import the embedding operations.
from circa.embedding import (
    FlowGraph,
    PlanarEmbedding,
    TriangulatedGraph,
    build_flow_graph,
    embed_from_coords,
    embed_from_rotation,
    triangulate,
)
# Import the extraction operations.
from circa.extract import edge_connectivity, extract_partition
# Import the flow field operations.
from circa.flowfield import (
    NetFluxField,
    StationaryDistribution,
    TransitionMatrix,
    center_flux,
    markov_from_flow,
    net_flux,
    probability_current,
    stationary_distribution,
)
from circa.flowfield.markov import net_flux_from_edges
# Import the exhaustive search.
from circa.partition import brute_force_cmax
# Import the potential operations.
from circa.potential import CurlPotential, compute_psi, extrema, extrema_pairs, max_circulation
# Import the problem and report models.
from circa.cli.problem import ProblemFile, ProblemOptions, options_to_dict
from circa.cli.report import AnalysisReport
# Import the error base class for per-pair failures.
from circa.utils.errors import CircaError

# Dual edge connectivity required for three disjoint paths.
REQUIRED_DUAL_CONNECTIVITY = 3


# Enable dataclass generation for the field stage.
@dataclass(frozen=True)
# Represent the products of the flow field stage.
class FieldStage:
    """Net flux field plus the Markov products that led to it."""

    # Net flux field.
    field: NetFluxField
    # Stationary distribution, for Markov input.
    stationary: Optional[StationaryDistribution] = None
    # Aperiodicity, for Markov input.
    aperiodic: Optional[bool] = None


# Orchestrate one analysis.
class AnalysisPipeline:
    """Pipeline stages with an injected logger."""

    # Initialize the pipeline with a logger dependency.
    def __init__(self, logger: logging.Logger) -> None:
        self.logger = logger

    # Build the net flux field.
    def build_field(self, problem: ProblemFile) -> FieldStage:
        """Return the net flux field of the problem input."""
        options = problem.options
        tolerances = options.tolerances
        if problem.transition_matrix is not None:
            if options.normalize_rows:
                correction = max(abs(sum(row) - 1.0) for row in problem.transition_matrix)
                self.logger.info("Normalizing transition rows (largest correction %.3g)", correction)
            tm = TransitionMatrix.from_rows(
                problem.transition_matrix,
                tolerances=tolerances,
                normalize_rows=options.normalize_rows,
            )
            pi = stationary_distribution(tm, tolerances=tolerances)
            self.logger.info("Stationary distribution via %s (residual %.3g)", pi.method, pi.residual)
            field = net_flux(probability_current(tm, pi, tolerances=tolerances), tolerances=tolerances)
            if options.center_flux:
                field = NetFluxField.from_matrix(center_flux(field.matrix), tolerances=tolerances)
            return FieldStage(field=field, stationary=pi, aperiodic=tm.is_aperiodic())
        edges = problem.flux_edges or []
        if options.center_flux:
            raw = net_flux_from_edges(problem.n, edges, tolerances=tolerances, require_divergence_free=False)
            field = NetFluxField.from_matrix(center_flux(raw.matrix), tolerances=tolerances)
            self.logger.info("Centered flux field (divergence before %.3g)", raw.max_divergence())
        else:
            field = net_flux_from_edges(problem.n, edges, tolerances=tolerances)
        return FieldStage(field=field)

    # Embed the flow graph.
    def embed(self, problem: ProblemFile, graph: FlowGraph) -> PlanarEmbedding:
        """Return the embedding from the rotation system or the coordinates."""
        if problem.rotation is not None:
            return embed_from_rotation(graph, problem.rotation, problem.outer_face, coords=problem.coords)
        return embed_from_coords(graph, problem.coords, problem.outer_face)

    # Build the triangulated graph.
    def triangulate(self, problem: ProblemFile, field: NetFluxField) -> TriangulatedGraph:
        """Return the chordal completion of the embedded flow graph."""
        graph = build_flow_graph(field)
        embedding = self.embed(problem, graph)
        self.logger.info("Embedding: %d faces", len(embedding.faces))
        return triangulate(graph, embedding, include_outer=problem.options.include_outer, chords=problem.chords)

    # Rebuild a chain from flux input.
    def reconstruct_chain(self, field: NetFluxField, options: ProblemOptions) -> Optional[StationaryDistribution]:
        """Return the stationary distribution of a chain realising field, when one exists."""
        if not field.markov_normalized:
            self.logger.info("Flux field exceeds unit positive mass; no chain reconstruction")
            return None
        try:
            tm = markov_from_flow(field, mass_placement=options.mass_placement, tolerances=options.tolerances)
            return stationary_distribution(tm, tolerances=options.tolerances)
        except CircaError as error:
            self.logger.warning("Chain reconstruction failed: %s", error.message)
            return None

    # Run the full analysis.
    def run(self, problem: ProblemFile, brute_check: bool = False, all_extrema: bool = False) -> AnalysisReport:
        """Return the analysis report of a problem."""
        options = problem.options
        tolerances = options.tolerances
        timing: Dict[str, float] = {}

        started = time.perf_counter()
        stage = self.build_field(problem)
        timing["flowfield"] = time.perf_counter() - started

        started = time.perf_counter()
        triangulated = self.triangulate(problem, stage.field)
        connectivity = edge_connectivity(triangulated.dual)
        if connectivity < REQUIRED_DUAL_CONNECTIVITY:
            self.logger.warning(
                "Dual is only %d-edge-connected; rerun with include_outer if extraction fails",
                connectivity,
            )
        timing["embedding"] = time.perf_counter() - started

        started = time.perf_counter()
        psi = compute_psi(triangulated, tolerances=tolerances)
        ends = extrema(psi)
        gap = max_circulation(psi)
        self.logger.info("Extremal faces %d and %d, potential gap %.6g", ends.face_min, ends.face_max, gap)
        timing["potential"] = time.perf_counter() - started

        started = time.perf_counter()
        extraction = extract_partition(triangulated, psi, stage.field, tolerances=tolerances)
        if extraction.triangulated is not None and extraction.psi is not None:
            # Report the completion the partition was cut from.
            self.logger.info("Outer face closed with %d chords", len(extraction.triangulated.chords) - len(triangulated.chords))
            triangulated, psi = extraction.triangulated, extraction.psi
            ends = extrema(psi)
            connectivity = edge_connectivity(triangulated.dual)
        pairs: Optional[List[Dict[str, Any]]] = None
        if all_extrema:
            pairs = [
                self._extract_pair(triangulated, psi, stage.field, problem, pair)
                for pair in extrema_pairs(psi, tolerances.psi)
            ]
        timing["extract"] = time.perf_counter() - started

        brute = None
        if brute_check:
            started = time.perf_counter()
            brute = {
                "unrestricted": brute_force_cmax(stage.field, connected_only=False, max_n=options.max_n, tolerances=tolerances),
                "connected": brute_force_cmax(stage.field, connected_only=True, max_n=options.max_n, tolerances=tolerances),
            }
            timing["brute_force"] = time.perf_counter() - started

        return AnalysisReport(
            input_kind=problem.kind,
            field=stage.field,
            triangulated=triangulated,
            psi=psi,
            extrema=ends,
            max_circulation=gap,
            extraction=extraction,
            dual_edge_connectivity=connectivity,
            options=options_to_dict(options),
            stationary=stage.stationary,
            aperiodic=stage.aperiodic,
            reconstructed=self.reconstruct_chain(stage.field, options) if problem.transition_matrix is None else None,
            all_extrema=pairs,
            brute_force=brute,
            timing=timing,
        )

    # Extract the partition for one extremal pair.
    def _extract_pair(
        self,
        triangulated: TriangulatedGraph,
        psi: CurlPotential,
        field: NetFluxField,
        problem: ProblemFile,
        pair: Tuple[int, int],
    ) -> Dict[str, Any]:
        entry: Dict[str, Any] = {"face_min": pair[0], "face_max": pair[1]}
        try:
            result = extract_partition(triangulated, psi, field, tolerances=problem.options.tolerances, faces=pair)
        except CircaError as error:
            self.logger.warning("Extremal pair %s failed: %s", pair, error.message)
            entry["error"] = error.to_dict()
            return entry
        entry["partition"] = result.to_dict()
        entry["circulation"] = result.report.circulation
        return entry


# Apply CLI overrides to the options block.
def apply_overrides(
    problem: ProblemFile,
    include_outer: Optional[bool] = None,
    center: Optional[bool] = None,
    tol: Optional[float] = None,
    connected_only: Optional[bool] = None,
    max_n: Optional[int] = None,
) -> ProblemFile:
    """Return the problem with flag values replacing file options."""
    options = problem.options
    updates: Dict[str, Any] = {}
    if include_outer:
        updates["include_outer"] = True
    if center:
        updates["center_flux"] = True
    if connected_only:
        updates["connected_only"] = True
    if max_n is not None:
        updates["max_n"] = max_n
    if tol is not None:
        updates["tolerances"] = options.tolerances.uniform(tol)
    return replace(problem, options=replace(options, **updates)) if updates else problem
