# Document the purpose of the DOT export module.
"""Graphviz DOT views of flux fields, duals and partitions."""
# Overview: Produces deterministic DOT text; vertices are labelled with 1-based ids.
# Details: Partition parts A, B and C are filled red, blue and green.

# Enable postponed evaluation so annotations can use forward references.
from __future__ import annotations

# Import typing helpers for optional inputs.
from typing import List, Optional

# Import the models rendered here.
from circa.embedding.models import TriangulatedGraph
from circa.flowfield.models import NetFluxField
from circa.partition.models import PART_NAMES, ThreePartition
from circa.potential.models import CurlPotential

# Fill colour per part label.
PART_COLORS = {"A": "red", "B": "blue", "C": "green"}
# Views accepted by export-dot.
DOT_VIEWS = ("flux", "dual", "triangulated", "partition")


# Format a float compactly and stably.
def _number(value: float) -> str:
    return f"{value:.6g}"


# Directed flux graph.
def flux_dot(field: NetFluxField, partition: Optional[ThreePartition] = None) -> str:
    """Return a digraph with one edge per positive flux, labelled with its value."""
    lines: List[str] = ["digraph flux {"]
    for vertex in range(field.n):
        attributes = f'label="{vertex + 1}"'
        if partition is not None:
            name = PART_NAMES[partition.labels[vertex]]
            attributes += f', style=filled, fillcolor={PART_COLORS[name]}, group="{name}"'
        lines.append(f"  {vertex + 1} [{attributes}];")
    for edge in field.summary()["edges"]:
        lines.append(f'  {edge["tail"]} -> {edge["head"]} [label="{_number(edge["flux"])}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


# Triangulated graph with chords dashed.
def triangulated_dot(t: TriangulatedGraph) -> str:
    """Return the triangulated graph; flux edges are directed, chords are dashed."""
    lines: List[str] = ["digraph triangulated {"]
    for vertex in range(t.n):
        lines.append(f'  {vertex + 1} [label="{vertex + 1}"];')
    for edge in t.base.edges:
        lines.append(f'  {edge.tail + 1} -> {edge.head + 1} [label="{_number(edge.weight)}"];')
    for u, v in t.chords:
        lines.append(f"  {u + 1} -> {v + 1} [style=dashed, dir=none];")
    lines.append("}")
    return "\n".join(lines) + "\n"


# Dual multigraph with face ids and potentials.
def dual_dot(t: TriangulatedGraph, psi: Optional[CurlPotential] = None) -> str:
    """Return the dual multigraph; faces show their id and potential when known."""
    lines: List[str] = ["graph dual {"]
    for face in range(t.dual.n_faces):
        label = f"f{face}"
        if psi is not None:
            label += f"\\npsi={_number(psi.values[face])}"
        lines.append(f'  f{face} [label="{label}"];')
    for edge in t.dual.edges:
        style = ", style=dashed" if edge.is_chord else ""
        lines.append(
            f'  f{edge.left} -- f{edge.right} [label="{edge.tail + 1}->{edge.head + 1}: {_number(edge.flux)}"{style}];'
        )
    lines.append("}")
    return "\n".join(lines) + "\n"


# Flux graph coloured by part.
def partition_dot(field: NetFluxField, partition: ThreePartition) -> str:
    """Return the flux graph with vertices filled by part."""
    return flux_dot(field, partition)
