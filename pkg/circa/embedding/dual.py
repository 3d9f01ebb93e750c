# Document the purpose of the dual graph module.
"""Dual multigraph of a planar embedding."""

# Enable postponed evaluation so annotations can use forward references.
from __future__ import annotations

# Import logging for dual diagnostics.
import logging

# Import the embedding models.
from circa.embedding.models import DualEdge, DualGraph, FlowGraph, PlanarEmbedding

# Build a named logger for the embedding package.
LOGGER = logging.getLogger("circa.embedding")


# Build the dual of an embedding.
def dual(e: PlanarEmbedding, g: FlowGraph) -> DualGraph:
    """Return one dual edge per primal edge, joining the faces on its two sides.

    Edges of e that are not flow edges of g are zero-flux chords, oriented
    from the smaller to the larger vertex.
    """
    edges = []
    for index, (low, high) in enumerate(e.edges()):
        flow = g.edge(low, high)
        if flow is None:
            tail, head, flux, chord = low, high, 0.0, True
        else:
            tail, head, flux, chord = flow.tail, flow.head, flow.weight, False
        edges.append(
            DualEdge(
                id=index,
                left=e.face_of_dart(tail, head),
                right=e.face_of_dart(head, tail),
                tail=tail,
                head=head,
                flux=flux,
                is_chord=chord,
            )
        )
    result = DualGraph(n_faces=len(e.faces), edges=tuple(edges))
    LOGGER.debug("Dual graph: %d faces, %d edges", result.n_faces, len(result.edges))
    return result
