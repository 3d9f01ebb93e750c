# Provide module documentation for the embedding package.
"""Combinatorial planar embeddings: rotation systems, faces, duals and triangulation."""

# Import the dual builder.
from circa.embedding.dual import dual
# Import the embedding operations.
from circa.embedding.faces import (
    build_flow_graph,
    check_structure,
    embed_from_coords,
    embed_from_rotation,
    faces_of,
    reroot_outer_face,
    resolve_outer_hint,
    signed_area,
    trace_faces,
)
# Import the domain models for package-level access.
from circa.embedding.models import (
    DualEdge,
    DualGraph,
    FlowEdge,
    FlowGraph,
    PlanarEmbedding,
    TriangulatedGraph,
    ccw_neighbors,
    edge_key,
    planar_structure,
)
# Import the triangulation operation.
from circa.embedding.triangulation import triangulate

# Define the public API for the embedding package.
__all__ = [
    "DualEdge",
    "DualGraph",
    "FlowEdge",
    "FlowGraph",
    "PlanarEmbedding",
    "TriangulatedGraph",
    "build_flow_graph",
    "ccw_neighbors",
    "check_structure",
    "dual",
    "edge_key",
    "embed_from_coords",
    "embed_from_rotation",
    "faces_of",
    "planar_structure",
    "reroot_outer_face",
    "resolve_outer_hint",
    "signed_area",
    "trace_faces",
    "triangulate",
]
