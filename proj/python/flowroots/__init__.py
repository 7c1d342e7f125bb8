"""Exact flow polynomials of multigraphs, root audits and small-graph searches."""

import json

from ._core import (
    GraphError,
    MultiGraph,
    ParseError,
    WorkCapExceeded,
    block_count,
    bond,
    build_dual,
    canonical_code,
    chromatic_poly,
    complete,
    count_flows,
    cycle,
    flow_poly,
    flow_poly_naive,
    flow_trace,
    format_edge_list,
    h_s,
    is_3_edge_connected,
    is_bridgeless,
    is_chordal,
    loop_graph,
    nroot,
    nroot_formula,
    parse_edge_list,
    parse_faces,
    xi_enclosure,
)
from . import _core

__all__ = [
    "GraphError",
    "MultiGraph",
    "ParseError",
    "WorkCapExceeded",
    "audit",
    "block_count",
    "bond",
    "build_dual",
    "canonical_code",
    "chromatic_poly",
    "complete",
    "count_flows",
    "cycle",
    "flow_poly",
    "flow_poly_naive",
    "flow_trace",
    "format_edge_list",
    "h_s",
    "invariants",
    "is_3_edge_connected",
    "is_bridgeless",
    "is_chordal",
    "loop_graph",
    "nroot",
    "nroot_formula",
    "parse_edge_list",
    "parse_faces",
    "roots",
    "search",
    "xi_enclosure",
]


def roots(coeffs, tol="1/1000000"):
    """Root profile of an integer polynomial given constant term first."""
    return json.loads(_core.roots_json([str(c) for c in coeffs], str(tol)))


def invariants(graph):
    return json.loads(_core.invariants_json(graph))


def audit(graph, faces=None, tol="1/1000000"):
    """Full audit report as a dict (graph, invariants, flow, roots, classification, audits)."""
    return json.loads(_core.audit_json(graph, faces, str(tol)))


def search(max_vertices, max_edges, max_multiplicity=3, filters=(), loops=True, workers=1, work_cap=1e8):
    """Enumerate, filter and audit; returns {"reports": [...], "summary": {...}}."""
    return json.loads(
        _core.search_json(max_vertices, max_edges, max_multiplicity, list(filters), loops, workers, work_cap)
    )
