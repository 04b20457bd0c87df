"""Balanced signed Chung-Lu network toolkit."""

import json

from ._signet import (
    Graph,
    LearnConfig,
    ModelParams,
    SignetError,
    analytic_triangle_distribution,
    balanced_fraction,
    compute_eta,
    em_edge_responsibility,
    estimate_triangles,
    generate,
    ingest_ratings,
    learn,
    local_clustering,
    parse_canonical,
    read_graph,
    stcl_generate,
    to_canonical_string,
    triangle_census,
    write_canonical,
)
from . import _signet


def stats(graph):
    """Graph statistics as a dict (same document as `signet analyze`)."""
    return json.loads(_signet._stats_json(graph))


def evaluate(graph, generated):
    """Evaluation report for a list of generated graphs against `graph`."""
    return json.loads(_signet._evaluate_json(graph, list(generated)))


__all__ = [
    "Graph",
    "LearnConfig",
    "ModelParams",
    "SignetError",
    "analytic_triangle_distribution",
    "balanced_fraction",
    "compute_eta",
    "em_edge_responsibility",
    "estimate_triangles",
    "evaluate",
    "generate",
    "ingest_ratings",
    "learn",
    "local_clustering",
    "parse_canonical",
    "read_graph",
    "stats",
    "stcl_generate",
    "to_canonical_string",
    "triangle_census",
    "write_canonical",
]
