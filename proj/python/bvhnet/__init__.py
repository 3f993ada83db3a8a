"""Hypercube-family interconnection topologies: construction, metrics, disjoint paths, reliability."""

from ._core import (
    BvhRules,
    Family,
    Graph,
    MalformedLabelError,
    TopologySpec,
    UnsupportedFamilyError,
    __version__,
    audit_json,
    average_distance,
    bfs_distances,
    broadcast_rounds,
    build_graph,
    cef,
    component_reliability,
    cost,
    diameter,
    graph_from_json,
    max_disjoint_paths,
    metrics_json,
    neighbors,
    path_classes,
    route_greedy,
    route_oracle,
    run_cli,
    tcef,
    terminal_reliability,
    terminal_reliability_curve,
    traffic_density,
)

__all__ = [name for name in dir() if not name.startswith("_")] + ["__version__"]
