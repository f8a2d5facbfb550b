"""Mesh, hypercube, and symplectic interconnect topologies.

Thin python layer over the C++ core: node labeling, neighbor rules,
closed-form graph metrics with a brute-force BFS check, and path-length
distributions (exact and sampled).
"""

from ._core import (
    CapacityError,
    DisconnectedError,
    DistanceMismatch,
    DomainError,
    Family,
    NodeClass,
    OracleReport,
    PathLengthHistogram,
    TopologySpec,
    TopologySummary,
    __version__,
    adjacency,
    adjacency_matrixmarket,
    bfs_distances,
    classify,
    degree,
    density,
    density_ratio,
    diameter,
    distance,
    edgelist,
    edges,
    format_spec,
    histogram_csv,
    is_admissible,
    label,
    mean_path_length,
    neighbors,
    node_count,
    node_index,
    node_label,
    parse_spec,
    path_length_histogram,
    path_length_histogram_sampled,
    report_text,
    summary,
    unlabel,
    verify_degree_bounds,
    verify_distances,
    weight_index,
)

__all__ = [name for name in dir() if not name.startswith("_")] + ["__version__"]
