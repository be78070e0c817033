"""Packing chromatic numbers of generalized theta graphs, undirected and oriented."""

from .certificates import build_certificate, certificate_cycle, certificate_path, certificate_theta
from .formula import (
    ConditionLabel, cycle_pcn, oriented_cycle_pcn, oriented_path_pcn, path_pcn, pcn4_condition, pcn_theta,
)
from .graph import (
    GraphError, OrientedGraph, ThetaSpec, build_cycle, build_path, build_theta, distance_matrix,
    enumerate_orientations, weak_distance_matrix,
)
from .oriented import build_theta0, color_oriented_theta, conjecture_scan
from .solver import NodeLimitExceeded, SolverConfig, exists_k_coloring, pcn_exact
from .verify import PackingColoring, check_pcn2_oriented, verify

__all__ = [
    "ConditionLabel", "GraphError", "NodeLimitExceeded", "OrientedGraph", "PackingColoring", "SolverConfig",
    "ThetaSpec", "build_certificate", "build_cycle", "build_path", "build_theta", "build_theta0",
    "certificate_cycle", "certificate_path", "certificate_theta", "check_pcn2_oriented", "color_oriented_theta",
    "conjecture_scan", "cycle_pcn", "distance_matrix", "enumerate_orientations", "exists_k_coloring",
    "oriented_cycle_pcn", "oriented_path_pcn", "path_pcn", "pcn4_condition", "pcn_exact", "pcn_theta", "verify",
    "weak_distance_matrix",
]
