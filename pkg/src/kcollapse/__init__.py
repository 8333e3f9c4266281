"""Targeted k-core node collapse: edge-removal heuristics, baselines, exact search and metrics."""

from .baselines import knm, red, rnd, sv
from .cores import CoreIndex, cascade_after_removal, compute_cores, kcore_members
from .corona import (
    CoronaPedigree,
    candidate_edges,
    core_strength,
    corona_nodes,
    corona_pedigree,
    single_edge_collapse_check,
    supportive_neighbors,
)
from .evaluation import MetricsReport, case_trace, resilience_summary, sweep, war
from .graph import Graph, GraphError, GraphView, parse_edge_list, read_edge_list, to_edge_list
from .impact import ImpactReport, calculate_impact
from .oracle import OracleInfeasible, exact_nr, verify_collapse
from .solvers import CollapseResult, atnc, tnc

__version__ = "0.1.0"
