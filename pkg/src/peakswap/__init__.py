"""Single-peaked swap games on graphs.

Two-colored agents fully occupy the nodes of a connected graph and may
exchange positions pairwise when the exchange strictly improves both
single-peaked utilities. The package provides exact improving-response
dynamics, exhaustive equilibrium enumeration with PoA/PoS reports,
constructive equilibrium algorithms, and a gallery of benchmark instances.
"""

from __future__ import annotations

__version__ = "0.1.0"

from .graphs import BudgetExceededError, Graph, GraphError, independence_number
from .model import (DisplayPeak, GameSpec, ModelError, NeighborhoodFraction,
                    PeakSide, Profile, classify, doi, parse_peak, peak_score,
                    potential, same_color_fraction, segregated_nodes,
                    sum_welfare, utility_value)
from .core import BACKEND, SweepResult, profile_space_size, sweep_game
from .dynamics import (DynamicsOutcome, OutcomeKind, SwapMove, SwapPolicy,
                       has_improving_cycle, is_profitable_swap,
                       profitable_swaps, response_graph, run_dynamics,
                       verify_cycle_witness)
from .analysis import (AnalysisReport, BoundCheck, enumerate_equilibria,
                       is_swap_equilibrium, optimal_doi)
from .construct import (ConstructionError, GuardFailure, HierarchicalResult,
                        KPartition, PhiMode, balanced_k_max_cut,
                        bipartite_se_from_optimum, greedy_k_max_cut,
                        hierarchical_pos_construction,
                        independent_set_placement, phi_minimum_profile,
                        se_repair_bounded_degree)
from . import gallery

__all__ = [
    "__version__", "BACKEND",
    "Graph", "GraphError", "BudgetExceededError", "independence_number",
    "GameSpec", "Profile", "ModelError", "DisplayPeak", "PeakSide",
    "NeighborhoodFraction", "parse_peak", "peak_score", "utility_value",
    "classify", "same_color_fraction", "segregated_nodes", "doi",
    "potential", "sum_welfare",
    "SweepResult", "sweep_game", "profile_space_size",
    "SwapMove", "SwapPolicy", "OutcomeKind", "DynamicsOutcome",
    "is_profitable_swap", "profitable_swaps", "run_dynamics",
    "response_graph", "has_improving_cycle", "verify_cycle_witness",
    "AnalysisReport", "BoundCheck", "is_swap_equilibrium",
    "enumerate_equilibria", "optimal_doi",
    "ConstructionError", "GuardFailure", "KPartition", "PhiMode",
    "greedy_k_max_cut", "balanced_k_max_cut", "independent_set_placement",
    "bipartite_se_from_optimum", "phi_minimum_profile",
    "se_repair_bounded_degree", "hierarchical_pos_construction",
    "HierarchicalResult",
    "gallery",
]
