"""Even and odd F-orientations of graphs with a perfect matching."""

from evenorient.alternating import (
    AltCycle,
    classify_cycles,
    enumerate_alternating_cycles,
    is_even_orientation,
    is_odd_orientation,
    omega,
)
from evenorient.graph import (
    Graph,
    GraphError,
    Orientation,
    are_isomorphic,
    parse_graph,
)
from evenorient.kernels import BACKEND
from evenorient.matching import (
    NoFactorError,
    enumerate_perfect_matchings,
    factor_from_labels,
    is_one_extendible,
)
from evenorient.solver import (
    build_parity_system,
    canonical_orientation,
    is_bad,
    is_pfaffian,
    solve_orientation,
    zero_sum_basis,
)
from evenorient.structure import (
    f_reducible_ear_decomposition,
    is_brick,
    tight_cut_decomposition,
)
from evenorient.wagner import are_skew, wagner_membership, w_factors

__all__ = [
    "AltCycle", "BACKEND", "Graph", "GraphError", "NoFactorError", "Orientation",
    "are_isomorphic", "are_skew", "build_parity_system", "canonical_orientation",
    "classify_cycles", "enumerate_alternating_cycles", "enumerate_perfect_matchings",
    "f_reducible_ear_decomposition", "factor_from_labels", "is_bad", "is_brick",
    "is_even_orientation", "is_odd_orientation", "is_one_extendible", "is_pfaffian",
    "omega", "parse_graph", "solve_orientation", "tight_cut_decomposition",
    "w_factors", "wagner_membership", "zero_sum_basis",
]

__version__ = "0.1.0"
