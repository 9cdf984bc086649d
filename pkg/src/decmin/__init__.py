"""Decreasingly minimal elements of M-convex sets and their graph applications."""

from __future__ import annotations

from .errors import BudgetError, CapacityError, DecminError, InfeasibleError, NotDecMinError, ParseError
from .mconvex import (
    CanonicalDecomposition,
    MConvexHandle,
    box_intersect,
    canonical_chain,
    dec_compare,
    decmin_basic,
    decmin_strong,
    handle_from_supermodular,
    inc_compare,
    min_cost_decmin,
    newton_dinkelbach_beta1,
    square_sum,
    verify_decmin,
)
from .netflow import ArcBounds, Digraph, feasible_m_flow, megiddo_discrete, min_cost_circulation, netinflow_handle
from .orient import (
    MixedGraph,
    NodeBounds,
    Orientation,
    UndirGraph,
    capacitated_decmin_orientation,
    cheapest_decmin_orientation,
    decmin_kec_orientation,
    decmin_orientation,
    decmin_orientation_bounded,
    decmin_strong_orientation,
    orientation_handle,
)
from .semimatching import SemiMatching, semimatching_decmin
from .setfn import ExplicitSetFunction, GroundSet, SetFunctionOracle

__version__ = "0.1.0"

__all__ = [
    "annotations",
    "ArcBounds",
    "box_intersect",
    "BudgetError",
    "canonical_chain",
    "CanonicalDecomposition",
    "capacitated_decmin_orientation",
    "CapacityError",
    "cheapest_decmin_orientation",
    "dec_compare",
    "decmin_basic",
    "decmin_kec_orientation",
    "decmin_orientation",
    "decmin_orientation_bounded",
    "decmin_strong",
    "decmin_strong_orientation",
    "DecminError",
    "Digraph",
    "ExplicitSetFunction",
    "feasible_m_flow",
    "GroundSet",
    "handle_from_supermodular",
    "inc_compare",
    "InfeasibleError",
    "MConvexHandle",
    "megiddo_discrete",
    "min_cost_circulation",
    "min_cost_decmin",
    "MixedGraph",
    "netinflow_handle",
    "newton_dinkelbach_beta1",
    "NodeBounds",
    "NotDecMinError",
    "Orientation",
    "orientation_handle",
    "ParseError",
    "SemiMatching",
    "semimatching_decmin",
    "SetFunctionOracle",
    "square_sum",
    "UndirGraph",
    "verify_decmin",
]
