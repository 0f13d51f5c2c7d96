"""Finitely presented infinite graphs and their matroids."""

from .words import EdgeSetExpr, UPWord, edge_name, parse_edge_name, single
from .sgraph import CoreTailRule, CrossRule, PatchEdge, StructuredGraph, expr, finite_embed
from .periodic import analyse
from .topology import (
    EdgeEnd,
    PreconditionError,
    Refused,
    acirclic,
    bean_check,
    closure_connected,
    ends,
    is_bond,
    is_circle,
    is_mac_cocircuit,
    is_topological_spanning_tree,
    skew_cut_check,
    skew_cuts_at,
    topological_spanning_tree,
)
from .oracles import (
    matroid_oracles,
    standard_sample,
    verify_duality_chain,
    verify_mac_duality,
)
