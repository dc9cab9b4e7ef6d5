"""Plane trees and unicellular dessins covering chains and stars."""

from .cover import (
    CoverReport,
    covers_chain,
    covers_dessin,
    covers_star,
    covers_tree,
    is_chain,
    is_star,
    quotient,
)
from .enumeration import rooted_trees, search_genus_order, unrooted_trees
from .invariants import (
    CurveData,
    covers_chain_by_branches,
    covers_star_by_branches,
    curve_data,
    d_c,
    d_s,
    odd_vertex_divisibility_check,
)
from .maps import (
    BranchPair,
    CombinatorialMap,
    MapError,
    PlaneTree,
    adjacent_branch_pairs,
    branch_weight,
    degree_profile,
    odd_vertex_count,
    parse,
)
from .walk import (
    DartInvolution,
    canonical_form,
    from_involution,
    genus,
    phi_at,
    to_involution,
    verify_branch_formula,
)

__version__ = "0.1.0"
