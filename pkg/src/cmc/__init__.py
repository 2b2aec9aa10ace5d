"""Cospectral multiple coalescences of graphs.

Exact characteristic polynomials, multiple coalescence formulas, the Hosoya
cospectrality test and an exhaustive search for cospectral coalescences.
"""
from .charpoly import DeletionCache, charpoly, vertex_deleted_charpolys
from .coalescence import (
    concrete_coalescence_charpoly,
    direct_coalescence_charpoly,
    g_power_charpoly,
    hosoya_charpoly,
    hosoya_charpoly_multi,
    rooted_qr,
    schwenk_coalescence,
)
from .cospectral import (
    CoalescenceSpec,
    exists_removal_correspondence,
    group_cospectral,
    hosoya_vector,
    is_removal_cospectral,
)
from .families import PathFamilyParams, generate_pair, parse_params, theta, verify_pair
from .graph import (
    Graph,
    Graph6Error,
    RootedGraph,
    build_coalescence,
    graph6_decode,
    graph6_encode,
    path_graph,
)
from .poly import IntPoly, SymPoly
from .search import MatchClass, SearchReport, find_matches

__version__ = "0.1.0"

__all__ = [
    "CoalescenceSpec",
    "DeletionCache",
    "Graph",
    "Graph6Error",
    "IntPoly",
    "MatchClass",
    "PathFamilyParams",
    "RootedGraph",
    "SearchReport",
    "SymPoly",
    "build_coalescence",
    "charpoly",
    "concrete_coalescence_charpoly",
    "direct_coalescence_charpoly",
    "exists_removal_correspondence",
    "find_matches",
    "g_power_charpoly",
    "generate_pair",
    "graph6_decode",
    "graph6_encode",
    "group_cospectral",
    "hosoya_charpoly",
    "hosoya_charpoly_multi",
    "hosoya_vector",
    "is_removal_cospectral",
    "parse_params",
    "path_graph",
    "rooted_qr",
    "schwenk_coalescence",
    "theta",
    "verify_pair",
    "vertex_deleted_charpolys",
]
