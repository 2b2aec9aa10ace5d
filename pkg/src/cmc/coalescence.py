"""Characteristic polynomials of coalescences.

Schwenk's two-graph formula, the closed form for ``G^(a)`` and the
inclusion-exclusion expansion of multiple coalescences in terms of the
rooted-graph polynomials ``Q = PG - x P(G-r)`` and ``R = P(G-r)``.
"""
from __future__ import annotations

import itertools
from typing import Sequence

from .charpoly import DeletionCache, charpoly
from .graph import Graph, RootedGraph, build_coalescence
from .poly import IntPoly, SymPoly, X, sym_substitute

__all__ = [
    "schwenk_coalescence",
    "g_power_charpoly",
    "hosoya_charpoly",
    "hosoya_charpoly_multi",
    "rooted_qr",
    "concrete_coalescence_charpoly",
    "direct_coalescence_charpoly",
]


def schwenk_coalescence(pg: IntPoly, pgu: IntPoly, ph: IntPoly, phv: IntPoly) -> IntPoly:
    """``P(G(u=v)H) = PG P(H-v) + P(G-u) PH - x P(G-u) P(H-v)``."""
    if pgu.degree != pg.degree - 1 or phv.degree != ph.degree - 1:
        raise ValueError("vertex-deleted polynomial must have degree one less than the graph's")
    return pg * phv + pgu * ph - (X * pgu * phv)


def g_power_charpoly(pg: IntPoly, pgr: IntPoly, a: int) -> IntPoly:
    """Characteristic polynomial of ``a`` copies of a rooted graph glued at the root."""
    if a < 1:
        raise ValueError("number of copies must be at least 1")
    if pgr.degree != pg.degree - 1:
        raise ValueError("root-deleted polynomial must have degree one less than the graph's")
    return (pg.scale(a) - (X * pgr).scale(a - 1)) * pgr ** (a - 1)


def _check_selection(t: Graph, u: Sequence[int], sig: Sequence[int]):
    if len(u) != len(sig):
        raise ValueError(f"{len(u)} vertices but signature of length {len(sig)}")
    if len(set(u)) != len(u):
        raise ValueError(f"selected vertices must be distinct: {tuple(u)}")
    for v in u:
        if not 0 <= v < t.n:
            raise IndexError(f"vertex {v} out of range for n={t.n}")
    if any(a < 1 for a in sig):
        raise ValueError(f"signature entries must be positive: {tuple(sig)}")


def hosoya_charpoly(t: Graph, u: Sequence[int], sig: Sequence[int], cache: DeletionCache | None = None) -> SymPoly:
    """Charpoly of ``T(u_1=r)G^(a_1)...(u_k=r)G^(a_k)`` as a polynomial in ``x, Q, R``."""
    _check_selection(t, u, sig)
    cache = cache or DeletionCache(t)
    k, total = len(u), sum(sig)
    out: dict[tuple[int, int, int], int] = {}
    for size in range(k + 1):
        for subset in itertools.combinations(range(k), size):
            weight = 1
            dead = 0
            for i in subset:
                weight *= sig[i]
                dead |= 1 << u[i]
            for d, c in enumerate(cache.deleted(dead).coeffs):
                if c:
                    key = (d, size, total - size)
                    out[key] = out.get(key, 0) + weight * c
    return SymPoly(1, out)


def hosoya_charpoly_multi(t: Graph, u: Sequence[int], sig: Sequence[int], cache: DeletionCache | None = None) -> SymPoly:
    """Charpoly with independent rooted graphs ``G_i`` (indeterminates ``Q_i, R_i``)."""
    _check_selection(t, u, sig)
    cache = cache or DeletionCache(t)
    k = len(u)
    out: dict[tuple[int, ...], int] = {}
    for mask in range(1 << k):
        weight = 1
        dead = 0
        q = [0] * k
        r = list(sig)
        for i in range(k):
            if mask >> i & 1:
                weight *= sig[i]
                dead |= 1 << u[i]
                q[i] = 1
                r[i] -= 1
        tail = tuple(q) + tuple(r)
        for d, c in enumerate(cache.deleted(dead).coeffs):
            if c:
                key = (d,) + tail
                out[key] = out.get(key, 0) + weight * c
    return SymPoly(k, out)


def rooted_qr(g: RootedGraph) -> tuple[IntPoly, IntPoly]:
    """``(Q, R) = (PG - x P(G-r), P(G-r))``."""
    cache = DeletionCache(g.graph)
    pg = cache.deleted(0)
    r = cache.deleted(1 << g.root)
    return pg - X * r, r


def concrete_coalescence_charpoly(t: Graph, u: Sequence[int], sig: Sequence[int], g: RootedGraph,
                                  cache: DeletionCache | None = None) -> IntPoly:
    """Charpoly of the built coalescence, via the symbolic expansion."""
    q, r = rooted_qr(g)
    return sym_substitute(hosoya_charpoly(t, u, sig, cache), [q], [r])


def direct_coalescence_charpoly(t: Graph, u: Sequence[int], sig: Sequence[int], g: RootedGraph) -> IntPoly:
    """Same quantity, from the literally constructed graph."""
    return charpoly(build_coalescence(t, u, sig, g))
