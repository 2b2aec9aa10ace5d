"""Division-free characteristic polynomials of adjacency matrices.

The Samuelson-Berkowitz recursion grows the leading principal submatrix one
vertex at a time. Taking vertices of an induced subgraph in increasing order,
the polynomial of a vertex set ``B`` follows from that of ``B`` minus its
largest vertex by a single Toeplitz step, so the polynomials of all induced
subgraphs share prefixes and memoise naturally (see :class:`DeletionCache`).
"""
from __future__ import annotations

from typing import Sequence

from .graph import Graph, _bits
from .poly import IntPoly

__all__ = ["charpoly", "vertex_deleted_charpolys", "DeletionCache", "charpoly_high"]


def _berkowitz_step(g: Graph, prev_mask: int, w: int, prev_high: Sequence[int]) -> list[int]:
    """Coefficients (high to low) for ``prev_mask | {w}`` with ``w`` above all of ``prev_mask``."""
    m = len(prev_high)  # size of the new vertex set
    attach = g.rows[w] & prev_mask
    if not attach:
        return list(prev_high) + [0]
    verts = list(_bits(prev_mask))
    pos = {v: i for i, v in enumerate(verts)}
    rows = g.rows
    nbrs = [[pos[u] for u in _bits(rows[v] & prev_mask)] for v in verts]
    col = [pos[u] for u in _bits(attach)]
    vec = [0] * len(verts)
    for i in col:
        vec[i] = 1
    t = [1, 0, -len(col)]  # no loops: the diagonal entry is zero
    for _ in range(m - 2):
        vec = [sum([vec[j] for j in nb]) for nb in nbrs]
        t.append(-sum([vec[i] for i in col]))
    out = [0] * (m + 1)
    for i, ti in enumerate(t):
        if ti:
            for j in range(min(m, m + 1 - i)):
                out[i + j] += ti * prev_high[j]
    return out


def charpoly_high(g: Graph, keep_mask: int | None = None) -> list[int]:
    """``det(xI - A)`` of the subgraph induced by ``keep_mask``, high degree first."""
    if keep_mask is None:
        keep_mask = (1 << g.n) - 1
    high = [1]
    mask = 0
    for w in _bits(keep_mask):
        high = _berkowitz_step(g, mask, w, high)
        mask |= 1 << w
    return high


def charpoly(g: Graph) -> IntPoly:
    """Exact characteristic polynomial; the empty graph gives ``1``."""
    return IntPoly.from_high(charpoly_high(g))


class DeletionCache:
    """Memoised ``P(G - A)`` for deletion sets ``A`` given as bitmasks.

    Entries are filled along Berkowitz chains, so asking for every subset of
    an ``n``-vertex graph costs one Toeplitz step per subset.
    """

    def __init__(self, g: Graph):
        self.graph = g
        self.full = (1 << g.n) - 1
        self._high: dict[int, list[int]] = {0: [1]}
        self._poly: dict[int, IntPoly] = {}

    def high_kept(self, keep: int) -> list[int]:
        chain = []
        mask = keep
        while mask not in self._high:
            chain.append(mask)
            mask &= ~(1 << (mask.bit_length() - 1))
        for m in reversed(chain):
            w = m.bit_length() - 1
            prev = m & ~(1 << w)
            self._high[m] = _berkowitz_step(self.graph, prev, w, self._high[prev])
        return self._high[keep]

    def kept(self, keep: int) -> IntPoly:
        p = self._poly.get(keep)
        if p is None:
            p = self._poly[keep] = IntPoly.from_high(self.high_kept(keep))
        return p

    def deleted(self, dead: int) -> IntPoly:
        return self.kept(self.full & ~dead)

    def deleted_vertices(self, vertices) -> IntPoly:
        dead = 0
        for v in vertices:
            if not 0 <= v < self.graph.n:
                raise IndexError(f"vertex {v} out of range for n={self.graph.n}")
            dead |= 1 << v
        return self.deleted(dead)

    def __len__(self):
        return len(self._high)


def vertex_deleted_charpolys(g: Graph) -> list[IntPoly]:
    """Entry ``v`` is ``P(G - v)``."""
    if g.n < 1:
        raise ValueError("graph must have at least one vertex")
    cache = DeletionCache(g)
    return [cache.deleted(1 << v) for v in range(g.n)]
