"""Cospectrality tests for multiple coalescences.

Two coalescences with the same signature are cospectral for every attached
rooted graph exactly when their :func:`hosoya_vector` values agree. The
stronger, "trivial" situation is removal-cospectrality, where a bijection of
the selected vertices matches every vertex-deleted subgraph.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Sequence

from .charpoly import DeletionCache, charpoly
from .graph import Graph
from .poly import IntPoly

__all__ = [
    "CoalescenceSpec",
    "HosoyaVector",
    "hosoya_vector",
    "elementary_symmetric",
    "is_removal_cospectral",
    "exists_removal_correspondence",
    "group_cospectral",
    "signature_blocks",
]

HosoyaVector = tuple[IntPoly, ...]


def signature_blocks(sig: Sequence[int]) -> list[range]:
    """Maximal runs of equal consecutive entries, as position ranges."""
    blocks = []
    start = 0
    for i in range(1, len(sig) + 1):
        if i == len(sig) or sig[i] != sig[start]:
            blocks.append(range(start, i))
            start = i
    return blocks


@dataclass(frozen=True)
class CoalescenceSpec:
    """Underlying graph, selected vertices and the copies attached at each.

    Vertices inside a run of equal signature entries are stored sorted, so
    specs that describe the same coalescence compare equal.
    """

    graph: Graph
    vertices: tuple[int, ...]
    signature: tuple[int, ...]

    def __post_init__(self):
        vertices = tuple(int(v) for v in self.vertices)
        sig = tuple(int(a) for a in self.signature)
        if len(vertices) != len(sig):
            raise ValueError(f"{len(vertices)} vertices but signature of length {len(sig)}")
        if len(set(vertices)) != len(vertices):
            raise ValueError(f"selected vertices must be distinct: {vertices}")
        for v in vertices:
            if not 0 <= v < self.graph.n:
                raise IndexError(f"vertex {v} out of range for n={self.graph.n}")
        if any(a < 1 for a in sig):
            raise ValueError(f"signature entries must be positive: {sig}")
        canon = []
        for block in signature_blocks(sig):
            canon.extend(sorted(vertices[i] for i in block))
        object.__setattr__(self, "vertices", tuple(canon))
        object.__setattr__(self, "signature", sig)

    @property
    def k(self) -> int:
        return len(self.vertices)

    def multiplicities(self) -> dict[int, int]:
        return dict(zip(self.vertices, self.signature))

    def sort_key(self):
        return (self.graph.n, self.graph.rows, self.signature, self.vertices)

    def __repr__(self):
        return f"CoalescenceSpec(n={self.graph.n}, vertices={self.vertices}, signature={self.signature})"


def elementary_symmetric(values: Sequence[int], l: int) -> int:
    return sum(_prod(c) for c in itertools.combinations(values, l))


def _prod(items) -> int:
    out = 1
    for a in items:
        out *= a
    return out


def hosoya_vector(spec: CoalescenceSpec, cache: DeletionCache | None = None) -> HosoyaVector:
    """Component ``l`` is the sum over ``l``-subsets ``I`` of ``P(T - u_I) * prod a_I``."""
    cache = cache or DeletionCache(spec.graph)
    k = spec.k
    comps: list[list[int]] = [[] for _ in range(k + 1)]
    weight = [1] * (1 << k)
    dead = [0] * (1 << k)
    for mask in range(1, 1 << k):
        low = (mask & -mask).bit_length() - 1
        rest = mask & (mask - 1)
        weight[mask] = weight[rest] * spec.signature[low]
        dead[mask] = dead[rest] | (1 << spec.vertices[low])
    for mask in range(1 << k):
        acc = comps[mask.bit_count()]
        coeffs = cache.deleted(dead[mask]).coeffs
        if len(acc) < len(coeffs):
            acc.extend([0] * (len(coeffs) - len(acc)))
        w = weight[mask]
        for d, c in enumerate(coeffs):
            acc[d] += w * c
    return tuple(IntPoly(c) for c in comps)


def is_removal_cospectral(t1: Graph, s1: Sequence[int], t2: Graph, s2: Sequence[int],
                          cache1: DeletionCache | None = None, cache2: DeletionCache | None = None) -> bool:
    """Whether ``P(T1 - A) = P(T2 - theta(A))`` for every ``A``, ``theta`` positional."""
    if len(s1) != len(s2):
        raise ValueError("vertex tuples must have equal length")
    cache1 = cache1 or DeletionCache(t1)
    cache2 = cache2 or DeletionCache(t2)
    for mask in range(1 << len(s1)):
        d1 = d2 = 0
        for i in range(len(s1)):
            if mask >> i & 1:
                d1 |= 1 << s1[i]
                d2 |= 1 << s2[i]
        if cache1.deleted(d1) != cache2.deleted(d2):
            return False
    return True


def exists_removal_correspondence(spec1: CoalescenceSpec, spec2: CoalescenceSpec,
                                  cache1: DeletionCache | None = None,
                                  cache2: DeletionCache | None = None) -> bool:
    """Whether some multiplicity-preserving bijection makes the selections removal-cospectral.

    Backtracks over assignments position by position, checking every subset
    made of already-assigned positions as soon as it is complete.
    """
    if spec1.signature != spec2.signature:
        raise ValueError("specs must share a signature")
    cache1 = cache1 or DeletionCache(spec1.graph)
    cache2 = cache2 or DeletionCache(spec2.graph)
    if cache1.deleted(0) != cache2.deleted(0):
        return False
    k = spec1.k
    u, v, sig = spec1.vertices, spec2.vertices, spec1.signature
    used = [False] * k
    # deleted masks for all subsets of the assigned prefix, in both graphs
    prefix1 = [0]
    prefix2 = [0]

    def place(i: int) -> bool:
        if i == k:
            return True
        for j in range(k):
            if used[j] or sig[j] != sig[i]:
                continue
            b1, b2 = 1 << u[i], 1 << v[j]
            new1 = [m | b1 for m in prefix1]
            new2 = [m | b2 for m in prefix2]
            if all(cache1.deleted(a) == cache2.deleted(b) for a, b in zip(new1, new2)):
                used[j] = True
                prefix1.extend(new1)
                prefix2.extend(new2)
                if place(i + 1):
                    return True
                del prefix1[len(prefix1) // 2:]
                del prefix2[len(prefix2) // 2:]
                used[j] = False
        return False

    return place(0)


def group_cospectral(graphs: Sequence[Graph], polys: Sequence[IntPoly] | None = None) -> list[list[int]]:
    """Partition indices by characteristic polynomial, groups in coefficient order."""
    if polys is None:
        polys = [charpoly(g) for g in graphs]
    groups: dict[tuple[int, ...], list[int]] = {}
    for i, p in enumerate(polys):
        groups.setdefault(tuple(p.high_to_low()), []).append(i)
    return [groups[key] for key in sorted(groups, key=lambda c: (len(c), c))]
