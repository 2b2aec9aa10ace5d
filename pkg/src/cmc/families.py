"""An infinite family of cospectral coalescence pairs on paths.

For ``k >= 3``, ``1 <= m < k/2``, ``d >= 2`` and offsets
``0 <= a_1 < ... < a_p <= d - 2`` take the path on ``n = kd - 1`` vertices and
the common selection ``u(i, j) = (i - 1) d + a_j``. Adding ``v = md - 1`` or
``w = (k - m) d - 1`` gives two all-ones selections whose coalescences are
cospectral for every rooted graph. The vertex map :func:`theta` carries
``P_n - v`` onto ``P_n - w`` and permutes the common selection.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator

from .charpoly import DeletionCache
from .cospectral import CoalescenceSpec, hosoya_vector
from .graph import path_graph

__all__ = ["PathFamilyParams", "generate_pair", "verify_pair", "theta", "parse_params", "admissible_params"]


@dataclass(frozen=True)
class PathFamilyParams:
    k: int
    m: int
    d: int
    a: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "a", tuple(self.a))
        if self.k < 3:
            raise ValueError(f"k must be at least 3, got {self.k}")
        if not 1 <= self.m or not 2 * self.m < self.k:
            raise ValueError(f"need 1 <= m < k/2, got m={self.m}, k={self.k}")
        if self.d < 2:
            raise ValueError(f"d must be at least 2, got {self.d}")
        if not self.a:
            raise ValueError("offset tuple must be nonempty")
        if any(x >= y for x, y in zip(self.a, self.a[1:])):
            raise ValueError(f"offsets must be strictly increasing: {self.a}")
        if self.a[0] < 0 or self.a[-1] > self.d - 2:
            raise ValueError(f"offsets must lie in 0..{self.d - 2}: {self.a}")

    @property
    def n(self) -> int:
        return self.k * self.d - 1

    @property
    def v(self) -> int:
        return self.m * self.d - 1

    @property
    def w(self) -> int:
        return (self.k - self.m) * self.d - 1

    def common(self) -> list[int]:
        return [i * self.d + aj for i in range(self.k) for aj in self.a]

    def __str__(self):
        return f"{self.k},{self.m},{self.d}," + ":".join(map(str, self.a))


def parse_params(text: str) -> PathFamilyParams:
    """Parse ``"k,m,d,a1:a2:...:ap"``."""
    parts = text.strip().split(",")
    if len(parts) != 4:
        raise ValueError(f"expected 'k,m,d,a1:...:ap', got {text!r}")
    try:
        k, m, d = (int(x) for x in parts[:3])
        a = tuple(int(x) for x in parts[3].split(":"))
    except ValueError:
        raise ValueError(f"non-integer field in {text!r}") from None
    return PathFamilyParams(k, m, d, a)


def generate_pair(params: PathFamilyParams) -> tuple[CoalescenceSpec, CoalescenceSpec]:
    path = path_graph(params.n)
    common = params.common()
    ones = (1,) * (len(common) + 1)
    first = CoalescenceSpec(path, tuple(sorted(common + [params.v])), ones)
    second = CoalescenceSpec(path, tuple(sorted(common + [params.w])), ones)
    return first, second


def verify_pair(p1: CoalescenceSpec, p2: CoalescenceSpec) -> bool:
    """Equal Hosoya vectors, i.e. cospectral for every attached rooted graph."""
    if p1.signature != p2.signature:
        raise ValueError(f"signatures differ: {p1.signature} vs {p2.signature}")
    c1 = DeletionCache(p1.graph)
    c2 = c1 if p2.graph == p1.graph else DeletionCache(p2.graph)
    return hosoya_vector(p1, c1) == hosoya_vector(p2, c2)


def theta(params: PathFamilyParams, x: int) -> int:
    """Vertex map from ``P_n - v - w`` to itself used to match the two deletions."""
    if x in (params.v, params.w) or not 0 <= x < params.n:
        raise ValueError(f"theta is defined on the path minus v and w, got {x}")
    if x < params.v:
        return x + (params.k - params.m) * params.d
    return x - params.m * params.d


def admissible_params(max_n: int, max_p: int) -> Iterator[PathFamilyParams]:
    """All parameter sets with ``kd - 1 <= max_n`` and ``1 <= p <= max_p``."""
    for k in range(3, (max_n + 1) // 2 + 1):
        for d in range(2, (max_n + 1) // k + 1):
            for m in range(1, (k + 1) // 2):
                if 2 * m >= k:
                    continue
                for p in range(1, max_p + 1):
                    for a in itertools.combinations(range(d - 1), p):
                        yield PathFamilyParams(k, m, d, a)
