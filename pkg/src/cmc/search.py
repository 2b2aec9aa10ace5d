"""Exhaustive search for cospectral multiple coalescences (CMCs).

A candidate is an assignment ``f: V(T) -> {0..mse}``; vertices with ``f(v) > 0``
are selected and ``f(v)`` copies are attached there. The sorted nonzero values
form the signature. All assignments of a graph are fingerprinted at once with
the identity

    sum_A P(T - A)(x) * prod_{v in A} f(v) t  =  det(xI - A_T + t diag(f)),

evaluated at fixed points modulo two primes through a multilinear tensor
contraction over the hypercube of deletion sets. Equal Hosoya vectors imply
equal fingerprints, so only fingerprint collisions are examined exactly.

Members of an exact bucket are merged into removal-cospectral equivalence
classes; a bucket with ``m >= 2`` classes is reported as an ``m``-tuple.
"""
from __future__ import annotations

import itertools
import logging
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterable, Iterator, Sequence

import numpy as np

from .charpoly import DeletionCache
from .cospectral import (
    CoalescenceSpec,
    HosoyaVector,
    exists_removal_correspondence,
    hosoya_vector,
    signature_blocks,
)
from .graph import Graph, automorphisms

__all__ = [
    "MatchClass",
    "SearchReport",
    "enumerate_signatures",
    "enumerate_selections",
    "find_matches",
    "spec_orbit",
    "naive_matches",
]

log = logging.getLogger(__name__)

PRIMES = (2147483647, 2147483629)
# fixed evaluation points (x, t) per prime; any choice is exact after verification
POINTS = ((1234567891, 987654321), (1618033988, 1414213562))
CHUNK = 1 << 21
TWO_PASS_THRESHOLD = 1 << 24


@dataclass(frozen=True)
class MatchClass:
    """Two or more mutually non-removal-cospectral specs with equal Hosoya vectors.

    ``members`` holds one representative per removal-cospectral equivalence
    class; ``equivalents[i]`` lists every spec found equivalent to
    ``members[i]`` (the member first).
    """

    signature: tuple[int, ...]
    vector: HosoyaVector
    members: tuple[CoalescenceSpec, ...]
    equivalents: tuple[tuple[CoalescenceSpec, ...], ...]

    @property
    def size(self) -> int:
        return len(self.members)

    @property
    def k(self) -> int:
        return len(self.signature)

    @property
    def removal_cospectral_flag(self) -> bool:
        return any(len(e) > 1 for e in self.equivalents)

    def sort_key(self):
        return (self.k, self.signature, tuple(p.coeffs for p in self.vector),
                tuple(m.sort_key() for m in self.members))


@dataclass
class SearchReport:
    counts: dict[int, int] = field(default_factory=dict)
    classes: list[MatchClass] = field(default_factory=list)
    groups: int = 0
    errors: list[str] = field(default_factory=list)

    def add(self, cls: MatchClass):
        self.counts[cls.size] = self.counts.get(cls.size, 0) + 1
        self.classes.append(cls)

    @property
    def pairs(self) -> int:
        return self.counts.get(2, 0)

    @property
    def triplets(self) -> int:
        return self.counts.get(3, 0)

    @property
    def quadruplets(self) -> int:
        return self.counts.get(4, 0)


# ---------------------------------------------------------------- enumeration

def enumerate_signatures(k: int, mse: int) -> Iterator[tuple[int, ...]]:
    """Nonincreasing ``k``-tuples over ``1..mse`` with gcd 1, lexicographically descending."""
    if k < 1 or mse < 1:
        return
    for sig in itertools.combinations_with_replacement(range(mse, 0, -1), k):
        if math.gcd(*sig) == 1:
            yield sig


def enumerate_selections(g: Graph, sig: Sequence[int]) -> Iterator[tuple[int, ...]]:
    """Ordered vertex tuples for ``sig``, sorted inside each run of equal entries."""
    if len(sig) > g.n:
        raise ValueError(f"cannot select {len(sig)} distinct vertices from {g.n}")
    sizes = [len(b) for b in signature_blocks(sig)]

    def rec(i: int, avail: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
        if i == len(sizes):
            yield ()
            return
        for chosen in itertools.combinations(avail, sizes[i]):
            rest = tuple(v for v in avail if v not in chosen)
            for tail in rec(i + 1, rest):
                yield chosen + tail

    yield from rec(0, tuple(range(g.n)))


def spec_from_assignment(g: Graph, f: Sequence[int]) -> CoalescenceSpec:
    order = sorted((v for v in range(g.n) if f[v]), key=lambda v: (-f[v], v))
    return CoalescenceSpec(g, tuple(order), tuple(f[v] for v in order))


def spec_orbit(spec: CoalescenceSpec, autos: Iterable[Sequence[int]]) -> list[CoalescenceSpec]:
    """Distinct images of ``spec`` under the given automorphisms, sorted."""
    seen = {}
    for perm in autos:
        image = CoalescenceSpec(spec.graph, tuple(perm[v] for v in spec.vertices), spec.signature)
        seen[image.vertices] = image
    return sorted(seen.values(), key=CoalescenceSpec.sort_key)


# ---------------------------------------------------------------- fingerprints

class _GridPlan:
    """Everything needed to fingerprint every assignment of one graph."""

    def __init__(self, g: Graph, mse: int, k_range: tuple[int, int], quotient: Sequence[Sequence[int]]):
        self.graph = g
        self.n = n = g.n
        self.base = b = mse + 1
        self.k_lo, self.k_hi = k_range
        self.free = free = min(n, max(1, int(math.log(CHUNK) / math.log(b)))) if n else 0
        self.fixed = n - free
        self.place = [b ** (n - 1 - v) for v in range(n)]
        self.autos = [tuple(p) for p in quotient if any(p[v] != v for v in range(n))]
        cache = DeletionCache(g)
        full = (1 << n) - 1
        self.tensors = []
        for p, (x0, t0) in zip(PRIMES, POINTS):
            vals = np.empty(1 << n, dtype=np.int64)
            for mask in range(1 << n):
                vals[mask] = cache.kept(full & ~mask)(x0) % p
            # axis i <-> vertex i
            tensor = vals.reshape((2,) * n).transpose(tuple(range(n - 1, -1, -1))) if n else vals.reshape(())
            weights = np.array([(j * t0) % p for j in range(b)], dtype=np.int64)
            self.tensors.append((p, np.ascontiguousarray(tensor), weights))

        size = b ** free
        local = np.arange(size, dtype=np.int64)
        digits = [(local // b ** (free - 1 - i)) % b for i in range(free)]
        self.free_nnz = sum((d != 0).astype(np.int8) for d in digits) if digits else np.zeros(1, np.int8)
        g_acc = np.zeros(size, dtype=np.int64)
        for d in digits:
            g_acc = np.gcd(g_acc, d)
        self.free_gcd = g_acc
        self.free_index = local
        self.free_images = []
        for perm in self.autos:
            acc = np.zeros(size, dtype=np.int64)
            for i, d in enumerate(digits):
                acc += d * self.place[perm[self.fixed + i]]
            self.free_images.append(acc)

    def chunks(self) -> Iterator[tuple[int, ...]]:
        return itertools.product(range(self.base), repeat=self.fixed)

    def evaluate(self, prefix: tuple[int, ...]) -> tuple[np.ndarray, np.ndarray]:
        """Keys and global indices of admissible assignments extending ``prefix``."""
        n, b, fixed = self.n, self.base, self.fixed
        keep = np.ones(b ** self.free, dtype=bool)
        nnz = self.free_nnz + sum(1 for a in prefix if a)
        keep &= (nnz >= self.k_lo) & (nnz <= self.k_hi)
        pg = 0
        for a in prefix:
            pg = math.gcd(pg, a)
        keep &= np.gcd(self.free_gcd, pg) == 1
        base_index = sum(a * self.place[v] for v, a in enumerate(prefix))
        index = self.free_index + base_index
        for perm, free_img in zip(self.autos, self.free_images):
            image = free_img + sum(a * self.place[perm[v]] for v, a in enumerate(prefix))
            keep &= index <= image
        if not keep.any():
            return np.empty(0, np.int64), np.empty(0, np.int64)
        key = None
        for p, tensor, weights in self.tensors:
            t = tensor
            for a in prefix:
                t = (t[0] + weights[a] * t[1]) % p
            e = np.stack([np.ones(b, dtype=np.int64), weights])
            for _ in range(self.free):
                t = np.tensordot(t, e, axes=([0], [0])) % p
            h = t.reshape(-1)
            key = h if key is None else (key << 31) | h
        return key[keep], index[keep]

    def assignment(self, index: int) -> tuple[int, ...]:
        return tuple((index // self.place[v]) % self.base for v in range(self.n))


def _plan_keys(plan: _GridPlan, with_index: bool):
    keys, idxs = [], []
    for prefix in plan.chunks():
        k, i = plan.evaluate(prefix)
        keys.append(k)
        if with_index:
            idxs.append(i)
    return keys, idxs


def _duplicate_keys(sorted_keys: np.ndarray) -> np.ndarray:
    if sorted_keys.size < 2:
        return np.empty(0, np.int64)
    same = sorted_keys[1:] == sorted_keys[:-1]
    return np.unique(sorted_keys[1:][same])


def _candidates(plans: Sequence[_GridPlan]) -> list[tuple[int, int, int]]:
    """``(key, graph position, assignment index)`` for all colliding fingerprints."""
    total = sum(p.base ** p.n for p in plans)
    if total <= TWO_PASS_THRESHOLD:
        keys, gids, idxs = [], [], []
        for gid, plan in enumerate(plans):
            k, i = _plan_keys(plan, True)
            keys.extend(k)
            idxs.extend(i)
            gids.extend(np.full(len(a), gid, dtype=np.int64) for a in k)
        if not keys:
            return []
        key = np.concatenate(keys)
        gid = np.concatenate(gids)
        idx = np.concatenate(idxs)
        dups = _duplicate_keys(np.sort(key))
        sel = np.isin(key, dups)
        return sorted(zip(key[sel].tolist(), gid[sel].tolist(), idx[sel].tolist()))
    # large grids: collect keys only, then revisit chunks for the colliding ones
    keys = []
    for plan in plans:
        keys.extend(_plan_keys(plan, False)[0])
    allkeys = np.concatenate(keys) if keys else np.empty(0, np.int64)
    del keys
    allkeys.sort()
    dups = _duplicate_keys(allkeys)
    del allkeys
    log.info("fingerprint collisions: %d keys", dups.size)
    out = []
    for gid, plan in enumerate(plans):
        for prefix in plan.chunks():
            k, i = plan.evaluate(prefix)
            sel = np.isin(k, dups)
            if sel.any():
                out.extend(zip(k[sel].tolist(), itertools.repeat(gid), i[sel].tolist()))
    return sorted(out)


# ---------------------------------------------------------------- exact phase

def _classify_bucket(specs: list[CoalescenceSpec], caches: dict[Graph, DeletionCache]) -> list[list[CoalescenceSpec]]:
    classes: list[list[CoalescenceSpec]] = []
    for s in specs:
        for c in classes:
            if exists_removal_correspondence(s, c[0], caches[s.graph], caches[c[0].graph]):
                c.append(s)
                break
        else:
            classes.append([s])
    return classes


def _exact_classes(group: Sequence[Graph], plans: Sequence[_GridPlan],
                   candidates: list[tuple[int, int, int]], expand: bool,
                   autos: Sequence[list[tuple[int, ...]]]) -> list[MatchClass]:
    caches = {}
    for g in group:
        caches.setdefault(g, DeletionCache(g))
    out = []
    for _, run in itertools.groupby(candidates, key=lambda c: c[0]):
        run = list(run)
        if len(run) < 2:
            continue
        buckets: dict[tuple, list[CoalescenceSpec]] = {}
        for _, gid, idx in run:
            spec = spec_from_assignment(group[gid], plans[gid].assignment(idx))
            vec = hosoya_vector(spec, caches[spec.graph])
            buckets.setdefault((spec.signature, vec), []).append(spec)
        for (sig, vec), specs in buckets.items():
            if len(specs) < 2:
                continue
            classes = _classify_bucket(specs, caches)
            if len(classes) < 2:
                continue
            full = []
            for c in classes:
                members: dict[tuple, CoalescenceSpec] = {}
                for s in c:
                    images = spec_orbit(s, autos[_index_of(group, s.graph)]) if expand else [s]
                    for im in images:
                        members[im.sort_key()] = im
                full.append(tuple(members[k] for k in sorted(members)))
            full.sort(key=lambda e: e[0].sort_key())
            out.append(MatchClass(sig, vec, tuple(e[0] for e in full), tuple(full)))
    return out


def _index_of(group: Sequence[Graph], g: Graph) -> int:
    for i, h in enumerate(group):
        if h is g:
            return i
    return group.index(g)


def _search_task(args):
    group, mse, k_range, dedup = args
    return _find(group, mse, k_range, dedup)


def _find(group: Sequence[Graph], mse: int, k_range: tuple[int, int], dedup: bool) -> list[MatchClass]:
    autos = [automorphisms(g) for g in group]
    plans = [_GridPlan(g, mse, k_range, a) for g, a in zip(group, autos)]
    cands = _candidates(plans)
    classes = _exact_classes(group, plans, cands, not dedup, autos)
    classes.sort(key=MatchClass.sort_key)
    return classes


def find_matches(group: Sequence[Graph], mse: int, k_range: tuple[int, int] | range | None = None,
                 dedup_automorphisms: bool = False, jobs: int = 1) -> list[MatchClass]:
    """All CMC classes among selections on the graphs of ``group``.

    ``k_range`` bounds the number of selected vertices (inclusive pair or a
    ``range``); by default every ``k`` from 1 to ``n`` is searched. With
    ``jobs > 1`` the ``k`` values are split across worker processes; the
    merged output is identical to the sequential one.
    """
    group = list(group)
    if not group:
        return []
    if mse < 1:
        raise ValueError("mse must be at least 1")
    n = max(g.n for g in group)
    if isinstance(k_range, range):
        k_lo, k_hi = (k_range.start, k_range.stop - 1) if len(k_range) else (1, 0)
    elif k_range is None:
        k_lo, k_hi = 1, n
    else:
        k_lo, k_hi = k_range
    k_lo = max(k_lo, 1)
    k_hi = min(k_hi, n)
    if k_lo > k_hi:
        return []
    if jobs <= 1 or k_lo == k_hi:
        return _find(group, mse, (k_lo, k_hi), dedup_automorphisms)
    tasks = [(group, mse, (k, k), dedup_automorphisms) for k in range(k_lo, k_hi + 1)]
    out: list[MatchClass] = []
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        for part in pool.map(_search_task, tasks):
            out.extend(part)
    out.sort(key=MatchClass.sort_key)
    return out


def naive_matches(group: Sequence[Graph], mse: int, k_range: tuple[int, int] | None = None) -> list[MatchClass]:
    """Reference enumeration over signatures and selections (no fingerprints)."""
    group = list(group)
    n = max(g.n for g in group)
    k_lo, k_hi = k_range or (1, n)
    caches = {}
    for g in group:
        caches.setdefault(g, DeletionCache(g))
    autos = [automorphisms(g) for g in group]
    out = []
    for k in range(k_lo, k_hi + 1):
        for sig in enumerate_signatures(k, mse):
            buckets: dict[HosoyaVector, list[CoalescenceSpec]] = {}
            for g in group:
                if k > g.n:
                    continue
                for sel in enumerate_selections(g, sig):
                    spec = CoalescenceSpec(g, sel, sig)
                    buckets.setdefault(hosoya_vector(spec, caches[g]), []).append(spec)
            for vec, specs in buckets.items():
                if len(specs) < 2:
                    continue
                classes = _classify_bucket(specs, caches)
                if len(classes) < 2:
                    continue
                full = [tuple(sorted(c, key=CoalescenceSpec.sort_key)) for c in classes]
                full.sort(key=lambda e: e[0].sort_key())
                out.append(MatchClass(sig, vec, tuple(e[0] for e in full), tuple(full)))
    out.sort(key=MatchClass.sort_key)
    return out
