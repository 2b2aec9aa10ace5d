"""Reference data on known cospectral coalescences, and the graphs behind it.

Some underlying graphs are only known through derived data (vertex-deleted
polynomials, lists of cospectral selections). They are recovered here by
exhaustive search over small trees rather than written down by hand.
"""
from __future__ import annotations

import itertools
from functools import lru_cache

from .charpoly import DeletionCache, vertex_deleted_charpolys
from .cospectral import CoalescenceSpec, hosoya_vector
from .graph import Graph, canonical_form, small_connected_graphs
from .poly import IntPoly

__all__ = [
    "PATH_PAIRS",
    "TREE_PAIRS",
    "TREE_PAIR_COUNTS",
    "TREE_DELETED",
    "TREE_SELECTIONS",
    "TREE_EXPANSION",
    "HEPTAGON_TRIPLET_VECTOR",
    "HEPTAGON_TRIPLET_CHARPOLY",
    "trees",
    "deleted_tree",
    "selection_tree",
    "selection_labelings",
    "letters",
]

LETTERS = "abcdef"

# (path order, first selection, second selection); signature all ones
PATH_PAIRS: tuple[tuple[int, tuple[int, ...], tuple[int, ...]], ...] = (
    (8, (0, 2, 3, 6), (0, 3, 5, 6)),
    (11, (0, 3, 4, 8), (0, 4, 7, 8)),
    (11, (0, 2, 3, 6, 9), (0, 3, 6, 8, 9)),
    (11, (0, 2, 3, 5, 6, 9), (0, 3, 5, 6, 8, 9)),
    (11, (0, 1, 3, 4, 5, 8, 9), (0, 1, 4, 5, 7, 8, 9)),
    (14, (0, 4, 5, 10), (0, 5, 9, 10)),
    (14, (1, 4, 6, 11), (1, 6, 9, 11)),
    (14, (0, 2, 3, 6, 9, 12), (0, 3, 6, 9, 11, 12)),
    (14, (0, 3, 5, 6, 9, 12), (0, 3, 6, 8, 9, 12)),
    (14, (0, 2, 4, 5, 7, 10, 12), (0, 2, 5, 7, 9, 10, 12)),
    (14, (0, 2, 3, 6, 8, 9, 12), (0, 3, 5, 6, 9, 11, 12)),
    (14, (0, 1, 4, 5, 6, 10, 11), (0, 1, 5, 6, 9, 10, 11)),
    (14, (0, 2, 3, 5, 6, 9, 12), (0, 3, 6, 8, 9, 11, 12)),
    (14, (0, 2, 3, 5, 6, 8, 9, 12), (0, 3, 5, 6, 8, 9, 11, 12)),
    (14, (0, 2, 3, 5, 6, 9, 11, 12), (0, 2, 3, 6, 8, 9, 11, 12)),
    (15, (0, 3, 4, 8, 12), (0, 4, 8, 11, 12)),
    (15, (0, 3, 4, 7, 8, 12), (0, 4, 7, 8, 11, 12)),
    (15, (0, 1, 3, 4, 5, 8, 9, 12, 13), (0, 1, 4, 5, 8, 9, 11, 12, 13)),
    (17, (0, 5, 6, 12), (0, 6, 11, 12)),
    (17, (1, 5, 7, 13), (1, 7, 11, 13)),
    (17, (1, 2, 5, 7, 8, 13, 14), (1, 2, 7, 8, 11, 13, 14)),
    (17, (0, 2, 5, 6, 8, 12, 14), (0, 2, 6, 8, 11, 12, 14)),
    (17, (0, 2, 3, 6, 9, 12, 15), (0, 3, 6, 9, 12, 14, 15)),
    (17, (0, 1, 5, 6, 7, 12, 13), (0, 1, 6, 7, 11, 12, 13)),
    (17, (0, 3, 5, 6, 9, 12, 15), (0, 3, 6, 9, 11, 12, 15)),
    (17, (0, 2, 3, 5, 6, 9, 12, 15), (0, 3, 6, 9, 11, 12, 14, 15)),
    (17, (0, 3, 5, 6, 8, 9, 12, 15), (0, 3, 6, 8, 9, 11, 12, 15)),
    (17, (0, 2, 3, 6, 9, 11, 12, 15), (0, 3, 5, 6, 9, 12, 14, 15)),
    (17, (0, 2, 3, 6, 8, 9, 12, 15), (0, 3, 6, 8, 9, 12, 14, 15)),
    (19, (1, 4, 6, 11, 16), (1, 6, 11, 14, 16)),
    (19, (0, 4, 5, 10, 15), (0, 5, 10, 14, 15)),
    (19, (0, 4, 7, 8, 12, 16), (0, 4, 8, 11, 12, 16)),
    (19, (0, 3, 4, 8, 12, 16), (0, 4, 8, 12, 15, 16)),
    (19, (1, 4, 6, 9, 11, 16), (1, 6, 9, 11, 14, 16)),
    (19, (0, 4, 5, 9, 10, 15), (0, 5, 9, 10, 14, 15)),
    (19, (0, 3, 4, 7, 8, 12, 16), (0, 4, 8, 11, 12, 15, 16)),
    (19, (0, 4, 7, 8, 12, 15, 16), (0, 3, 4, 8, 11, 12, 16)),
    (19, (0, 3, 4, 7, 8, 12, 15, 16), (0, 3, 4, 8, 11, 12, 15, 16)),
    (19, (0, 3, 4, 7, 8, 11, 12, 16), (0, 4, 7, 8, 11, 12, 15, 16)),
    (20, (0, 6, 7, 14), (0, 7, 13, 14)),
    (20, (1, 6, 8, 15), (1, 8, 13, 15)),
    (20, (2, 6, 9, 16), (2, 9, 13, 16)),
    (20, (1, 3, 6, 8, 10, 15, 17), (1, 3, 8, 10, 13, 15, 17)),
    (20, (1, 2, 6, 8, 9, 15, 16), (1, 2, 8, 9, 13, 15, 16)),
    (20, (0, 2, 6, 7, 9, 14, 16), (0, 2, 7, 9, 13, 14, 16)),
    (20, (0, 3, 6, 7, 10, 14, 17), (0, 3, 7, 10, 13, 14, 17)),
    (20, (0, 4, 6, 7, 11, 14, 18), (0, 4, 7, 11, 13, 14, 18)),
    (20, (0, 1, 6, 7, 8, 14, 15), (0, 1, 7, 8, 13, 14, 15)),
)

# selections on a six-vertex tree with vertices a..f, maximum entry two
TREE_PAIRS: tuple[tuple[tuple[int, ...], str, str], ...] = (
    ((2, 1), "fd", "ae"),
    ((2, 1), "df", "ab"),
    ((1, 1, 1), "dae", "fab"),
    ((2, 1, 1), "edb", "bfe"),
    ((2, 1, 1), "deb", "bdf"),
    ((2, 2, 2, 1, 1), "dacfe", "facdb"),
    ((2, 2, 2, 1, 1), "faceb", "acedf"),
    ((2, 2, 2, 2, 1), "dfabe", "acebd"),
    ((2, 2, 2, 2, 1), "dfaeb", "acebf"),
    ((2, 2, 2, 1, 1, 1), "daefcb", "fabdce"),
)

# number of pairs on that tree for maximum signature entry 2..8
TREE_PAIR_COUNTS = {2: 10, 3: 20, 4: 30, 5: 50, 6: 60, 7: 90, 8: 110}


def _p(*high: int) -> IntPoly:
    return IntPoly.from_high(high)


# vertex-deleted polynomials of the six-vertex tree behind the (2,2,2,2,1) example
TREE_DELETED = {
    "a": _p(1, 0, -4, 0, 3, 0),
    "b": _p(1, 0, -2, 0, 0, 0),
    "c": _p(1, 0, -4, 0, 3, 0),
    "d": _p(1, 0, -3, 0, 2, 0),
    "e": _p(1, 0, -3, 0, 0, 0),
    "f": _p(1, 0, -4, 0, 2, 0),
}
TREE_SELECTIONS = ("abced", "abdfe")
# Q^l R^(9-l) coefficients for l = 1..5 (l = 0 is the tree's own polynomial)
TREE_EXPANSION = (
    _p(9, 0, -29, 0, 14, 0),
    _p(32, 0, -58, 0, 8),
    _p(56, 0, -44, 0),
    _p(48, 0, -8),
    _p(16, 0),
)

HEPTAGON_TRIPLET_CHARPOLY = _p(1, 0, -11, -10, 16, 16, 0, 0)
HEPTAGON_TRIPLET_VECTOR = (
    HEPTAGON_TRIPLET_CHARPOLY,
    _p(7, 0, -55, -40, 48, 32, 0),
    _p(21, 0, -110, -60, 48, 16),
    _p(35, 0, -110, -40, 16),
    _p(35, 0, -55, -10),
    _p(21, 0, -11),
    _p(7, 0),
    _p(1),
)


def letters(word: str) -> tuple[int, ...]:
    return tuple(LETTERS.index(ch) for ch in word)


@lru_cache(maxsize=None)
def trees(n: int) -> tuple[Graph, ...]:
    return tuple(g for g in small_connected_graphs(n) if g.num_edges == n - 1)


@lru_cache(maxsize=1)
def deleted_tree() -> Graph:
    """The six-vertex tree with vertex-deleted polynomials :data:`TREE_DELETED`.

    Vertices are relabelled so that ``a..f`` become ``0..5``; ``a`` and ``c``
    are interchangeable, the lower label going to ``a``.
    """
    target = sorted(TREE_DELETED.values())
    found = [t for t in trees(6) if sorted(vertex_deleted_charpolys(t)) == target]
    if len(found) != 1:
        raise RuntimeError(f"expected exactly one matching tree, found {len(found)}")
    t = found[0]
    polys = vertex_deleted_charpolys(t)
    perm = [0] * t.n
    taken = set()
    for label, p in TREE_DELETED.items():
        v = min(u for u in range(t.n) if polys[u] == p and u not in taken)
        taken.add(v)
        perm[v] = LETTERS.index(label)
    return t.relabel(perm)


def _pair_specs(t: Graph, sig, first: str, second: str):
    return CoalescenceSpec(t, letters(first), sig), CoalescenceSpec(t, letters(second), sig)


def selection_labelings() -> list[Graph]:
    """Every labelled six-vertex tree on which all :data:`TREE_PAIRS` are cospectral."""
    out = set()
    for tree in trees(6):
        for perm in itertools.permutations(range(6)):
            t = tree.relabel(perm)
            cache = DeletionCache(t)
            for sig, first, second in TREE_PAIRS:
                s1, s2 = _pair_specs(t, sig, first, second)
                if hosoya_vector(s1, cache) != hosoya_vector(s2, cache):
                    break
            else:
                out.add(t)
    return sorted(out, key=lambda g: g.edges())


@lru_cache(maxsize=1)
def selection_tree() -> Graph:
    """The labelled tree underlying :data:`TREE_PAIRS` (first of the valid labelings)."""
    labelings = selection_labelings()
    if not labelings:
        raise RuntimeError("no labelled tree satisfies the listed pairs")
    shapes = {canonical_form(g) for g in labelings}
    if len(shapes) != 1:
        raise RuntimeError("listed pairs are satisfied by non-isomorphic trees")
    return labelings[0]
