import itertools
import random

import pytest
from hypothesis import strategies as st

from cmc.graph import Graph, RootedGraph

ACCEPTANCE: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE:
            terminalreporter.write_line(line)


def leibniz_charpoly_high(g: Graph) -> list[int]:
    """det(xI - A) by the permutation expansion; only edge-supported permutations count."""
    n = g.n
    coeffs = [0] * (n + 1)
    for perm in itertools.permutations(range(n)):
        moved = [i for i in range(n) if perm[i] != i]
        if any(not g.has_edge(i, perm[i]) for i in moved):
            continue
        inversions = sum(1 for i, j in itertools.combinations(range(n), 2) if perm[i] > perm[j])
        sign = (-1) ** (inversions + len(moved))
        coeffs[len(moved)] += sign
    return coeffs


def random_graph(rng: random.Random, n: int, p: float = 0.5) -> Graph:
    return Graph.from_edges(n, [e for e in itertools.combinations(range(n), 2) if rng.random() < p])


def random_connected(rng: random.Random, n: int, p: float = 0.4) -> Graph:
    edges = {(rng.randrange(v), v) for v in range(1, n)}
    edges |= {e for e in itertools.combinations(range(n), 2) if rng.random() < p}
    perm = list(range(n))
    rng.shuffle(perm)
    return Graph.from_edges(n, edges).relabel(perm)


def random_rooted(rng: random.Random, max_n: int = 4) -> RootedGraph:
    n = rng.randint(1, max_n)
    g = random_connected(rng, n) if n > 1 else Graph.empty(1)
    return RootedGraph(g, rng.randrange(n))


@st.composite
def graphs(draw, min_n=0, max_n=7):
    n = draw(st.integers(min_n, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    bits = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, [e for e, b in zip(pairs, bits) if b])


@st.composite
def specs(draw, min_n=1, max_n=7, max_entry=3):
    from cmc.cospectral import CoalescenceSpec
    g = draw(graphs(min_n=min_n, max_n=max_n))
    k = draw(st.integers(1, g.n))
    verts = draw(st.permutations(range(g.n)))[:k]
    sig = sorted(draw(st.lists(st.integers(1, max_entry), min_size=k, max_size=k)), reverse=True)
    return CoalescenceSpec(g, tuple(verts), tuple(sig))


@pytest.fixture
def rng():
    return random.Random(20240917)
