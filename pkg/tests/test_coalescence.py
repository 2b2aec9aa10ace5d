import random

import pytest

from cmc.charpoly import DeletionCache, charpoly
from cmc.coalescence import (
    concrete_coalescence_charpoly,
    direct_coalescence_charpoly,
    g_power_charpoly,
    hosoya_charpoly,
    hosoya_charpoly_multi,
    rooted_qr,
    schwenk_coalescence,
)
from cmc.graph import Graph, RootedGraph, build_coalescence, path_graph, star_graph
from cmc.poly import sym_substitute

from conftest import random_connected, random_rooted


def test_schwenk_against_direct():
    rng = random.Random(1)
    for _ in range(50):
        g = random_connected(rng, rng.randint(2, 5))
        h = random_connected(rng, rng.randint(2, 5))
        u, v = rng.randrange(g.n), rng.randrange(h.n)
        glued = build_coalescence(g, [u], [1], RootedGraph(h, v))
        got = schwenk_coalescence(charpoly(g), DeletionCache(g).deleted(1 << u),
                                  charpoly(h), DeletionCache(h).deleted(1 << v))
        assert got == charpoly(glued)


def test_schwenk_degree_check():
    with pytest.raises(ValueError):
        p = charpoly(path_graph(3))
        schwenk_coalescence(p, p, p, charpoly(path_graph(2)))


def test_g_power_induction():
    rng = random.Random(2)
    for _ in range(30):
        rg = random_rooted(rng, 5)
        pg, pgr = charpoly(rg.graph), DeletionCache(rg.graph).deleted(1 << rg.root)
        for a in range(1, 5):
            single = Graph.empty(1)
            built = build_coalescence(single, [0], [a], rg)
            assert g_power_charpoly(pg, pgr, a) == charpoly(built)
    with pytest.raises(ValueError):
        g_power_charpoly(pg, pgr, 0)


def test_concrete_against_direct_random():
    rng = random.Random(3)
    for _ in range(200):
        t = random_connected(rng, rng.randint(1, 6)) if rng.random() < 0.9 else Graph.empty(rng.randint(1, 3))
        k = rng.randint(1, t.n)
        u = rng.sample(range(t.n), k)
        sig = [rng.randint(1, 3) for _ in range(k)]
        g = random_rooted(rng, 4)
        assert concrete_coalescence_charpoly(t, u, sig, g) == direct_coalescence_charpoly(t, u, sig, g)


def test_multi_against_distinct_rooted_graphs():
    rng = random.Random(4)
    for _ in range(40):
        t = random_connected(rng, rng.randint(2, 5))
        k = rng.randint(1, t.n)
        u = rng.sample(range(t.n), k)
        rooted = [random_rooted(rng, 3) for _ in range(k)]
        # build with one distinct rooted graph per vertex, single copies
        built = t
        for ui, rg in zip(u, rooted):
            built = build_coalescence(built, [ui], [1], rg)
        s = hosoya_charpoly_multi(t, u, [1] * k)
        qs, rs = zip(*(rooted_qr(rg) for rg in rooted))
        assert sym_substitute(s, list(qs), list(rs)) == charpoly(built)
        assert s.collapse() == hosoya_charpoly(t, u, [1] * k)


def test_single_vertex_tree_reduces_to_g_power():
    rg = RootedGraph(star_graph(2), 1)
    q, r = rooted_qr(rg)
    for a in range(1, 4):
        got = concrete_coalescence_charpoly(Graph.empty(1), [0], [a], rg)
        assert got == g_power_charpoly(charpoly(rg.graph), r, a)


def test_total_degree_in_q_and_r():
    t = path_graph(5)
    s = hosoya_charpoly(t, [0, 2, 4], [3, 1, 2])
    assert {m[1] + m[2] for m in s.terms} == {6}


def test_selection_validation():
    t = path_graph(3)
    with pytest.raises(ValueError):
        hosoya_charpoly(t, [0, 0], [1, 1])
    with pytest.raises(ValueError):
        hosoya_charpoly(t, [0], [1, 1])
    with pytest.raises(IndexError):
        hosoya_charpoly(t, [5], [1])
    with pytest.raises(ValueError):
        hosoya_charpoly(t, [0], [0])
