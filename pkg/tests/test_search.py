import itertools
import random

import pytest

from cmc.charpoly import DeletionCache, charpoly
from cmc.coalescence import direct_coalescence_charpoly
from cmc.cospectral import CoalescenceSpec, exists_removal_correspondence, group_cospectral, hosoya_vector
from cmc.formats import class_record
from cmc.graph import Graph, path_graph, small_connected_graphs, star_graph, cycle_graph, disjoint_union
from cmc.search import enumerate_selections, enumerate_signatures, find_matches, naive_matches

from conftest import random_rooted


def cospectral_groups(n):
    gs = list(small_connected_graphs(n))
    return [[gs[i] for i in grp] for grp in group_cospectral(gs)]


def implied_pairs(classes):
    out = set()
    for cls in classes:
        for e1, e2 in itertools.combinations(cls.equivalents, 2):
            for a in e1:
                for b in e2:
                    out.add(frozenset((a, b)))
    return out


def double_loop(group, mse):
    """Every pair of specs with equal vectors and no removal correspondence."""
    caches = {g: DeletionCache(g) for g in group}
    out = set()
    n = max(g.n for g in group)
    for k in range(1, n + 1):
        for sig in enumerate_signatures(k, mse):
            specs = [CoalescenceSpec(g, sel, sig) for g in group if k <= g.n for sel in enumerate_selections(g, sig)]
            vecs = [hosoya_vector(s, caches[s.graph]) for s in specs]
            for i, j in itertools.combinations(range(len(specs)), 2):
                if vecs[i] == vecs[j] and not exists_removal_correspondence(
                        specs[i], specs[j], caches[specs[i].graph], caches[specs[j].graph]):
                    out.add(frozenset((specs[i], specs[j])))
    return out


def test_enumerate_signatures():
    assert list(enumerate_signatures(2, 2)) == [(2, 1), (1, 1)]
    assert list(enumerate_signatures(3, 2)) == [(2, 2, 1), (2, 1, 1), (1, 1, 1)]
    assert (2, 2) not in list(enumerate_signatures(2, 3))
    assert list(enumerate_signatures(0, 3)) == []


def test_enumerate_selections_counts():
    g = path_graph(5)
    assert len(list(enumerate_selections(g, (2, 1, 1)))) == 5 * 6
    assert len(list(enumerate_selections(g, (1, 1)))) == 10
    with pytest.raises(ValueError):
        list(enumerate_selections(g, (1,) * 6))


@pytest.mark.parametrize("n", [3, 4, 5])
@pytest.mark.parametrize("mse", [1, 2])
def test_complete_against_double_loop(n, mse):
    for group in cospectral_groups(n):
        assert implied_pairs(find_matches(group, mse)) == double_loop(group, mse)


def test_complete_on_mixed_group():
    group = [star_graph(4), disjoint_union(cycle_graph(4), Graph.empty(1))]
    assert implied_pairs(find_matches(group, 2)) == double_loop(group, 2)


@pytest.mark.parametrize("group", [[path_graph(8)], [star_graph(5)], cospectral_groups(5)[3]])
def test_matches_naive_reference(group):
    fast = find_matches(group, 2)
    slow = naive_matches(group, 2)
    assert [class_record(i, c) for i, c in enumerate(fast)] == [class_record(i, c) for i, c in enumerate(slow)]


def test_soundness_random_rooted_graph():
    rng = random.Random(7)
    classes = find_matches([path_graph(8)], 3) + [c for grp in cospectral_groups(5) for c in find_matches(grp, 2)]
    assert classes
    for cls in classes:
        rg = random_rooted(rng, 4)
        polys = {direct_coalescence_charpoly(m.graph, m.vertices, m.signature, rg) for m in cls.members}
        assert len(polys) == 1


def test_no_class_is_trivially_removal_cospectral():
    for grp in cospectral_groups(5) + [[path_graph(8)]]:
        for cls in find_matches(grp, 3):
            assert cls.size >= 2
            for a, b in itertools.combinations(cls.members, 2):
                assert not exists_removal_correspondence(a, b)


def test_deterministic_across_jobs_and_runs():
    group = [path_graph(8)]
    one = [class_record(i, c) for i, c in enumerate(find_matches(group, 3))]
    again = [class_record(i, c) for i, c in enumerate(find_matches(group, 3))]
    many = [class_record(i, c) for i, c in enumerate(find_matches(group, 3, jobs=3))]
    assert one == again == many


def test_dedup_only_shrinks_equivalents():
    group = [path_graph(7)]
    full = find_matches(group, 3)
    dedup = find_matches(group, 3, dedup_automorphisms=True)
    assert [(c.signature, c.vector, c.size) for c in full] == [(c.signature, c.vector, c.size) for c in dedup]
    assert all(len(d) <= len(f) for cf, cd in zip(full, dedup) for f, d in zip(cf.equivalents, cd.equivalents))


def test_k_range_and_validation():
    g = path_graph(8)
    full = find_matches([g], 2)
    part = find_matches([g], 2, (4, 4))
    assert part == [c for c in full if c.k == 4]
    assert find_matches([g], 2, range(4, 5)) == part
    assert find_matches([], 2) == []
    with pytest.raises(ValueError):
        find_matches([g], 0)


def test_two_pass_mode(monkeypatch):
    import cmc.search as search
    group = [path_graph(8)]
    expected = find_matches(group, 3)
    monkeypatch.setattr(search, "TWO_PASS_THRESHOLD", 1)
    monkeypatch.setattr(search, "CHUNK", 64)
    assert find_matches(group, 3) == expected


def test_equal_charpoly_members():
    for grp in cospectral_groups(5):
        for cls in find_matches(grp, 2):
            assert len({charpoly(m.graph) for m in cls.members}) == 1
