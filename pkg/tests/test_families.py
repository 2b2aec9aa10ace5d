import random

import pytest

from cmc.charpoly import charpoly
from cmc.cospectral import CoalescenceSpec, is_removal_cospectral
from cmc.families import PathFamilyParams, admissible_params, generate_pair, parse_params, theta, verify_pair
from cmc.graph import canonical_form, delete_vertices, path_graph


def test_parse_params():
    assert parse_params("3,1,3,0") == PathFamilyParams(3, 1, 3, (0,))
    assert parse_params(" 4,1,5,0:2 ") == PathFamilyParams(4, 1, 5, (0, 2))
    assert str(PathFamilyParams(4, 1, 5, (0, 2))) == "4,1,5,0:2"
    for bad in ["3,1,3", "3,1,x,0", "3,1,3,"]:
        with pytest.raises(ValueError):
            parse_params(bad)


@pytest.mark.parametrize("k,m,d,a", [
    (2, 1, 3, (0,)),
    (3, 2, 3, (0,)),
    (4, 2, 3, (0,)),
    (3, 0, 3, (0,)),
    (3, 1, 1, (0,)),
    (3, 1, 3, ()),
    (3, 1, 3, (1, 0)),
    (3, 1, 3, (2,)),
    (3, 1, 3, (-1,)),
])
def test_parameter_bounds(k, m, d, a):
    with pytest.raises(ValueError):
        PathFamilyParams(k, m, d, a)


def test_derived_quantities():
    p = PathFamilyParams(3, 1, 3, (0,))
    assert (p.n, p.v, p.w, p.common()) == (8, 2, 5, [0, 3, 6])
    assert theta(p, 0) == 6 and theta(p, 3) == 0 and theta(p, 7) == 4
    with pytest.raises(ValueError):
        theta(p, p.v)


def test_generate_pair_shape():
    p1, p2 = generate_pair(PathFamilyParams(4, 1, 5, (0, 2)))
    assert p1.graph == p2.graph == path_graph(19)
    assert p1.k == p2.k == 9 and set(p1.signature) == {1}
    assert set(p1.vertices) ^ set(p2.vertices) == {4, 14}


def test_verify_pair_basics():
    g = path_graph(8)
    a = CoalescenceSpec(g, (0, 2, 3, 6), (1,) * 4)
    assert verify_pair(a, a)
    assert not verify_pair(a, CoalescenceSpec(g, (0, 2, 3, 7), (1,) * 4))
    with pytest.raises(ValueError):
        verify_pair(a, CoalescenceSpec(g, (0, 2, 3, 6), (2, 1, 1, 1)))


def test_theta_is_an_isomorphism_of_deleted_paths():
    rng = random.Random(11)
    for p in admissible_params(20, 2):
        common = p.common()
        for _ in range(3):
            u = [x for x in common if rng.random() < 0.5]
            left = delete_vertices(path_graph(p.n), [p.v] + u)
            right = delete_vertices(path_graph(p.n), [p.w] + [theta(p, x) for x in u])
            assert sorted(x for x in (theta(p, y) for y in common)) == sorted(common)
            assert charpoly(left) == charpoly(right)
            if left.n <= 8:
                assert canonical_form(left) == canonical_form(right)
            else:
                assert _path_lengths(left) == _path_lengths(right)


def _path_lengths(g):
    seen, sizes = set(), []
    for v in range(g.n):
        if v in seen:
            continue
        stack, comp = [v], 0
        seen.add(v)
        while stack:
            x = stack.pop()
            comp += 1
            for y in g.neighbors(x):
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        sizes.append(comp)
    return sorted(sizes)


def test_p8_instance_not_positionally_removal_cospectral():
    p1, p2 = generate_pair(PathFamilyParams(3, 1, 3, (0,)))
    assert not is_removal_cospectral(p1.graph, p1.vertices, p2.graph, p2.vertices)


def test_admissible_params_are_unique_and_bounded():
    params = list(admissible_params(20, 2))
    assert len(params) == len(set(params))
    assert all(p.n <= 20 and 1 <= len(p.a) <= 2 for p in params)
