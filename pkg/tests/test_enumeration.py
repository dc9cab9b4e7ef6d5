from collections import Counter

import pytest

from conftest import X_1113, tree
from treecover.enumeration import rooted_trees, search_genus_order, unrooted_trees, walks
from treecover.invariants import curve_data
from treecover.maps import degree_profile, odd_vertex_count
from treecover.walk import canonical_form, genus, to_involution, to_tree, to_walk, verify_branch_formula


def catalan(n):
    c = [1]
    for k in range(n):
        c.append(sum(c[i] * c[k - i] for i in range(k + 1)))
    return c[n]


def walk_from_dart(t, start):
    """Boundary walk of ``t`` read from dart ``start`` via the rotation system."""
    out, seen, x = [], set(), start
    for _ in range(2 * t.n):
        edge = frozenset((x, t.rho1[x]))
        out.append(")" if edge in seen else "(")
        seen.add(edge)
        x = t.rho0[t.rho1[x]]
    return "".join(out)


def plane_tree_key(t):
    return min(walk_from_dart(t, x) for x in t.darts)


def test_catalan_recurrence_values():
    assert [catalan(n) for n in range(1, 6)] == [1, 2, 5, 14, 42]


@pytest.mark.parametrize("n", range(1, 11))
def test_rooted_counts_are_catalan(n):
    trees = list(rooted_trees(n))
    assert len(trees) == catalan(n)
    assert len({t.phi for t in trees}) == len(trees)


def test_rooted_examples():
    assert [t.phi for t in rooted_trees(1)] == [(1, 0)]
    assert sum(1 for _ in rooted_trees(3)) == 5


def test_walks_are_lexicographic():
    for n in range(1, 7):
        ws = list(walks(n))
        assert ws == sorted(ws)
    with pytest.raises(ValueError):
        list(walks(0))


@pytest.mark.parametrize("n", range(1, 9))
def test_rooted_trees_are_valid(n):
    for phi in rooted_trees(n):
        assert genus(phi) == 0
        assert verify_branch_formula(to_tree(phi))


@pytest.mark.parametrize("n", range(1, 10))
def test_unrooted_matches_rotation_system_dedup(n):
    expected = {plane_tree_key(to_tree(phi)) for phi in rooted_trees(n)}
    got = list(unrooted_trees(n))
    assert len(got) == len(expected)
    assert {plane_tree_key(to_tree(phi)) for phi in got} == expected


def test_unrooted_examples():
    assert [t.phi for t in unrooted_trees(1)] == [(1, 0)]
    two = list(unrooted_trees(2))
    assert len(two) == 1
    assert degree_profile(to_tree(two[0])) == Counter({1: 2, 2: 1})
    three = list(unrooted_trees(3))
    assert len(three) == 2
    profiles = sorted(sorted(degree_profile(to_tree(t)).elements()) for t in three)
    assert profiles == [[1, 1, 1, 3], [1, 1, 2, 2]]


@pytest.mark.parametrize("n", range(1, 11))
def test_dedup_modes_agree_and_orbits_divide_2n(n):
    by_rule = list(unrooted_trees(n, dedup="canonical"))
    by_set = list(unrooted_trees(n, dedup="set"))
    assert sorted(t.phi for t in by_rule) == sorted(t.phi for t in by_set)
    assert all(canonical_form(t) == t for t in by_rule)
    orbits = Counter(canonical_form(t).phi for t in rooted_trees(n))
    assert set(orbits) == {t.phi for t in by_rule}
    assert all((2 * n) % size == 0 for size in orbits.values())
    assert sum(orbits.values()) == catalan(n)


def test_unknown_dedup_mode():
    with pytest.raises(ValueError):
        list(unrooted_trees(3, dedup="nope"))


# ---------------------------------------------------------------- search


def test_search_genus1_order2():
    t = search_genus_order(1, 2, 14)
    assert t is not None
    assert to_walk(canonical_form(to_involution(t))) == "()()()()"
    data = curve_data(t)
    assert (data.o, data.d_c, data.divisor_order) == (4, 2, 2)


def test_search_genus1_order3():
    t = search_genus_order(1, 3, 14)
    data = curve_data(t)
    assert (data.genus, data.divisor_order) == (1, 3)
    # the scan starts at n = 3, where the 3-star already qualifies
    assert t.n == 3
    x = curve_data(tree(X_1113))
    assert (x.genus, x.divisor_order) == (1, 3)


def test_search_genus0_order1_is_a_chain():
    t = search_genus_order(0, 1, 5)
    assert odd_vertex_count(t) == 2
    assert t.n == 1


def test_search_none_when_bound_too_small():
    assert search_genus_order(2, 3, 5) is None
    with pytest.raises(ValueError):
        search_genus_order(-1, 2, 5)
