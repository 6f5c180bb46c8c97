from itertools import combinations

import pytest

from prelie_graphs import (
    Side,
    alpha,
    collapse,
    enumerate_graphs,
    insertion_orbit_report,
    is_normal_subgraph,
    named,
    normalize,
    verify_unique_factorization,
)
from prelie_graphs.factorization import reach


def same(a, b):
    return a.m == b.m and normalize(a, signed=False).graph == normalize(b, signed=False).graph


def test_side_positions():
    assert Side.LEFT.position == 1
    assert Side("right").position == 2


@pytest.mark.parametrize(
    "name, left, left_q, right, right_q",
    [
        ("Gamma_1Gamma_3", "b_1", "b_1", "b_1", "b_1"),
        ("t_2^L", "b_0", "b_2^L", "b_1", "b_1"),
        ("t_2^R", "b_1", "b_1", "b_0", "b_2^R"),
        ("c_2^L", "b_1", "b_1", "b_0", "b_1^2"),
        ("c_2", "b_0", "b_2^L", "b_0", "b_2^R"),
    ],
)
def test_alpha_examples(name, left, left_q, right, right_q):
    g = named(name)
    fl, fr = alpha(g, "left"), alpha(g, Side.RIGHT)
    assert same(fl.alpha, named(left)) and same(fl.quotient, named(left_q))
    assert same(fr.alpha, named(right)) and same(fr.quotient, named(right_q))


def test_alpha_needs_three_points():
    with pytest.raises(ValueError):
        alpha(named("b_1"), "left")


def test_collapse_renumbers_points():
    g = named("Gamma_1")
    assert collapse(g, set(), (1, 2)).legs == ((-1, -2),)
    assert collapse(g, {0}, (2, 3)).legs == ()


@pytest.mark.parametrize("n", [0, 1, 2, 3])
def test_alpha_is_largest_normal_subgraph(n):
    for g in enumerate_graphs(n, 3, signed=False).graphs:
        for side, pair in ((Side.LEFT, (1, 2)), (Side.RIGHT, (2, 3))):
            f = alpha(g, side)
            assert is_normal_subgraph(g, f.vertices, pair)
            for k in range(g.n + 1):
                for S in combinations(range(g.n), k):
                    if is_normal_subgraph(g, S, pair):
                        assert set(S) <= f.vertices


def test_normal_subgraph_rejects_other_pairs():
    with pytest.raises(ValueError):
        is_normal_subgraph(named("Gamma_1"), set(), (1, 3))


def test_reach():
    assert reach(named("c_2")) == [frozenset({1, 3}), frozenset({1, 2, 3})]


@pytest.mark.parametrize("signed", [True, False])
def test_unique_factorization_both_modes(signed):
    assert verify_unique_factorization(3, signed=signed).passed
    assert verify_unique_factorization(3, "constant", signed=signed).passed


def test_orbit_report():
    rep = insertion_orbit_report(named("b_1^2"), 1, named("b_0"), named("c_2^R"))
    assert (rep.multiplicity, rep.aut1, rep.aut2, rep.aut_gamma) == (2, 2, 1, 1)
    assert rep.agrees
    miss = insertion_orbit_report(named("b_1"), 1, named("b_0"), named("c_2"))
    assert miss.multiplicity == 0 and miss.agrees
