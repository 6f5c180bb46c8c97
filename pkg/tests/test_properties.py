"""Property-based tests on random linear graphs."""
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from prelie_graphs import (
    AdmissibleGraph,
    GraphCombination,
    aut_order,
    canonical_string,
    canonicalize,
    compose,
    format_graph,
    negate_at,
    normalize,
    parse_graph,
    validate,
)


@st.composite
def linear_graphs(draw, max_n=5, min_m=1, max_m=3):
    """Random forest on a boundary, then a random relabeling of the vertices."""
    m = draw(st.integers(min_m, max_m))
    # with a single boundary point no vertex can have two distinct targets
    n = draw(st.integers(0, max_n if m >= 2 else 0))
    free = list(range(n))
    legs = []
    for u in range(n):
        # children are later, unused vertices, so the result is a forest
        choices = [-b for b in range(1, m + 1)] + [v for v in free if v > u]
        l = draw(st.sampled_from(choices))
        r = draw(st.sampled_from([t for t in choices if t != l]))
        for t in (l, r):
            if t >= 0:
                free.remove(t)
        legs.append((l, r))
    perm = draw(st.permutations(range(n)))
    return AdmissibleGraph(m, oracles.relabel(tuple(legs), perm))


@given(linear_graphs())
def test_generated_graphs_are_linear(g):
    assert validate(g, "linear")


@given(linear_graphs())
def test_text_round_trip(g):
    assert parse_graph(format_graph(g)) == g
    assert parse_graph(canonical_string(g)) == canonicalize(g)


@given(linear_graphs(), st.data())
def test_sign_coherence(g, data):
    if g.n == 0:
        return
    u = data.draw(st.integers(0, g.n - 1))
    assert normalize(negate_at(g, u)) == -normalize(g)
    assert normalize(negate_at(negate_at(g, u), u)) == normalize(g)


@given(linear_graphs(), st.data())
def test_relabeling_invariance(g, data):
    perm = data.draw(st.permutations(range(g.n)))
    h = AdmissibleGraph(g.m, oracles.relabel(g.legs, perm))
    assert canonicalize(h) == canonicalize(g)
    assert normalize(h) == normalize(g)
    assert aut_order(h) == aut_order(g)


@settings(max_examples=40)
@given(linear_graphs(max_n=3))
def test_aut_against_brute_force(g):
    assert aut_order(g) == oracles.aut(g)
    assert aut_order(g, allow_flips=True) == oracles.aut(g, flips=True)


@settings(max_examples=40)
@given(linear_graphs(max_n=3))
def test_zero_classes_against_brute_force(g):
    assert normalize(g).is_zero == oracles.signed_key(g)[2]


@settings(max_examples=30, deadline=None)
@given(
    linear_graphs(max_n=2, min_m=2, max_m=2),
    linear_graphs(max_n=2, min_m=2, max_m=2),
    linear_graphs(max_n=2, min_m=2, max_m=2),
)
def test_compose_bilinear_and_graded(a, b, y):
    xa, xb, xy = (GraphCombination.from_graph(g) for g in (a, b, y))
    assert compose(xa + xb, xy) == compose(xa, xy) + compose(xb, xy)
    assert compose(xa, 2 * xy) == 2 * compose(xa, xy)
    assert all(g.m == a.m + y.m - 1 for g in compose(a, y))
    assert all(g.n == a.n + y.n for g in compose(a, y))
