"""Property-based checks over hypothesis-generated small instances."""

from __future__ import annotations

from hypothesis import given, settings
from hypothesis import strategies as st

from decmin.mconvex import dec_compare, decmin_strong, handle_from_supermodular, inc_compare, square_sum
from decmin.netflow import ArcBounds, Digraph, feasible_m_flow, net_inflow
from decmin.errors import InfeasibleError
from decmin.oracle import enumerate_orientations, hoffman_violation
from decmin.orient import UndirGraph, decmin_orientation, induced_edges_function

vectors = st.lists(st.integers(-5, 5), min_size=1, max_size=6)


@st.composite
def graphs(draw, n_max=5, m_max=7):
    n = draw(st.integers(2, n_max))
    pairs = st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)).filter(lambda e: e[0] != e[1])
    return UndirGraph(n, draw(st.lists(pairs, min_size=1, max_size=m_max)))


@st.composite
def digraphs(draw):
    n = draw(st.integers(2, 4))
    arc = st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)).filter(lambda e: e[0] != e[1])
    arcs = draw(st.lists(arc, min_size=1, max_size=6))
    bounds = [sorted(draw(st.tuples(st.integers(-2, 2), st.integers(-2, 2)))) for _ in arcs]
    m = draw(st.lists(st.integers(-2, 2), min_size=n - 1, max_size=n - 1))
    return Digraph(n, arcs), ArcBounds([a for a, _ in bounds], [b for _, b in bounds]), m + [-sum(m)]


@given(vectors, vectors)
def test_comparisons_are_antisymmetric(x, y):
    assert dec_compare(x, y) == -dec_compare(y, x)
    assert inc_compare(x, y) == -inc_compare(y, x)
    assert dec_compare(x, sorted(x)) == 0


@given(st.lists(st.integers(-5, 5), min_size=2, max_size=6), st.data())
def test_tightening_step_lowers_square_sum(x, data):
    s, t = data.draw(st.permutations(range(len(x))))[:2]
    if x[t] >= x[s] + 2:
        y = list(x)
        y[s] += 1
        y[t] -= 1
        assert square_sum(y) < square_sum(x)
        assert dec_compare(y, x) == -1


@settings(max_examples=60, deadline=None)
@given(graphs())
def test_orientation_solver_is_decmin(G):
    report = enumerate_orientations(G)
    vec = decmin_orientation(G).indegree()
    assert vec in report.decmin_set
    assert vec in report.incmax_set and vec in report.squaresum_min_set


@settings(max_examples=40, deadline=None)
@given(graphs(n_max=4, m_max=6))
def test_generic_solver_agrees_with_orientation_solver(G):
    res = decmin_strong(handle_from_supermodular(induced_edges_function(G)))
    assert dec_compare(res.vector, decmin_orientation(G).indegree()) == 0


@settings(max_examples=80, deadline=None)
@given(digraphs())
def test_flow_exists_iff_no_violating_set(inst):
    D, b, m = inst
    try:
        z = feasible_m_flow(D, b, m)
    except InfeasibleError:
        assert hoffman_violation(D, b, m) is not None
    else:
        assert hoffman_violation(D, b, m) is None
        assert net_inflow(D, z) == tuple(m)
