import itertools

import pytest
from hypothesis import given, settings, strategies as st

from starcolor.coloring import validate
from starcolor.graph import build_graph, complete_graph, cycle_graph, is_biconnected, recognize_outerplanar, weak_dual
from starcolor.instances import fan_graph, outerpath_from_turns, random_outerpath
from starcolor.outerpath import (
    MachineState as Q,
    NotAnOuterpath,
    color_outerpath,
    run_machine,
    spine_decompose,
    trace_violations,
    triangulate_outerpath,
)


def all_maximal_outerpaths(max_n):
    for n in range(3, max_n + 1):
        for turns in itertools.product((False, True), repeat=n - 3):
            yield outerpath_from_turns(list(turns))


def test_triangulation_keeps_maximal_graph():
    g = random_outerpath(12, seed=2)
    assert triangulate_outerpath(g) == g


def test_hexagon_is_fan_triangulated():
    h = triangulate_outerpath(cycle_graph(6))
    assert h.m == 9 and cycle_graph(6).edges <= h.edges
    assert weak_dual(h, recognize_outerplanar(h)).is_path()
    assert max(h.degree(v) for v in range(6)) == 5


def test_large_random_outerpath_decomposes():
    g = triangulate_outerpath(random_outerpath(50, seed=9, maximal=False))
    dec = spine_decompose(g)
    covered = [v for f in dec.fans for v in f] + [dec.spine[0]]
    assert sorted(covered) == list(range(50))


def test_single_fan():
    g = fan_graph(6)
    dec = spine_decompose(g)
    assert dec.m == 1 and dec.spine[0] == 0
    assert dec.fans[0] == (1, 2, 3, 4, 5, 6)
    assert dec.fans[-1] == ()


def test_triangulated_hexagon_spine():
    dec = spine_decompose(triangulate_outerpath(cycle_graph(6)))
    assert dec.m == 1 and len(dec.fans[0]) == 5


def _decomposition_invariants(g, dec):
    assert dec.fans[-1] == ()
    assert all(len(f) >= 1 for f in dec.fans[:-1])
    for i in range(dec.m):
        assert dec.fans[i][-1] == dec.spine[i + 1]
    for a, b in zip(dec.spine, dec.spine[1:]):
        assert g.has_edge(a, b)
    for i, v in enumerate(dec.spine[:-1]):
        assert g.degree(v) >= 4
        # a fan is a path of neighbours of its spine vertex
        assert all(w in g.adj[v] for w in dec.fans[i])
        assert all(g.has_edge(a, b) for a, b in zip(dec.fans[i], dec.fans[i][1:]))


def test_decomposition_invariants_exhaustive():
    for g in all_maximal_outerpaths(11):
        if g.max_degree() >= 4:
            _decomposition_invariants(g, spine_decompose(g))


def test_fan_trace_is_q0_then_q1():
    trace = []
    c = color_outerpath(fan_graph(6), trace)
    assert validate(fan_graph(6), c, 2, 2).valid
    assert [t.state for t in trace] == [Q.Q0, Q.Q1]


def test_first_step_is_q0():
    for seed in range(30):
        trace = []
        color_outerpath(random_outerpath(40, seed), trace)
        assert trace[0].state is Q.Q0 and trace[0].holding == (Q.Q0,)


def test_q4_and_q5_side_conditions():
    for seed in range(200):
        trace = []
        color_outerpath(random_outerpath(60, seed, maximal=seed % 2 == 0), trace)
        for t in trace:
            if t.state is Q.Q4:
                assert t.fan > 1
            if t.state is Q.Q5:
                assert t.fan == 1


def test_trace_only_misses_at_terminal_q2():
    # the only steps whose claimed state does not hold are final Q2 claims
    # after an even fan with nothing left to color
    for g in all_maximal_outerpaths(12):
        if g.max_degree() < 4:
            continue
        _, trace = run_machine(g, spine_decompose(g))
        for t in trace_violations(trace):
            assert t is trace[-1] and t.state is Q.Q2 and t.fan == 0 and t.holding == ()


def test_holding_states_are_exclusive_before_the_end():
    for seed in range(100):
        g = triangulate_outerpath(random_outerpath(80, seed))
        if g.max_degree() < 4:
            continue
        _, trace = run_machine(g, spine_decompose(g))
        for t in trace[:-1]:
            assert t.holding == (t.state,)


def test_small_outerpaths():
    assert color_outerpath(build_graph(0, [])) == ()
    assert color_outerpath(build_graph(2, [(0, 1)])) == (0, 0)
    tri = color_outerpath(cycle_graph(3))
    assert validate(cycle_graph(3), tri, 2, 2).valid
    square = build_graph(4, [(0, 1), (1, 2), (2, 3), (0, 3), (0, 2)])
    assert validate(square, color_outerpath(square), 2, 2).valid


def test_exhaustive_small_maximal_outerpaths():
    for g in all_maximal_outerpaths(12):
        assert validate(g, color_outerpath(g), 2, 2).valid


def test_non_outerpaths_rejected():
    with pytest.raises(NotAnOuterpath):
        color_outerpath(complete_graph(4))
    with pytest.raises(NotAnOuterpath):
        color_outerpath(build_graph(4, [(0, 1), (1, 2), (2, 3)]))
    # the weak dual of this graph branches
    star_of_triangles = build_graph(6, [(0, 1), (1, 2), (2, 0), (0, 3), (1, 3), (1, 4), (2, 4), (2, 5), (0, 5)])
    assert is_biconnected(star_of_triangles)
    with pytest.raises(NotAnOuterpath):
        color_outerpath(star_of_triangles)


@settings(max_examples=200, deadline=None)
@given(st.integers(3, 200), st.integers(0, 10**9), st.booleans())
def test_random_outerpaths_color_validly(n, seed, maximal):
    g = random_outerpath(n, seed, maximal)
    assert validate(g, color_outerpath(g), 2, 2).valid
