
import pytest
from hypothesis import given, settings, strategies as st

from starcolor.coloring import validate
from starcolor.exact import Status, decide, enumerate_colorings
from starcolor.graph import build_graph, complete_graph, cycle_graph
from starcolor.reductions import (
    CLAUSE_GADGET_LABELS,
    CnfFormula,
    DimacsError,
    U1,
    U2,
    V1,
    V4,
    assignment_to_coloring,
    build_chain,
    chain_length,
    coloring_to_assignment,
    coloring_to_threecoloring,
    format_certificate_map,
    has_triangle,
    naesat_to_2star,
    parse_certificate_map,
    parse_dimacs_cnf,
    threecolor_to_3star2,
    threecoloring_to_coloring,
    trianglefree_clause_gadget,
    variable_gadget,
)

BOTH_SIGNS = CnfFormula(3, ((1, 2, 3), (-1, -2, -3)))


def test_parse_dimacs_examples():
    phi = parse_dimacs_cnf("p cnf 3 2\n1 2 3 0\n-1 -2 -3 0\n")
    assert phi == BOTH_SIGNS
    assert parse_dimacs_cnf("p cnf 1 1\n1 1 1 0\n").clauses == ((1, 1, 1),)
    # clauses may wrap and comments are skipped
    assert parse_dimacs_cnf("c hi\np cnf 2 1\n1 -2\n 2 0\n").clauses == ((1, -2, 2),)


@pytest.mark.parametrize(
    "text",
    [
        "p cnf 2 1\n1 2 0\n",
        "p cnf 2 1\n1 2 3 0\n",
        "1 2 3 0\n",
        "p cnf 3 2\n1 2 3 0\n",
        "p cnf 3 1\n1 2 3\n",
        "p cnf 3 1\n1 x 3 0\n",
        "p dnf 3 1\n1 2 3 0\n",
    ],
)
def test_parse_dimacs_errors(text):
    with pytest.raises(DimacsError):
        parse_dimacs_cnf(text)


def test_variable_gadget_degrees():
    g = variable_gadget()
    assert [g.degree(v) for v in range(6)] == [5, 5, 3, 4, 4, 3]


def test_variable_gadget_forces_alternation():
    cols = enumerate_colorings(variable_gadget(), 2, 2)
    assert cols
    for c in cols:
        assert c[U1] != c[U2]
        assert all(c[a] != c[a + 1] for a in range(V1, V4))


def test_chain_shapes():
    assert build_chain(1)[0] == variable_gadget()
    g, spine = build_chain(3)
    assert g.n == 18 and len(spine) == 12
    assert g.degree(spine[0]) == g.degree(spine[-1]) == 3
    assert all(g.degree(v) == 4 for v in spine[1:-1])
    assert all(g.has_edge(a, b) for a, b in zip(spine, spine[1:]))


def test_chain_of_two_alternates():
    g, spine = build_chain(2)
    for c in enumerate_colorings(g, 2, 2):
        assert all(c[a] != c[b] for a, b in zip(spine, spine[1:]))


def test_chain_length_rule():
    assert chain_length([1]) == 1
    assert chain_length([1, -1, 1, 1, -1]) == 2
    # four positive occurrences need 4 slots of one parity, so length 2
    assert chain_length([1, 1, 1, 1]) == 2
    assert chain_length([1] * 6) == 3


def test_two_clause_formula_graph():
    art = naesat_to_2star(BOTH_SIGNS)
    assert art.graph.max_degree() <= 5
    assert len(art.clause_vertex_map) == 2
    assert decide(art.graph, 2, 2).colorable


def test_unsatisfiable_single_clause():
    phi = CnfFormula(1, ((1, 1, 1),))
    assert phi.nae_solutions() == []
    assert decide(naesat_to_2star(phi).graph, 2, 2).status is Status.UNCOLORABLE


def test_mixed_assignment_yields_coloring():
    # O of x1 and E of x2, x3 end up gray
    art = naesat_to_2star(BOTH_SIGNS)
    c = assignment_to_coloring(art, {1: True, 2: False, 3: False})
    assert validate(art.graph, c, 2, 2).valid
    assert all(c[v] == 1 for v in art.variable_anchor_map[1].odd)
    assert all(c[v] == 1 for v in art.variable_anchor_map[2].even)
    assert not BOTH_SIGNS.nae_satisfied({1: False, 2: False, 3: False})


def test_all_true_single_clause_fails():
    phi = CnfFormula(3, ((1, 2, 3),))
    art = naesat_to_2star(phi)
    verdict = validate(art.graph, assignment_to_coloring(art, {1: True, 2: True, 3: True}), 2, 2)
    assert not verdict.valid
    assert set(verdict.witness) == set(art.clause_vertex_map[0])


def test_flipped_assignment_still_valid():
    art = naesat_to_2star(BOTH_SIGNS)
    a = {1: True, 2: False, 3: True}
    c = assignment_to_coloring(art, a)
    flipped = assignment_to_coloring(art, {k: not v for k, v in a.items()})
    assert validate(art.graph, flipped, 2, 2).valid
    assert flipped == tuple(1 - x for x in c)


def test_oracle_coloring_decodes():
    art = naesat_to_2star(BOTH_SIGNS)
    c = decide(art.graph, 2, 2).coloring
    a = coloring_to_assignment(art, c)
    assert BOTH_SIGNS.nae_satisfied(a)
    swapped = coloring_to_assignment(art, [1 - x for x in c])
    assert swapped == {k: not v for k, v in a.items()}


def test_decoding_rejects_invalid_coloring():
    art = naesat_to_2star(BOTH_SIGNS)
    with pytest.raises(ValueError):
        coloring_to_assignment(art, [0] * art.graph.n)


@st.composite
def formulas(draw, max_vars=6, max_clauses=6):
    n = draw(st.integers(1, max_vars))
    lit = st.integers(1, n).flatmap(lambda v: st.sampled_from((v, -v)))
    clauses = draw(st.lists(st.tuples(lit, lit, lit), min_size=1, max_size=max_clauses))
    return CnfFormula(n, tuple(clauses))


@settings(max_examples=150, deadline=None)
@given(formulas(max_vars=8, max_clauses=12))
def test_round_trip_and_degree(phi):
    art = naesat_to_2star(phi)
    assert art.graph.max_degree() <= 5
    clause_vertices = [x for tri in art.clause_vertex_map.values() for x in tri]
    assert len(set(clause_vertices)) == len(clause_vertices)
    for a in phi.nae_solutions()[:4]:
        c = assignment_to_coloring(art, a)
        assert validate(art.graph, c, 2, 2).valid
        assert coloring_to_assignment(art, c) == a


@settings(max_examples=60, deadline=None)
@given(formulas(max_vars=3, max_clauses=2))
def test_small_formulas_match_oracle(phi):
    sat = bool(phi.nae_solutions())
    assert decide(naesat_to_2star(phi).graph, 2, 2).colorable == sat


def test_certificate_map_round_trip():
    art = naesat_to_2star(BOTH_SIGNS)
    parsed = parse_certificate_map(format_certificate_map(art))
    assert parsed["clause"] == art.clause_vertex_map
    assert parsed["var"][2]["even"] == art.variable_anchor_map[2].even
    assert parsed["link"] == art.literal_links


def test_k6_pairing():
    g = complete_graph(6)
    for c in enumerate_colorings(g, 3, 2):
        assert all(sum(c[w] == c[v] for w in g.adj[v]) == 1 for v in range(6))


def test_threecol_examples():
    art = threecolor_to_3star2(complete_graph(3))
    assert art.graph.n == 18 and art.graph.max_degree() <= 9
    assert decide(art.graph, 3, 2).colorable
    assert decide(threecolor_to_3star2(complete_graph(4)).graph, 3, 2).status is Status.UNCOLORABLE
    single = threecolor_to_3star2(build_graph(1, []))
    assert single.graph == complete_graph(6)
    assert decide(single.graph, 3, 2).colorable


def test_threecol_certificates_both_ways():
    g = cycle_graph(5)
    proper = (0, 1, 0, 1, 2)
    art = threecolor_to_3star2(g)
    c = threecoloring_to_coloring(art, proper)
    assert validate(art.graph, c, 3, 2).valid
    assert coloring_to_threecoloring(art, c) == proper
    found = decide(art.graph, 3, 2).coloring
    back = coloring_to_threecoloring(art, found)
    assert all(back[a] != back[b] for a, b in g.edges)


def test_threecol_rejects_high_degree():
    with pytest.raises(ValueError):
        threecolor_to_3star2(build_graph(6, [(0, i) for i in range(1, 6)]))


def test_clause_gadget():
    g = trianglefree_clause_gadget()
    assert not has_triangle(g)
    names = {name: i for i, name in enumerate(CLAUSE_GADGET_LABELS)}
    trio = [names["u"], names["u11"], names["u23"]]
    cols = enumerate_colorings(g, 2, 2)
    assert cols
    for c in cols:
        assert len({c[x] for x in trio}) == 2
    forced = tuple(0 if i in trio else 1 for i in range(7))
    verdict = validate(g, forced, 2, 2)
    path = [names[x] for x in ("u21", "u22", "u12", "u13")]
    assert verdict.witness in (tuple(path), tuple(reversed(path)))
