import itertools
import random

import pytest
from hypothesis import given, settings, strategies as st

from helpers import nx_outerplanar
from starcolor.coloring import Role, role_of, validate
from starcolor.exact import decide, enumerate_colorings
from starcolor.graph import (
    biconnect_augment,
    build_graph,
    complete_graph,
    cycle_graph,
    face_edges,
    path_graph,
    recognize_outerplanar,
    weak_dual,
)
from starcolor.instances import fan_graph, lemma1_graph, random_outerpath, random_outerplanar
from starcolor.outerplanar import (
    ALL_CLASSES,
    PLAIN_EDGE_CLASSES,
    EquivalenceClass as EC,
    achievable_classes,
    class_sets,
    decide_outerplanar_2star,
    enumerate_classes,
    is_valid_class,
)

ISO, CEN, LEAF, UND = Role.ISOLATED, Role.CENTER, Role.LEAF, Role.UNDEFINED


def test_class_count_bound():
    assert len(ALL_CLASSES) <= 38
    assert len(ALL_CLASSES) == 24
    assert enumerate_classes() == ALL_CLASSES


def test_class_membership_examples():
    assert EC(0, ISO, 1, ISO) in ALL_CLASSES
    assert EC(0, UND, 0, UND) in ALL_CLASSES
    assert EC(0, UND, 1, UND) not in ALL_CLASSES
    assert EC(0, CEN, 0, CEN) not in ALL_CLASSES
    assert is_valid_class(EC(1, LEAF, 1, CEN)) and not is_valid_class(EC(1, LEAF, 1, LEAF))


def test_undefined_forces_equal_colors_and_roles():
    for cls in ALL_CLASSES:
        if UND in (cls.role_u, cls.role_v):
            assert cls.color_u == cls.color_v and cls.role_u == cls.role_v == UND


def test_two_adjacent_centers_need_a_four_path():
    # centers u, v on one edge, each with its own extra leaf
    g = path_graph(4)
    assert not validate(g, (0, 0, 0, 0), 2, 2).valid


def _projection(g, colorings, u, v):
    return {EC(c[u], role_of(g, c, u, v), c[v], role_of(g, c, v, u)) for c in colorings}


def test_valid_classes_are_exactly_realisable_edge_signatures():
    # every class appears at the attachment edge of some small outerplanar graph
    seen = set()
    for seed in range(200):
        g = random_outerplanar(random.Random(seed).randint(3, 8), seed)
        for u, v in g.edges:
            seen |= _projection(g, enumerate_colorings(g, 2, 2), u, v)
    assert seen <= ALL_CLASSES
    assert seen == ALL_CLASSES


def test_plain_edge_classes():
    assert PLAIN_EDGE_CLASSES == _projection(path_graph(2), enumerate_colorings(path_graph(2), 2, 2), 0, 1)


def test_triangle_leaf_node():
    tri = cycle_graph(3)
    got = set(achievable_classes((0, 1, 2), (0, 1)))
    assert got == _projection(tri, enumerate_colorings(tri, 2, 2), 0, 1)


def test_empty_child_set_propagates():
    assert achievable_classes((0, 1, 2), (0, 1), {(1, 2): frozenset()}) == {}


def _subtree_graph(g, tree, node):
    verts, edges, todo = set(), set(), [node]
    while todo:
        x = todo.pop()
        verts.update(tree.faces[x])
        edges.update(face_edges(tree.faces[x]))
        todo.extend(tree.children[x])
    old = sorted(verts)
    idx = {v: i for i, v in enumerate(old)}
    return build_graph(len(old), [(idx[a], idx[b]) for a, b in edges]), idx


def _check_node_sets(g):
    tree = weak_dual(g, recognize_outerplanar(g))
    cs = class_sets(tree)
    for node in range(len(tree.faces)):
        if not cs.walks[node]:
            continue  # computation stopped early at an empty set
        sub, idx = _subtree_graph(g, tree, node)
        u, v = tree.attachment[node]
        want = _projection(sub, enumerate_colorings(sub, 2, 2), idx[u], idx[v])
        assert set(cs.sets[node]) == want, (sorted(g.edges), node)


def test_fan_root_set_is_projection():
    _check_node_sets(fan_graph(4))


def test_node_sets_match_enumeration_on_random_graphs():
    for seed in range(150):
        g0 = random_outerplanar(random.Random(seed).randint(3, 10), seed, density=0.6)
        g, _ = biconnect_augment(g0)
        if g.n <= 13:
            _check_node_sets(g)


def test_node_sets_on_lemma1_graph():
    g, _ = biconnect_augment(lemma1_graph())
    tree = weak_dual(g, recognize_outerplanar(g))
    cs = class_sets(tree)
    assert not all(cs.sets)


def test_decide_examples():
    c5 = decide_outerplanar_2star(cycle_graph(5))
    assert c5 is not None and validate(cycle_graph(5), c5, 2, 2).valid
    assert decide_outerplanar_2star(lemma1_graph()) is None
    for seed in range(20):
        g = random_outerpath(random.Random(seed).randint(3, 30), seed, maximal=seed % 2 == 0)
        assert decide_outerplanar_2star(g) is not None


def test_decide_handles_disconnected_and_tiny_graphs():
    assert decide_outerplanar_2star(build_graph(0, [])) == ()
    assert decide_outerplanar_2star(build_graph(1, [])) == (0,)
    two = build_graph(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5)])
    assert validate(two, decide_outerplanar_2star(two), 2, 2).valid
    assert decide_outerplanar_2star(build_graph(18, [(a + 1, b + 1) for a, b in lemma1_graph().edges])) is None


def test_rejects_non_outerplanar():
    with pytest.raises(ValueError):
        decide_outerplanar_2star(complete_graph(4))


@settings(max_examples=150, deadline=None)
@given(st.integers(3, 13), st.integers(0, 10**6), st.floats(0, 1))
def test_agrees_with_exact_solver(n, seed, density):
    g = random_outerplanar(n, seed, density)
    assert nx_outerplanar(g)
    got = decide_outerplanar_2star(g)
    assert (got is not None) == decide(g, 2, 2).colorable
    if got is not None:
        assert validate(g, got, 2, 2).valid


def test_adding_edges_never_helps():
    # a sub-graph of a colorable graph stays colorable
    for seed in range(60):
        g = random_outerplanar(10, seed, density=1.0)
        if decide_outerplanar_2star(g) is None:
            continue
        edges = sorted(g.edges)
        for drop in itertools.islice(itertools.combinations(edges, 2), 10):
            h = build_graph(g.n, [e for e in edges if e not in drop])
            assert decide_outerplanar_2star(h) is not None
