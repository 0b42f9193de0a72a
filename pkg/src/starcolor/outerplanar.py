"""Two-color star-coloring decision for outerplanar graphs.

The graph is made biconnected, its weak dual is rooted at a leaf face, and for
every dual node we compute which equivalence classes -- (color, role) of the two
endpoints of the node's attachment edge -- are realised by some coloring of the
subgraph below it.  A face is processed by walking its boundary from one
attachment endpoint ``u`` to the other ``v``; every boundary edge is either a
child attachment edge (carrying the child's class set) or a plain edge.
"""

from __future__ import annotations

import itertools
from typing import Mapping, NamedTuple, Optional, Sequence

from .coloring import Coloring, Role, validate
from .graph import (
    Edge,
    Graph,
    WeakDualTree,
    biconnect_augment,
    connected_components,
    recognize_outerplanar,
    weak_dual,
)

ISO, CEN, LEAF, UND = Role.ISOLATED, Role.CENTER, Role.LEAF, Role.UNDEFINED


class EquivalenceClass(NamedTuple):
    color_u: int
    role_u: Role
    color_v: int
    role_v: Role

    def flipped(self) -> "EquivalenceClass":
        return EquivalenceClass(self.color_v, self.role_v, self.color_u, self.role_u)


def is_valid_class(cls: EquivalenceClass) -> bool:
    cu, ru, cv, rv = cls
    if cu == cv:
        # u and v are adjacent, so the edge (u, v) lies in their star
        return (ru, rv) in {(UND, UND), (CEN, LEAF), (LEAF, CEN)}
    return UND not in (ru, rv)


def enumerate_classes() -> frozenset[EquivalenceClass]:
    """All admissible classes over two colors."""
    roles = (CEN, LEAF, ISO, UND)
    return frozenset(
        cls
        for cls in (EquivalenceClass(*t) for t in itertools.product((0, 1), roles, (0, 1), roles))
        if is_valid_class(cls)
    )


ALL_CLASSES = enumerate_classes()

# the classes realised by a lone edge
PLAIN_EDGE_CLASSES = frozenset(
    {EquivalenceClass(a, ISO, 1 - a, ISO) for a in (0, 1)}
    | {EquivalenceClass(a, UND, a, UND) for a in (0, 1)}
)

# Walk statuses of the current face vertex w_j, summarising its same-colored
# neighbours among the segments already walked.  K2FREE: w_j and w_{j-1} form a
# monochromatic edge and w_{j-1} has no other same-colored neighbour.
S_ISO, S_CEN, S_LEAF, S_K2FREE = "iso", "center", "leaf", "k2free"
# Extra bookkeeping for u: PENDING until we know whether its K2 partner w_1 grows,
# K2END when it did not (u then counts as a center).
U_PENDING, U_K2END = "pending", "k2end"

_ROLE_STATUS = {ISO: S_ISO, CEN: S_CEN, LEAF: S_LEAF}


def _step(status: str, role_a: Role, role_b: Role) -> Optional[str]:
    """Status of w_{j+1} after merging segment j into w_j, or None if a star breaks."""
    if status == S_LEAF and role_a != ISO:
        return None
    if role_a == LEAF and status != S_ISO:
        return None
    if role_a == UND:
        return S_K2FREE if status == S_ISO else S_LEAF
    return _ROLE_STATUS[role_b]


def _final_side(status: str) -> str:
    return U_K2END if status == S_K2FREE else status


def _target_ok(cu: int, u_side: str, cv: int, v_side: str) -> list[EquivalenceClass]:
    """Classes (w.r.t. the attachment edge) consistent with the walked sides of u and v."""
    if cu != cv:
        as_role = {S_ISO: ISO, S_CEN: CEN, S_LEAF: LEAF, U_K2END: CEN}
        return [EquivalenceClass(cu, as_role[u_side], cv, as_role[v_side])]
    capable = (S_CEN, U_K2END)
    if u_side == S_ISO and v_side == S_ISO:
        return [EquivalenceClass(cu, UND, cv, UND)]
    if u_side in capable and v_side == S_ISO:
        return [EquivalenceClass(cu, CEN, cv, LEAF)]
    if u_side == S_ISO and v_side in capable:
        return [EquivalenceClass(cu, LEAF, cv, CEN)]
    return []


def walk_classes(
    segments: Sequence[frozenset[EquivalenceClass] | set[EquivalenceClass]],
) -> dict[EquivalenceClass, tuple[EquivalenceClass, ...]]:
    """Achievable classes of a face walked as ``segments`` (each oriented w_j -> w_{j+1}).

    Returns every achievable class mapped to one witnessing choice of segment
    classes.  Ties are broken by the sorted order of candidate classes, so the
    result is deterministic.
    """
    k = len(segments)
    if k < 2:
        raise ValueError("a face has at least three vertices")
    ordered = [sorted(s) for s in segments]
    result: dict[EquivalenceClass, tuple[EquivalenceClass, ...]] = {}
    for cu in (0, 1):
        # state: (color of w_j, status of w_j, side of u) -> chosen segment classes
        states: dict[tuple[int, str, str], tuple[EquivalenceClass, ...]] = {(cu, S_ISO, S_ISO): ()}
        for j in range(k):
            nxt: dict[tuple[int, str, str], tuple[EquivalenceClass, ...]] = {}
            for (col, status, u_side), chosen in states.items():
                for cls in ordered[j]:
                    if cls.color_u != col:
                        continue
                    new_status = _step(status, cls.role_u, cls.role_v)
                    if new_status is None:
                        continue
                    side = u_side
                    if j == 0:
                        side = U_PENDING if cls.role_u == UND else _ROLE_STATUS[cls.role_u]
                    elif j == 1 and u_side == U_PENDING:
                        side = S_LEAF if cls.role_u != ISO else U_K2END
                    key = (cls.color_v, new_status, side)
                    if key not in nxt:
                        nxt[key] = chosen + (cls,)
            states = nxt
        for (cv, status, u_side), chosen in sorted(states.items()):
            for target in _target_ok(cu, u_side, cv, _final_side(status)):
                result.setdefault(target, chosen)
    return result


def _oriented(face: Sequence[int], edge: Edge) -> list[int]:
    """Face vertices listed from u around to v, where ``edge == (u, v)`` is a face edge."""
    u, v = edge
    k = len(face)
    i = list(face).index(u)
    if face[(i - 1) % k] == v:
        return [face[(i + t) % k] for t in range(k)]
    if face[(i + 1) % k] == v:
        return [face[(i - t) % k] for t in range(k)]
    raise ValueError(f"{edge} is not an edge of face {face}")


def achievable_classes(
    face: Sequence[int],
    attachment_edge: Edge,
    child_classes: Mapping[Edge, frozenset[EquivalenceClass] | set[EquivalenceClass]] = {},
) -> dict[EquivalenceClass, tuple[EquivalenceClass, ...]]:
    """Achievable classes of a face with attachment edge ``(u, v)``.

    ``child_classes`` maps a child's attachment edge ``(a, b)`` -- in the
    orientation its classes are expressed in -- to the child's class set; every
    other face edge is a plain edge.
    """
    walk = _oriented(face, attachment_edge)
    segments = []
    for a, b in zip(walk, walk[1:]):
        if (a, b) in child_classes:
            segments.append(frozenset(child_classes[(a, b)]))
        elif (b, a) in child_classes:
            segments.append(frozenset(c.flipped() for c in child_classes[(b, a)]))
        else:
            segments.append(PLAIN_EDGE_CLASSES)
    return walk_classes(segments)


class ClassSets(NamedTuple):
    tree: WeakDualTree
    walks: list[list[int]]
    sets: list[dict[EquivalenceClass, tuple[EquivalenceClass, ...]]]


def class_sets(tree: WeakDualTree) -> ClassSets:
    """Bottom-up class sets of every dual node (node attachment edges as oriented in ``tree``)."""
    nodes = len(tree.faces)
    walks: list[list[int]] = [[] for _ in range(nodes)]
    sets: list[dict[EquivalenceClass, tuple[EquivalenceClass, ...]]] = [{} for _ in range(nodes)]
    for node in tree.postorder():
        children = {tree.attachment[c]: frozenset(sets[c]) for c in tree.children[node]}
        walks[node] = _oriented(tree.faces[node], tree.attachment[node])
        sets[node] = achievable_classes(tree.faces[node], tree.attachment[node], children)
        if not sets[node]:
            # one empty class set already rules out every coloring
            return ClassSets(tree, walks, sets)
    return ClassSets(tree, walks, sets)


def _reconstruct(cs: ClassSets, n: int) -> Coloring:
    tree = cs.tree
    color = [-1] * n
    child_by_edge = {}
    for node in range(len(tree.faces)):
        for c in tree.children[node]:
            child_by_edge[tree.attachment[c]] = c
    root_cls = min(cs.sets[tree.root])
    todo = [(tree.root, root_cls)]
    while todo:
        node, cls = todo.pop()
        walk = cs.walks[node]
        chosen = cs.sets[node][cls]
        for (a, b), seg in zip(zip(walk, walk[1:]), chosen):
            for x, col in ((a, seg.color_u), (b, seg.color_v)):
                assert color[x] in (-1, col)
                color[x] = col
            if (a, b) in child_by_edge:
                todo.append((child_by_edge[(a, b)], seg))
            elif (b, a) in child_by_edge:
                todo.append((child_by_edge[(b, a)], seg.flipped()))
    assert -1 not in color
    return tuple(color)


def _decide_connected(g: Graph) -> Optional[Coloring]:
    if g.n <= 2:
        return (0,) * g.n
    if recognize_outerplanar(g) is None:
        raise ValueError("graph is not outerplanar")
    h, mapping = biconnect_augment(g)
    emb = recognize_outerplanar(h)
    assert emb is not None
    tree = weak_dual(h, emb)
    cs = class_sets(tree)
    if any(not s for s in cs.sets) or not cs.sets[tree.root]:
        return None
    full = _reconstruct(cs, h.n)
    assert validate(h, full, 2, 2).valid
    return tuple(full[mapping[v]] for v in range(g.n))


def decide_outerplanar_2star(g: Graph) -> Optional[Coloring]:
    """A two-color star coloring of outerplanar ``g``, or None if none exists.

    Components are solved independently.
    """
    color = [0] * g.n
    for comp in connected_components(g):
        sub, old = g.induced(comp)
        part = _decide_connected(sub)
        if part is None:
            return None
        for i, v in enumerate(old):
            color[v] = part[i]
    result = tuple(color)
    assert validate(g, result, 2, 2).valid
    return result
