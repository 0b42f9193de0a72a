"""Constructive two-color star coloring of outerpaths.

The outerpath is first inner-triangulated.  Vertices of degree at least four
form the spine v_1..v_m, extended by one more vertex v_{m+1}; the fan f_i of
v_i is the boundary-ordered run of v_i's neighbours that starts next to
v_{i-1} and ends at v_{i+1}.  Fans are colored one at a time by a six-state
machine Q0..Q5 whose state describes the colors around the spine edge
(v_{i-1}, v_i).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Mapping, Optional, Sequence

from .coloring import Coloring, validate
from .exact import decide
from .graph import Graph, build_graph, is_biconnected, recognize_outerplanar, weak_dual


class MachineState(enum.IntEnum):
    Q0 = 0
    Q1 = 1
    Q2 = 2
    Q3 = 3
    Q4 = 4
    Q5 = 5


@dataclass(frozen=True)
class SpineDecomposition:
    spine: tuple[int, ...]  # v_1..v_{m+1}
    fans: tuple[tuple[int, ...], ...]  # f_1..f_{m+1}; the last one is empty

    @property
    def m(self) -> int:
        return len(self.spine) - 1

    @property
    def k(self) -> int:
        return len(self.spine)

    def fan_size(self, i: int) -> int:
        """|f_i| for 1-based i; zero beyond the last spine vertex."""
        return len(self.fans[i - 1]) if 1 <= i <= len(self.fans) else 0

    def prefix(self, i: int) -> set[int]:
        """Vertex set of G_i: v_1..v_i and f_1..f_{i-1}."""
        verts = set(self.spine[:i])
        for f in self.fans[: i - 1]:
            verts.update(f)
        return verts


@dataclass(frozen=True)
class TraceStep:
    i: int
    state: MachineState
    fan: int
    next_fan: int
    holding: tuple[MachineState, ...] = ()


class NotAnOuterpath(ValueError):
    pass


def _outerpath_embedding(g: Graph):
    if not is_biconnected(g):
        raise NotAnOuterpath("expected a biconnected outerpath")
    emb = recognize_outerplanar(g)
    if emb is None:
        raise NotAnOuterpath("graph is not outerplanar")
    tree = weak_dual(g, emb)
    if not tree.is_path():
        raise NotAnOuterpath("weak dual is not a path")
    return emb, tree


def _walk(face: Sequence[int], u: int, v: int) -> list[int]:
    k = len(face)
    i = list(face).index(u)
    if face[(i - 1) % k] == v:
        return [face[(i + t) % k] for t in range(k)]
    return [face[(i - t) % k] for t in range(k)]


def triangulate_outerpath(g: Graph) -> Graph:
    """Inner-triangulate a biconnected outerpath so that the weak dual stays a path.

    Each face is cut into a strip of triangles running from one shared chord
    to the other; faces with at most one shared chord become fans.
    """
    emb, tree = _outerpath_embedding(g)
    new_edges = []
    owners: dict[tuple[int, int], int] = {}
    for face in tree.faces:
        for i in range(len(face)):
            e = tuple(sorted((face[i], face[(i + 1) % len(face)])))
            owners[e] = owners.get(e, 0) + 1
    for face in tree.faces:
        if len(face) == 3:
            continue
        k = len(face)
        chords = [
            (face[i], face[(i + 1) % k])
            for i in range(k)
            if owners[tuple(sorted((face[i], face[(i + 1) % k])))] == 2
        ]
        if not chords:
            walk = list(face)
            new_edges += [(walk[0], walk[j]) for j in range(2, k - 1)]
            continue
        a, b = chords[0]
        walk = _walk(face, a, b)  # a = w_0 ... w_last = b
        last = len(walk) - 1
        if len(chords) == 1:
            new_edges += [(a, walk[j]) for j in range(2, last)]
            continue
        c, d = chords[1]
        p = min(walk.index(c), walk.index(d))  # second chord is (w_p, w_{p+1})
        i, j = 0, last
        while (i, j) != (p, p + 1):
            if i < p:
                i += 1
            else:
                j -= 1
            if (i, j) != (p, p + 1):
                new_edges.append((walk[i], walk[j]))
    h = build_graph(g.n, list(g.edges) + new_edges)
    _, htree = _outerpath_embedding(h)
    assert all(len(f) == 3 for f in htree.faces)
    return h


def _rotation(g: Graph, cycle: Sequence[int], v: int) -> list[int]:
    n = len(cycle)
    pos = {x: i for i, x in enumerate(cycle)}
    return sorted(g.adj[v], key=lambda w: (pos[w] - pos[v]) % n)


def spine_decompose(g: Graph) -> SpineDecomposition:
    """Spine and fans of an inner-triangulated biconnected outerpath with a vertex of degree >= 4.

    The spine is the path formed by the high-degree vertices along chords.
    """
    emb, tree = _outerpath_embedding(g)
    if any(len(f) != 3 for f in tree.faces):
        raise NotAnOuterpath("outerpath is not inner-triangulated")
    cycle = emb.outer_cycle
    spine_set = {v for v in range(g.n) if g.degree(v) >= 4}
    if not spine_set:
        raise NotAnOuterpath("no vertex of degree at least four")
    # spine adjacency uses chords only: outer edges may join two spine vertices
    n = len(cycle)
    pos = {x: i for i, x in enumerate(cycle)}
    sadj = {
        v: sorted(w for w in g.adj[v] & spine_set if (pos[w] - pos[v]) % n not in (1, n - 1))
        for v in spine_set
    }
    ends = sorted(v for v in spine_set if len(sadj[v]) <= 1)
    if any(len(ws) > 2 for ws in sadj.values()) or not ends:
        raise NotAnOuterpath("spine vertices do not induce a path")
    spine = [ends[0]]
    while len(spine) < len(spine_set):
        nxt = [w for w in sadj[spine[-1]] if w not in spine]
        if len(nxt) != 1:
            raise NotAnOuterpath("spine vertices do not induce a path")
        spine.append(nxt[0])
    m = len(spine)

    rot = {v: _rotation(g, cycle, v) for v in spine}
    last = spine[-1]
    if m == 1:
        spine.append(rot[last][-1])
    else:
        outer = [rot[last][0], rot[last][-1]]
        cand = [w for w in outer if w not in g.adj[spine[-2]]]
        if len(cand) != 1:
            raise NotAnOuterpath("cannot determine the final spine vertex")
        spine.append(cand[0])

    fans: list[tuple[int, ...]] = []
    for idx in range(m):
        v = spine[idx]
        ring = rot[v]
        if idx == 0:
            if m == 1:
                fan = ring
            elif ring[-1] in g.adj[spine[1]]:
                # the outer neighbour next to v_2 opens f_2
                fan = ring[:-1]
            else:
                fan = ring[1:][::-1]
        else:
            a, b = ring.index(spine[idx - 1]), ring.index(spine[idx + 1])
            fan = ring[a + 1 : b + 1] if b > a else ring[b:a][::-1]
        fans.append(tuple(fan))
    fans.append(())
    dec = SpineDecomposition(tuple(spine), tuple(fans))
    _check_decomposition(g, dec)
    return dec


def _check_decomposition(g: Graph, dec: SpineDecomposition) -> None:
    covered = list(dec.spine[:1])
    for f in dec.fans:
        covered.extend(f)
    if sorted(covered) != list(range(g.n)):
        raise NotAnOuterpath("spine and fans do not partition the vertices")
    for i, f in enumerate(dec.fans[:-1]):
        v = dec.spine[i]
        if not f or f[-1] != dec.spine[i + 1]:
            raise NotAnOuterpath(f"fan {i + 1} does not end at the next spine vertex")
        if any(x not in g.adj[v] for x in f):
            raise NotAnOuterpath(f"fan {i + 1} contains a non-neighbour of its spine vertex")
        if any(y not in g.adj[x] for x, y in zip(f, f[1:])):
            raise NotAnOuterpath(f"fan {i + 1} is not a path")
        if i > 0 and f[0] not in g.adj[dec.spine[i - 1]]:
            raise NotAnOuterpath(f"fan {i + 1} does not start next to the previous spine vertex")


# ---------------------------------------------------------------------------
# state predicates


def _same(g: Graph, colors: Mapping[int, int], region: set[int], x: int) -> list[int]:
    return [w for w in g.adj[x] if w in region and colors[w] == colors[x]]


def _is_leaf(g, colors, region, x) -> bool:
    same = _same(g, colors, region, x)
    return len(same) == 1 and len(_same(g, colors, region, same[0])) >= 2


def _is_center(g, colors, region, x) -> bool:
    # an isolated monochromatic K2 counts: either end may still take more leaves
    return bool(_same(g, colors, region, x)) and not _is_leaf(g, colors, region, x)


def state_predicate(
    state: MachineState, g: Graph, dec: SpineDecomposition, colors: Mapping[int, int], i: int
) -> bool:
    """Whether the coloring of G_i satisfies condition ``state`` (i is 1-based)."""
    region = dec.prefix(i)
    if any(v not in colors for v in region):
        return False
    if state is MachineState.Q0:
        return i == 1 and set(colors) & set(range(g.n)) == {dec.spine[0]}
    if i < 2:
        return False
    prev, cur = dec.spine[i - 2], dec.spine[i - 1]
    same_prev = _same(g, colors, region, prev)
    same_cur = _same(g, colors, region, cur)
    equal = colors[prev] == colors[cur]
    k = dec.k
    if state is MachineState.Q1:
        return not equal and _is_center(g, colors, region, prev) and not same_cur
    if state is MachineState.Q2:
        return equal and same_prev == [cur] and same_cur == [prev]
    if state is MachineState.Q3:
        return not equal and _is_leaf(g, colors, region, prev) and not same_cur
    if state is MachineState.Q4:
        return (
            not equal
            and _is_center(g, colors, region, prev)
            and _is_center(g, colors, region, cur)
            and i < k
            and dec.fan_size(i) > 1
        )
    if state is MachineState.Q5:
        return (
            equal
            and len(same_prev) >= 2
            and same_cur == [prev]
            and i < k
            and dec.fan_size(i) == 1
        )
    raise ValueError(state)


def holding_states(g: Graph, dec: SpineDecomposition, colors: Mapping[int, int], i: int) -> list[MachineState]:
    return [q for q in MachineState if state_predicate(q, g, dec, colors, i)]


# ---------------------------------------------------------------------------
# the machine


def _alternate(colors: dict[int, int], fan: Sequence[int], last: int) -> None:
    n = len(fan)
    for t, x in enumerate(fan):
        colors[x] = last if (n - 1 - t) % 2 == 0 else 1 - last


def _alternate_doubled_end(colors: dict[int, int], fan: Sequence[int], last: int) -> None:
    # last two share ``last``; the rest alternate away from them
    n = len(fan)
    colors[fan[-1]] = colors[fan[-2]] = last
    for t in range(n - 2):
        colors[fan[t]] = 1 - last if (n - 3 - t) % 2 == 0 else last


def _step(state: MachineState, colors: dict[int, int], fan: Sequence[int], nxt: int, ci: int) -> MachineState:
    """Color ``fan`` (= f_i) and return the condition G_{i+1} satisfies."""
    size = len(fan)
    Q = MachineState
    if state is Q.Q0 or state is Q.Q4:
        _alternate(colors, fan, 1 - ci)
        return Q.Q1
    if state is Q.Q5:
        assert size == 1
        _alternate(colors, fan, 1 - ci)
        return Q.Q3
    if state is Q.Q1 or (state is Q.Q3 and size % 2 == 0 and size != 1):
        if size == 1:
            _alternate(colors, fan, ci)
            return Q.Q2
        _alternate(colors, fan, 1 - ci)
        return Q.Q1
    if state is Q.Q3 and size == 1:
        _alternate(colors, fan, ci)
        return Q.Q2
    if state is Q.Q2 and size % 2 == 1:
        _alternate(colors, fan, 1 - ci)
        return Q.Q1
    # Q2 with an even fan, or Q3 with an odd fan other than 1: look one fan ahead
    if nxt == 0:
        _alternate(colors, fan, ci)
        return Q.Q2
    if nxt == 1:
        _alternate(colors, fan, ci)
        return Q.Q5
    _alternate_doubled_end(colors, fan, 1 - ci)
    return Q.Q4


def run_machine(g: Graph, dec: SpineDecomposition) -> tuple[dict[int, int], list[TraceStep]]:
    """Color an inner-triangulated outerpath fan by fan; returns the colors and the state trace.

    Each trace step records the state claimed for G_i together with every
    condition that actually holds of the coloring at that point.
    """
    colors = {dec.spine[0]: 0}
    state = MachineState.Q0
    trace = []
    for i in range(1, dec.k + 1):
        size, nxt = dec.fan_size(i), dec.fan_size(i + 1)
        held = tuple(holding_states(g, dec, colors, i))
        trace.append(TraceStep(i, state, size, nxt, held))
        if size == 0:
            break
        state = _step(state, colors, dec.fans[i - 1], nxt, colors[dec.spine[i - 1]])
    return colors, trace


def trace_violations(trace: Sequence[TraceStep]) -> list[TraceStep]:
    """Steps where the claimed state is not the single condition that holds."""
    return [t for t in trace if t.holding != (t.state,)]


def color_outerpath(g: Graph, trace: Optional[list[TraceStep]] = None) -> Coloring:
    """A two-color star coloring of a biconnected outerpath (or of a graph on at most two vertices).

    Passing a list as ``trace`` collects the machine's state per step.
    """
    if g.n <= 2:
        return (0,) * g.n
    h = triangulate_outerpath(g)
    if h.max_degree() < 4:
        found = decide(h, 2, 2)
        assert found.coloring is not None
        result = found.coloring
    else:
        dec = spine_decompose(h)
        colors, steps = run_machine(h, dec)
        if trace is not None:
            trace.extend(steps)
        result = tuple(colors[v] for v in range(h.n))
    assert validate(g, result, 2, 2).valid
    return result
