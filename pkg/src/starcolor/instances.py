"""Named graphs and seeded random generators."""

from __future__ import annotations

import random

from .graph import Graph, build_graph, complete_graph, is_outerplanar


def lemma1_graph() -> Graph:
    """Outerplanar graph with no two-color star coloring.

    Vertex ids: u = 0, u1..u8 = 1..8, u21..u24 = 9..12, u31..u34 = 13..16.
    u is joined to the path u1..u8; u2 and u3 are each joined to their own
    four-vertex path.
    """
    u = 0
    top = list(range(1, 9))
    below2 = list(range(9, 13))
    below3 = list(range(13, 17))
    edges = [(u, x) for x in top]
    for hub, path in ((top[1], below2), (top[2], below3)):
        edges += [(hub, x) for x in path]
        edges += list(zip(path, path[1:]))
    edges += list(zip(top, top[1:]))
    return build_graph(17, edges)


def lemma1_labels() -> dict[int, str]:
    names = {0: "u"}
    names.update({i: f"u{i}" for i in range(1, 9)})
    names.update({9 + i: f"u2{i + 1}" for i in range(4)})
    names.update({13 + i: f"u3{i + 1}" for i in range(4)})
    return names


def fan_of_fans(top_len: int, hubs: list[tuple[int, int]]) -> Graph:
    """Apex 0 over the path 1..top_len; each ``(hub, size)`` adds a fan of ``size`` path vertices at ``hub``.

    ``fan_of_fans(8, [(2, 4), (3, 4)])`` is :func:`lemma1_graph`.
    """
    edges = [(0, x) for x in range(1, top_len + 1)] + [(x, x + 1) for x in range(1, top_len)]
    nxt = top_len + 1
    for hub, size in hubs:
        if not 1 <= hub <= top_len:
            raise ValueError(f"hub {hub} is not on the top path")
        path = list(range(nxt, nxt + size))
        nxt += size
        edges += [(hub, x) for x in path] + list(zip(path, path[1:]))
    return build_graph(nxt, edges)


def add_random_chords(g: Graph, seed: int, tries: int = 10) -> Graph:
    """Add up to ``tries`` random non-edges, keeping each only if the graph stays outerplanar."""
    rng = random.Random(seed)
    for _ in range(tries):
        u, v = rng.sample(range(g.n), 2)
        if g.has_edge(u, v):
            continue
        h = g.with_edges(0, [(min(u, v), max(u, v))])
        if is_outerplanar(h):
            g = h
    return g


def random_fan_of_fans(seed: int) -> Graph:
    """Two neighbouring hub fans of 3-5 vertices on a top path of 5-9, plus a few random chords.

    Roughly a third of these are not two-color star colorable.
    """
    rng = random.Random(seed)
    top = rng.randint(5, 9)
    hub = rng.randint(1, top - 1)
    g = fan_of_fans(top, [(hub, rng.randint(3, 5)), (hub + 1, rng.randint(3, 5))])
    return add_random_chords(g, seed, rng.randint(0, 3))


def k6() -> Graph:
    return complete_graph(6)


def fan_graph(path_len: int) -> Graph:
    """Apex 0 joined to every vertex of the path 1..path_len."""
    edges = [(0, i) for i in range(1, path_len + 1)] + [(i, i + 1) for i in range(1, path_len)]
    return build_graph(path_len + 1, edges)


def _relabel(n: int, edges: list[tuple[int, int]], rng: random.Random) -> Graph:
    perm = list(range(n))
    rng.shuffle(perm)
    return build_graph(n, [(perm[a], perm[b]) for a, b in edges])


def _triangulate_polygon(n: int, rng: random.Random) -> list[tuple[int, int]]:
    """Chords of a uniformly-built random triangulation of the polygon 0..n-1."""
    chords = []
    todo = [list(range(n))]
    while todo:
        poly = todo.pop()
        if len(poly) <= 3:
            continue
        # pick an ear-cutting or splitting chord
        i = rng.randrange(len(poly))
        j = (i + rng.randrange(2, len(poly) - 1)) % len(poly)
        a, b = sorted((i, j))
        chords.append((poly[a], poly[b]))
        todo.append(poly[a:b + 1])
        todo.append(poly[b:] + poly[: a + 1])
    return chords


def random_outerplanar(n: int, seed: int, density: float = 0.5) -> Graph:
    """Connected outerplanar graph: a random spanning tree of a random maximal outerplanar
    graph, plus each remaining edge with probability ``density``."""
    if n < 3:
        raise ValueError("n must be at least 3")
    rng = random.Random(seed)
    full = [(i, (i + 1) % n) for i in range(n)] + _triangulate_polygon(n, rng)
    rng.shuffle(full)
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    kept = []
    rest = []
    for a, b in full:
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb
            kept.append((a, b))
        else:
            rest.append((a, b))
    kept += [e for e in rest if rng.random() < density]
    return _relabel(n, kept, rng)


def outerpath_from_turns(turns: list[bool]) -> Graph:
    """Maximal outerpath built from a triangle strip.

    Start with triangle (0, 1, 2) and active edge (1, 2); each new vertex is
    joined to both ends of the active edge, and ``turn`` decides which end the
    new active edge keeps.
    """
    n = len(turns) + 3
    edges = [(0, 1), (1, 2), (0, 2)]
    a, b = 1, 2
    for k, keep_first in enumerate(turns, start=3):
        edges += [(a, k), (b, k)]
        if keep_first:
            b = k
        else:
            a = k
    return build_graph(n, edges)


def random_outerpath(n: int, seed: int, maximal: bool = True) -> Graph:
    """Random outerpath on ``n`` vertices; non-maximal ones drop random chords."""
    if n < 3:
        raise ValueError("n must be at least 3")
    rng = random.Random(seed)
    g = outerpath_from_turns([rng.random() < 0.5 for _ in range(n - 3)])
    edges = sorted(g.edges)
    if not maximal:
        outer = _strip_outer_edges(g)
        edges = [e for e in edges if e in outer or rng.random() < 0.5]
    return _relabel(n, edges, rng)


def _strip_outer_edges(g: Graph) -> set[tuple[int, int]]:
    # an edge of a maximal outerplanar graph is on the outer cycle iff it lies in one triangle
    outer = set()
    for u, v in g.edges:
        if len(g.adj[u] & g.adj[v]) == 1:
            outer.add((u, v))
    return outer
