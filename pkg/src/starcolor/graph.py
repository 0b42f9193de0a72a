"""Undirected simple graphs, outerplanarity recognition, faces and weak duals.

Vertices are dense integer ids ``0..n-1``.  Everything here is immutable and
side-effect free; augmentation returns a new graph with fresh ids appended.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

import networkx as nx

Edge = tuple[int, int]


def _norm(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    n: int
    edges: frozenset[Edge]
    adj: tuple[frozenset[int], ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        nbrs: list[set[int]] = [set() for _ in range(self.n)]
        for u, v in self.edges:
            if u == v:
                raise ValueError(f"self-loop at {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={self.n}")
            if u > v:
                raise ValueError(f"edge ({u}, {v}) not normalised")
            nbrs[u].add(v)
            nbrs[v].add(u)
        object.__setattr__(self, "adj", tuple(frozenset(s) for s in nbrs))

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def max_degree(self) -> int:
        return max((len(a) for a in self.adj), default=0)

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    def to_networkx(self) -> nx.Graph:
        h = nx.Graph()
        h.add_nodes_from(range(self.n))
        h.add_edges_from(self.edges)
        return h

    def induced(self, vertices: Iterable[int]) -> tuple["Graph", list[int]]:
        """Induced subgraph relabelled to ``0..k-1``; returns it with the new->old id list."""
        old = sorted(set(vertices))
        index = {v: i for i, v in enumerate(old)}
        edges = [(index[u], index[v]) for u, v in self.edges if u in index and v in index]
        return build_graph(len(old), edges), old

    def with_edges(self, extra_vertices: int, extra_edges: Iterable[Edge]) -> "Graph":
        return build_graph(self.n + extra_vertices, list(self.edges) + list(extra_edges))


def build_graph(n: int, edge_list: Iterable[Sequence[int]]) -> Graph:
    """Build a graph on ``n`` vertices; duplicate edges are merged.

    >>> build_graph(3, [(0, 1), (1, 2), (0, 2)]).m
    3
    """
    if n < 0:
        raise ValueError("vertex count must be nonnegative")
    edges = set()
    for pair in edge_list:
        u, v = int(pair[0]), int(pair[1])
        if u == v:
            raise ValueError(f"self-loop at {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
        edges.add(_norm(u, v))
    return Graph(n, frozenset(edges))


def complete_graph(n: int) -> Graph:
    return build_graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def cycle_graph(n: int) -> Graph:
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return True
    seen = {0}
    todo = [0]
    while todo:
        v = todo.pop()
        for w in g.adj[v]:
            if w not in seen:
                seen.add(w)
                todo.append(w)
    return len(seen) == g.n


def connected_components(g: Graph) -> list[list[int]]:
    seen = [False] * g.n
    comps = []
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        comp, todo = [s], [s]
        while todo:
            v = todo.pop()
            for w in g.adj[v]:
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    todo.append(w)
        comps.append(sorted(comp))
    return comps


def is_biconnected(g: Graph) -> bool:
    return g.n >= 3 and nx.is_biconnected(g.to_networkx())


# ---------------------------------------------------------------------------
# outerplanarity


@dataclass(frozen=True)
class OuterEmbedding:
    """Outerplane embedding: boundary walk of the outer face plus inner faces.

    For biconnected graphs ``outer_cycle`` is the Hamiltonian boundary cycle and
    every vertex occurs once; otherwise it is the closed boundary walk, in which
    cut vertices repeat.
    """

    outer_cycle: tuple[int, ...]
    inner_faces: tuple[tuple[int, ...], ...]


def _hamiltonian_cycle(n: int, adj: dict[int, set[int]]) -> Optional[list[int]]:
    """Outer cycle of a biconnected graph by degree-2 reduction, or None if not outerplanar.

    A biconnected outerplanar graph always has a vertex of degree 2 whose two
    edges are consecutive on the outer cycle; removing it and joining its
    neighbours keeps the graph biconnected outerplanar.
    """
    work = {v: set(ws) for v, ws in adj.items()}
    removed: list[tuple[int, int, int]] = []
    if n > 3 and sum(len(ws) for ws in work.values()) // 2 > 2 * n - 3:
        return None
    deg2 = deque(sorted(v for v, ws in work.items() if len(ws) == 2))
    alive = len(work)
    while alive > 3:
        while deg2 and (deg2[0] not in work or len(work[deg2[0]]) != 2):
            deg2.popleft()
        if not deg2:
            return None
        v = deg2.popleft()
        a, b = sorted(work.pop(v))
        alive -= 1
        work[a].discard(v)
        work[b].discard(v)
        work[a].add(b)
        work[b].add(a)
        removed.append((v, a, b))
        for x in (a, b):
            if len(work[x]) == 2:
                deg2.append(x)
            elif len(work[x]) < 2:
                return None
    if alive != 3 or any(len(ws) != 2 for ws in work.values()):
        return None
    cycle = sorted(work)
    for v, a, b in reversed(removed):
        pos = {x: i for i, x in enumerate(cycle)}
        i, j = pos[a], pos[b]
        k = len(cycle)
        if (i + 1) % k == j:
            cycle.insert(i + 1, v)
        elif (j + 1) % k == i:
            cycle.insert(j + 1, v)
        else:
            return None
    return cycle


def _trace_faces(rotation: dict[int, list[int]]) -> list[tuple[int, ...]]:
    """Faces of a rotation system; the successor of dart a->b is b->(predecessor of a around b)."""
    index = {v: {w: i for i, w in enumerate(ws)} for v, ws in rotation.items()}
    seen: set[tuple[int, int]] = set()
    faces = []
    for a in sorted(rotation):
        for b in rotation[a]:
            if (a, b) in seen:
                continue
            face = []
            x, y = a, b
            while (x, y) not in seen:
                seen.add((x, y))
                face.append(x)
                ring = rotation[y]
                z = ring[(index[y][x] - 1) % len(ring)]
                x, y = y, z
            faces.append(tuple(face))
    return faces


def _block_rotation(cycle: Sequence[int], adj: dict[int, set[int]]) -> dict[int, list[int]]:
    k = len(cycle)
    pos = {v: i for i, v in enumerate(cycle)}
    return {v: sorted(adj[v], key=lambda w: (pos[w] - pos[v]) % k) for v in cycle}


def _block_faces(cycle: Sequence[int], adj: dict[int, set[int]]) -> list[tuple[int, ...]]:
    rot = _block_rotation(cycle, adj)
    outer_dart = (cycle[1], cycle[0])
    inner = []
    for face in _trace_faces(rot):
        darts = {(face[i], face[(i + 1) % len(face)]) for i in range(len(face))}
        if outer_dart not in darts:
            inner.append(face)
    return inner


def _blocks(g: Graph) -> list[set[Edge]]:
    comps = nx.biconnected_component_edges(g.to_networkx())
    return sorted(({_norm(u, v) for u, v in c} for c in comps), key=lambda s: min(s))


def _block_cycles(g: Graph) -> Optional[list[tuple[set[Edge], Optional[list[int]]]]]:
    out = []
    for block in _blocks(g):
        if len(block) == 1:
            out.append((block, None))
            continue
        adj: dict[int, set[int]] = {}
        for u, v in block:
            adj.setdefault(u, set()).add(v)
            adj.setdefault(v, set()).add(u)
        cyc = _hamiltonian_cycle(len(adj), adj)
        if cyc is None:
            return None
        out.append((block, cyc))
    return out


def recognize_outerplanar(g: Graph) -> Optional[OuterEmbedding]:
    """Return an outerplane embedding of connected ``g``, or None if ``g`` is not outerplanar."""
    if not is_connected(g):
        raise ValueError("recognize_outerplanar expects a connected graph")
    if g.n <= 1:
        return OuterEmbedding(tuple(range(g.n)), ())
    blocks = _block_cycles(g)
    if blocks is None:
        return None
    if len(blocks) == 1 and blocks[0][1] is not None:
        block, cyc = blocks[0]
        adj = {v: set(g.adj[v]) for v in range(g.n)}
        return OuterEmbedding(tuple(cyc), tuple(_block_faces(cyc, adj)))

    rotation: dict[int, list[int]] = {v: [] for v in range(g.n)}
    inner: list[tuple[int, ...]] = []
    for block, cyc in blocks:
        if cyc is None:
            (u, v), = block
            rotation[u].append(v)
            rotation[v].append(u)
            continue
        adj: dict[int, set[int]] = {}
        for u, v in block:
            adj.setdefault(u, set()).add(v)
            adj.setdefault(v, set()).add(u)
        for v, ring in _block_rotation(cyc, adj).items():
            rotation[v].extend(ring)
        inner.extend(_block_faces(cyc, adj))
    inner_darts = set()
    for face in inner:
        inner_darts.add((face[0], face[1]))
    outer = [f for f in _trace_faces(rotation) if not any(
        (f[i], f[(i + 1) % len(f)]) in inner_darts for i in range(len(f)))]
    assert len(outer) == 1, "rotation system is not outerplane"
    return OuterEmbedding(outer[0], tuple(inner))


def is_outerplanar(g: Graph) -> bool:
    return all(
        recognize_outerplanar(g.induced(comp)[0]) is not None for comp in connected_components(g)
    )


# ---------------------------------------------------------------------------
# weak dual


@dataclass(frozen=True)
class WeakDualTree:
    faces: tuple[tuple[int, ...], ...]
    neighbours: tuple[tuple[int, ...], ...]
    root: int
    parent: tuple[Optional[int], ...]
    attachment: tuple[Edge, ...]
    # children of each node, listed in no particular order
    children: tuple[tuple[int, ...], ...]

    def postorder(self) -> list[int]:
        order, stack = [], [(self.root, False)]
        while stack:
            node, done = stack.pop()
            if done:
                order.append(node)
                continue
            stack.append((node, True))
            for c in self.children[node]:
                stack.append((c, False))
        return order

    def is_path(self) -> bool:
        return all(len(ns) <= 2 for ns in self.neighbours)


def face_edges(face: Sequence[int]) -> list[Edge]:
    return [_norm(face[i], face[(i + 1) % len(face)]) for i in range(len(face))]


def weak_dual(g: Graph, emb: OuterEmbedding) -> WeakDualTree:
    """Weak dual of a biconnected outerplane graph, rooted at its first leaf face."""
    if not is_biconnected(g) or len(emb.outer_cycle) != g.n:
        raise ValueError("weak_dual expects a biconnected outerplanar graph")
    faces = emb.inner_faces
    owner: dict[Edge, list[int]] = {}
    for i, face in enumerate(faces):
        for e in face_edges(face):
            owner.setdefault(e, []).append(i)
    nbrs: list[set[int]] = [set() for _ in faces]
    shared: dict[tuple[int, int], Edge] = {}
    for e, fs in owner.items():
        if len(fs) == 2:
            a, b = fs
            nbrs[a].add(b)
            nbrs[b].add(a)
            shared[(a, b)] = shared[(b, a)] = e
    root = min(i for i in range(len(faces)) if len(nbrs[i]) <= 1)
    outer = set(face_edges(emb.outer_cycle))
    root_edge = next(e for e in face_edges(faces[root]) if e in outer)
    parent: list[Optional[int]] = [None] * len(faces)
    attach: list[Edge] = [root_edge] * len(faces)
    children: list[list[int]] = [[] for _ in faces]
    seen = {root}
    todo = deque([root])
    while todo:
        x = todo.popleft()
        for y in sorted(nbrs[x]):
            if y not in seen:
                seen.add(y)
                parent[y] = x
                attach[y] = shared[(x, y)]
                children[x].append(y)
                todo.append(y)
    if len(seen) != len(faces):
        raise ValueError("weak dual is disconnected")
    return WeakDualTree(
        faces=tuple(faces),
        neighbours=tuple(tuple(sorted(s)) for s in nbrs),
        root=root,
        parent=tuple(parent),
        attachment=tuple(attach),
        children=tuple(tuple(c) for c in children),
    )


# ---------------------------------------------------------------------------
# biconnectivity augmentation


def _cycle_neighbours(cyc: Sequence[int], v: int) -> tuple[int, int]:
    i = list(cyc).index(v)
    return cyc[(i + 1) % len(cyc)], cyc[i - 1]


def biconnect_augment(g: Graph) -> tuple[Graph, dict[int, int]]:
    """Make a connected outerplanar graph biconnected by adding paths a-x-y-b at cut vertices.

    ``a`` and ``b`` are outer-cycle neighbours of the cut vertex in two different
    blocks, so every step keeps the graph outerplanar.  Original ids are kept,
    so the returned mapping is the identity on ``range(g.n)``.
    """
    if not is_connected(g):
        raise ValueError("biconnect_augment expects a connected graph")
    mapping = {v: v for v in range(g.n)}
    if g.n <= 2:
        return g, mapping
    h = g
    while True:
        blocks = _block_cycles(h)
        if blocks is None:
            raise ValueError("graph is not outerplanar")
        if len(blocks) == 1 and blocks[0][1] is not None:
            break
        hits: dict[int, list[tuple[set[Edge], Optional[list[int]]]]] = {}
        for blk in blocks:
            verts = {x for e in blk[0] for x in e}
            for x in verts:
                hits.setdefault(x, []).append(blk)
        c = min(x for x, bs in hits.items() if len(bs) >= 2)
        ends = []
        for block, cyc in hits[c][:2]:
            if cyc is None:
                (u, v), = block
                ends.append(v if u == c else u)
            else:
                ends.append(_cycle_neighbours(cyc, c)[0])
        a, b = ends
        x, y = h.n, h.n + 1
        h = h.with_edges(2, [(a, x), (x, y), (y, b)])
    assert recognize_outerplanar(h) is not None
    return h, mapping
