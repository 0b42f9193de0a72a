"""Colorings whose monochromatic components are acyclic with bounded diameter.

A coloring is a plain sequence of color ids indexed by vertex.  ``lam`` is the
diameter bound: 0 means proper coloring, 1 means components are K1/K2, and 2
means every monochromatic component is a star.
"""

from __future__ import annotations

import enum
from collections import deque
from dataclasses import dataclass
from typing import Optional, Sequence

from .graph import Graph

Coloring = tuple[int, ...]


class Role(str, enum.Enum):
    CENTER = "center"
    LEAF = "leaf"
    ISOLATED = "isolated"
    UNDEFINED = "undefined"

    def __repr__(self) -> str:
        return self.value


@dataclass(frozen=True)
class Verdict:
    valid: bool
    witness: Optional[tuple[int, ...]] = None
    reason: str = ""

    def __bool__(self) -> bool:
        return self.valid


def same_colored_neighbours(g: Graph, c: Sequence[int], v: int) -> list[int]:
    return sorted(w for w in g.adj[v] if c[w] == c[v])


def monochromatic_components(g: Graph, c: Sequence[int]) -> list[tuple[list[int], list[tuple[int, int]]]]:
    """Connected components of the same-colored subgraph, as (vertices, induced edges)."""
    _check_total(g, c)
    seen = [False] * g.n
    comps = []
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        verts, todo = [s], [s]
        while todo:
            v = todo.pop()
            for w in g.adj[v]:
                if not seen[w] and c[w] == c[s]:
                    seen[w] = True
                    verts.append(w)
                    todo.append(w)
        vs = set(verts)
        edges = sorted((u, v) for u, v in g.edges if u in vs and v in vs)
        comps.append((sorted(verts), edges))
    return comps


def _check_total(g: Graph, c: Sequence[int]) -> None:
    if len(c) != g.n:
        raise ValueError(f"coloring has {len(c)} entries, graph has {g.n} vertices")


def _find_cycle(verts: list[int], edges: list[tuple[int, int]]) -> tuple[int, ...]:
    adj: dict[int, list[int]] = {v: [] for v in verts}
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    parent = {verts[0]: -1}
    depth = {verts[0]: 0}
    stack = [verts[0]]
    while stack:
        v = stack.pop()
        for w in sorted(adj[v]):
            if w == parent[v]:
                continue
            if w in parent:
                # back edge v-w closes a cycle through their common ancestor
                a, b = v, w
                left, right = [a], [b]
                while a != b:
                    if depth[a] >= depth[b]:
                        a = parent[a]
                        left.append(a)
                    else:
                        b = parent[b]
                        right.append(b)
                return tuple(left[:-1] + right[::-1])
            parent[w] = v
            depth[w] = depth[v] + 1
            stack.append(w)
    raise AssertionError("no cycle found in cyclic component")


def _bfs_far(adj: dict[int, list[int]], s: int) -> tuple[int, dict[int, int]]:
    prev = {s: -1}
    order = deque([s])
    last = s
    while order:
        v = order.popleft()
        last = v
        for w in adj[v]:
            if w not in prev:
                prev[w] = v
                order.append(w)
    return last, prev


def _long_path(verts: list[int], edges: list[tuple[int, int]], lam: int) -> tuple[int, ...]:
    adj: dict[int, list[int]] = {v: [] for v in verts}
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    for v in adj:
        adj[v].sort()
    a, _ = _bfs_far(adj, verts[0])
    b, prev = _bfs_far(adj, a)
    path = [b]
    while prev[path[-1]] != -1:
        path.append(prev[path[-1]])
    return tuple(path[: lam + 2])


def validate(g: Graph, c: Sequence[int], kappa: int, lam: int) -> Verdict:
    """Check that ``c`` is a (kappa, lam)-coloring of ``g``; report a witness if not."""
    if lam not in (0, 1, 2):
        raise ValueError("lam must be 0, 1 or 2")
    _check_total(g, c)
    for v in range(g.n):
        if not 0 <= c[v] < kappa:
            return Verdict(False, (v,), f"vertex {v} has color {c[v]} outside 0..{kappa - 1}")
    for verts, edges in monochromatic_components(g, c):
        if len(edges) >= len(verts):
            return Verdict(False, _find_cycle(verts, edges), "monochromatic cycle")
        if len(verts) > 1 and _diameter_exceeds(verts, edges, lam):
            return Verdict(False, _long_path(verts, edges, lam), f"monochromatic path longer than diameter {lam}")
    return Verdict(True)


def _diameter_exceeds(verts: list[int], edges: list[tuple[int, int]], lam: int) -> bool:
    # component is a tree here
    if lam == 0:
        return True
    if lam == 1:
        return len(verts) > 2
    deg: dict[int, int] = {v: 0 for v in verts}
    for u, v in edges:
        deg[u] += 1
        deg[v] += 1
    return sum(1 for d in deg.values() if d >= 2) > 1


def is_star_coloring(g: Graph, c: Sequence[int], kappa: int = 2) -> bool:
    return validate(g, c, kappa, 2).valid


def role_of(g: Graph, c: Sequence[int], v: int, partner: int) -> Role:
    """Role of ``v`` in its colored star, relative to the edge ``(v, partner)``.

    A vertex whose only same-colored neighbour is some vertex other than
    ``partner`` and forms an isolated K2 with it counts as a center.
    """
    if partner not in g.adj[v]:
        raise ValueError(f"({v}, {partner}) is not an edge")
    same = same_colored_neighbours(g, c, v)
    if not same:
        return Role.ISOLATED
    for w in same:
        others = same_colored_neighbours(g, c, w)
        if len(same) >= 2 and len(others) >= 2:
            raise ValueError(f"component of {v} is not a star")
    if len(same) >= 2:
        return Role.CENTER
    (w,) = same
    w_same = same_colored_neighbours(g, c, w)
    if len(w_same) >= 2:
        if any(len(same_colored_neighbours(g, c, x)) >= 2 for x in w_same if x != v):
            raise ValueError(f"component of {v} is not a star")
        return Role.LEAF
    return Role.UNDEFINED if w == partner else Role.CENTER
