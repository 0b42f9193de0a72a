"""Exhaustive backtracking oracle for (kappa, lam)-colorability on small graphs."""

from __future__ import annotations

import enum
import time
from dataclasses import dataclass
from typing import Iterator, Optional

from .coloring import Coloring, validate
from .graph import Graph

DEFAULT_NODE_LIMIT = 10**7
ENUMERATION_GUARD = 10**7


class Status(str, enum.Enum):
    COLORABLE = "COLORABLE"
    UNCOLORABLE = "UNCOLORABLE"
    UNKNOWN = "UNKNOWN"


@dataclass(frozen=True)
class SolveBudget:
    node_limit: int = DEFAULT_NODE_LIMIT
    time_limit: Optional[float] = None

    def __post_init__(self) -> None:
        if self.node_limit <= 0:
            raise ValueError("node_limit must be positive")


@dataclass(frozen=True)
class SolveOutcome:
    status: Status
    coloring: Optional[Coloring] = None
    nodes: int = 0

    @property
    def colorable(self) -> bool:
        return self.status is Status.COLORABLE


class _OutOfBudget(Exception):
    pass


class _Search:
    """Backtracking state.  Violations are monotone under extension, so a partial
    coloring is rejected as soon as the component of the newly colored vertex
    (among colored vertices) is cyclic or too wide."""

    def __init__(self, g: Graph, kappa: int, lam: int) -> None:
        if lam not in (0, 1, 2):
            raise ValueError("lam must be 0, 1 or 2")
        if kappa < 1:
            raise ValueError("kappa must be at least 1")
        self.g = g
        self.kappa = kappa
        self.lam = lam
        self.order = sorted(range(g.n), key=lambda v: (-g.degree(v), v))
        self.color = [-1] * g.n
        self.nodes = 0

    def ok(self, v: int) -> bool:
        c = self.color
        col = c[v]
        same = [w for w in self.g.adj[v] if c[w] == col]
        if not same:
            return True
        if self.lam == 0:
            return False
        if self.lam == 1:
            return len(same) == 1 and not any(
                x != v and c[x] == col for x in self.g.adj[same[0]]
            )
        # lam == 2: the merged component must be a star
        seen = {v}
        todo = [v]
        edges2 = 0
        centers = 0
        while todo:
            x = todo.pop()
            d = 0
            for y in self.g.adj[x]:
                if c[y] == col:
                    d += 1
                    if y not in seen:
                        seen.add(y)
                        todo.append(y)
            edges2 += d
            if d >= 2:
                centers += 1
                if centers > 1:
                    return False
        return edges2 // 2 == len(seen) - 1

    def run(self, symmetry: bool, budget: Optional[SolveBudget]) -> Iterator[Coloring]:
        deadline = None
        if budget is not None and budget.time_limit is not None:
            deadline = time.monotonic() + budget.time_limit
        limit = budget.node_limit if budget is not None else None
        n = self.g.n
        order = self.order
        color = self.color

        def rec(i: int, used: int) -> Iterator[Coloring]:
            if i == n:
                yield tuple(color)
                return
            v = order[i]
            top = min(self.kappa, used + 1) if symmetry else self.kappa
            for col in range(top):
                self.nodes += 1
                if limit is not None and self.nodes > limit:
                    raise _OutOfBudget
                if deadline is not None and self.nodes % 4096 == 0 and time.monotonic() > deadline:
                    raise _OutOfBudget
                color[v] = col
                if self.ok(v):
                    yield from rec(i + 1, max(used, col + 1))
                color[v] = -1

        yield from rec(0, 0)

    def _groups(self, verts: list[int]) -> list[list[int]]:
        """Split uncolored ``verts`` into groups whose colorings cannot interact.

        Two uncolored vertices interact if they are adjacent or both touch the
        same monochromatic component of the colored part.
        """
        c = self.color
        adj = self.g.adj
        parent = {v: v for v in verts}

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        def union(a: int, b: int) -> None:
            ra, rb = find(a), find(b)
            if ra != rb:
                parent[ra] = rb

        seen: set[int] = set()
        for v in verts:
            for w in adj[v]:
                if c[w] == -1:
                    union(v, w)
                elif w not in seen:
                    # collect the colored monochromatic component of w
                    comp = [w]
                    seen.add(w)
                    k = 0
                    while k < len(comp):
                        x = comp[k]
                        k += 1
                        for y in adj[x]:
                            if y not in seen and c[y] == c[w]:
                                seen.add(y)
                                comp.append(y)
                    touching = [y for x in comp for y in adj[x] if c[y] == -1]
                    for y in touching[1:]:
                        union(touching[0], y)
        groups: dict[int, list[int]] = {}
        for v in verts:
            groups.setdefault(find(v), []).append(v)
        return list(groups.values())

    def first(self, budget: Optional[SolveBudget]) -> bool:
        """Search for one coloring, solving non-interacting groups independently."""
        deadline = None
        if budget is not None and budget.time_limit is not None:
            deadline = time.monotonic() + budget.time_limit
        limit = budget.node_limit if budget is not None else None
        color = self.color

        def rec(verts: list[int], used: int) -> bool:
            # on failure every vertex of ``verts`` is left uncolored
            if not verts:
                return True
            groups = self._groups(verts)
            if len(groups) > 1:
                done: list[int] = []
                for grp in groups:
                    if not rec(grp, used):
                        for x in done:
                            color[x] = -1
                        return False
                    done += grp
                return True
            v, rest = verts[0], verts[1:]
            for col in range(min(self.kappa, used + 1)):
                self.nodes += 1
                if limit is not None and self.nodes > limit:
                    raise _OutOfBudget
                if deadline is not None and self.nodes % 4096 == 0 and time.monotonic() > deadline:
                    raise _OutOfBudget
                color[v] = col
                if self.ok(v) and rec(rest, max(used, col + 1)):
                    return True
            color[v] = -1
            return False

        return rec(list(self.order), 0)


def decide(g: Graph, kappa: int, lam: int, budget: SolveBudget = SolveBudget()) -> SolveOutcome:
    """Decide whether ``g`` has a (kappa, lam)-coloring.

    Vertices are tried by descending degree, colors ascending, and a fresh
    color is only opened as the next unused id, so the first vertex is always
    colored 0.  Uncolored parts that cannot interact are searched one at a
    time, so a dead end in one part never re-enumerates another.  Running past
    the budget yields ``UNKNOWN``.
    """
    search = _Search(g, kappa, lam)
    try:
        found = search.first(budget)
    except _OutOfBudget:
        return SolveOutcome(Status.UNKNOWN, None, search.nodes)
    if not found:
        return SolveOutcome(Status.UNCOLORABLE, None, search.nodes)
    col = tuple(search.color)
    assert validate(g, col, kappa, lam).valid
    return SolveOutcome(Status.COLORABLE, col, search.nodes)


def enumerate_colorings(g: Graph, kappa: int, lam: int) -> list[Coloring]:
    """All valid (kappa, lam)-colorings of ``g`` (no symmetry reduction), sorted."""
    if kappa**g.n > ENUMERATION_GUARD:
        raise ValueError(f"{kappa}^{g.n} colorings exceeds the enumeration guard")
    search = _Search(g, kappa, lam)
    return sorted(search.run(symmetry=False, budget=None))
