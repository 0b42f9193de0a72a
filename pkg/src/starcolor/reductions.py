"""Hardness reductions as graph builders with certificate maps.

* Not-All-Equal 3-SAT -> two-color star coloring, maximum degree 5.
* 3-coloring -> three-color star coloring, maximum degree 9 (a K6 hangs off
  every vertex).
* The 7-vertex triangle-free clause gadget.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Optional, Sequence

from .coloring import Coloring, validate
from .graph import Graph, build_graph

WHITE, GRAY = 0, 1


class DimacsError(ValueError):
    pass


@dataclass(frozen=True)
class CnfFormula:
    variable_count: int
    clauses: tuple[tuple[int, int, int], ...]

    def __post_init__(self) -> None:
        for clause in self.clauses:
            if len(clause) != 3:
                raise ValueError(f"clause {clause} does not have exactly three literals")
            for lit in clause:
                if lit == 0 or abs(lit) > self.variable_count:
                    raise ValueError(f"literal {lit} out of range 1..{self.variable_count}")

    def occurrences(self, var: int) -> list[int]:
        """Signed occurrences of ``var``, clause by clause."""
        return [lit for clause in self.clauses for lit in clause if abs(lit) == var]

    def nae_satisfied(self, assignment: Mapping[int, bool]) -> bool:
        for clause in self.clauses:
            values = {assignment[abs(l)] == (l > 0) for l in clause}
            if len(values) != 2:
                return False
        return True

    def nae_solutions(self) -> list[dict[int, bool]]:
        out = []
        for bits in itertools.product((False, True), repeat=self.variable_count):
            a = {i + 1: b for i, b in enumerate(bits)}
            if self.nae_satisfied(a):
                out.append(a)
        return out

    def to_dimacs(self) -> str:
        lines = [f"p cnf {self.variable_count} {len(self.clauses)}"]
        lines += [" ".join(map(str, c)) + " 0" for c in self.clauses]
        return "\n".join(lines) + "\n"


def parse_dimacs_cnf(text: str) -> CnfFormula:
    """Parse a DIMACS CNF in which every clause has exactly three literals.

    Clauses may span lines; repeated literals are kept.
    """
    header: Optional[tuple[int, int]] = None
    tokens: list[int] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c") or line.startswith("%"):
            continue
        if line.startswith("p"):
            parts = line.split()
            if header is not None:
                raise DimacsError(f"line {lineno}: duplicate problem line")
            if len(parts) != 4 or parts[1] != "cnf":
                raise DimacsError(f"line {lineno}: malformed problem line {line!r}")
            try:
                header = (int(parts[2]), int(parts[3]))
            except ValueError:
                raise DimacsError(f"line {lineno}: malformed problem line {line!r}") from None
            continue
        if header is None:
            raise DimacsError(f"line {lineno}: clause before problem line")
        try:
            tokens += [int(t) for t in line.split()]
        except ValueError:
            raise DimacsError(f"line {lineno}: non-integer token in {line!r}") from None
    if header is None:
        raise DimacsError("missing problem line")
    n, m = header
    clauses = []
    current: list[int] = []
    for t in tokens:
        if t == 0:
            if len(current) != 3:
                raise DimacsError(f"clause {current} has width {len(current)}, expected 3")
            clauses.append(tuple(current))
            current = []
            continue
        if abs(t) > n:
            raise DimacsError(f"literal {t} exceeds variable count {n}")
        current.append(t)
    if current:
        raise DimacsError("last clause is not terminated by 0")
    if len(clauses) != m:
        raise DimacsError(f"header announces {m} clauses, found {len(clauses)}")
    return CnfFormula(n, tuple(clauses))


# ---------------------------------------------------------------------------
# NAESAT gadgets

# variable gadget vertex offsets
U1, U2, V1, V2, V3, V4 = range(6)


def variable_gadget() -> Graph:
    """u1-u2 edge, path v1-v2-v3-v4, both u's joined to every v (ids: u1, u2, v1..v4 = 0..5)."""
    edges = [(U1, U2), (V1, V2), (V2, V3), (V3, V4)]
    edges += [(u, v) for u in (U1, U2) for v in (V1, V2, V3, V4)]
    return build_graph(6, edges)


def _chain_edges(k: int, offset: int = 0) -> tuple[list[tuple[int, int]], list[int]]:
    base = variable_gadget()
    edges = []
    spine = []
    for i in range(k):
        o = offset + 6 * i
        edges += [(a + o, b + o) for a, b in base.edges]
        spine += [o + V1, o + V2, o + V3, o + V4]
        if i > 0:
            edges.append((o - 6 + V4, o + V1))
    return edges, spine


def build_chain(k: int) -> tuple[Graph, list[int]]:
    """``k`` linked variable gadgets and their spine path v_1^1..v_4^k."""
    if k < 1:
        raise ValueError("chain length must be positive")
    edges, spine = _chain_edges(k)
    return build_graph(6 * k, edges), spine


@dataclass(frozen=True)
class VariableAnchors:
    spine: tuple[int, ...]
    odd: tuple[int, ...]  # 1st, 3rd, ... spine vertices
    even: tuple[int, ...]


@dataclass(frozen=True)
class ReductionArtifact:
    graph: Graph
    formula: Optional[CnfFormula] = None
    variable_anchor_map: dict[int, VariableAnchors] = field(default_factory=dict)
    clause_vertex_map: dict[int, tuple[int, int, int]] = field(default_factory=dict)
    # clause vertex -> chain vertex it is joined to
    literal_links: dict[int, int] = field(default_factory=dict)
    attachment_map: dict[int, int] = field(default_factory=dict)
    # attachment vertex -> the five other vertices of its K6
    k6_copies: dict[int, tuple[int, ...]] = field(default_factory=dict)


def chain_length(occurrences: Sequence[int]) -> int:
    """Variable-chain length for a variable with the given signed occurrences.

    Starts from ceil((n_i - 2) / 2), at least 1, and grows only when one
    parity class would run out of degree<5 slots (a chain of length k offers
    2k + 1 slots per parity).
    """
    n_i = len(occurrences)
    k = max(1, math.ceil((n_i - 2) / 2))
    need = max(sum(1 for l in occurrences if l > 0), sum(1 for l in occurrences if l < 0))
    while 2 * k + 1 < need:
        k += 1
    return k


def naesat_to_2star(phi: CnfFormula) -> ReductionArtifact:
    """Graph that is two-color star colorable iff ``phi`` is NAE-satisfiable.

    Positive literals attach to the even-positioned spine vertices of their
    variable's chain, negative literals to the odd-positioned ones; the first
    vertex of the right parity with degree below 5 is used.
    """
    edges: list[tuple[int, int]] = []
    anchors: dict[int, VariableAnchors] = {}
    offset = 0
    for var in range(1, phi.variable_count + 1):
        k = chain_length(phi.occurrences(var))
        chain, spine = _chain_edges(k, offset)
        edges += chain
        anchors[var] = VariableAnchors(tuple(spine), tuple(spine[0::2]), tuple(spine[1::2]))
        offset += 6 * k
    degree: dict[int, int] = {}
    for a, b in edges:
        degree[a] = degree.get(a, 0) + 1
        degree[b] = degree.get(b, 0) + 1
    clause_map: dict[int, tuple[int, int, int]] = {}
    links: dict[int, int] = {}
    for ci, clause in enumerate(phi.clauses):
        tri = (offset, offset + 1, offset + 2)
        offset += 3
        clause_map[ci] = tri
        edges += [(tri[0], tri[1]), (tri[1], tri[2]), (tri[0], tri[2])]
        for x, lit in zip(tri, clause):
            side = anchors[abs(lit)].even if lit > 0 else anchors[abs(lit)].odd
            slot = next((w for w in side if degree[w] < 5), None)
            if slot is None:
                raise AssertionError(f"no free attachment vertex for literal {lit}")
            edges.append((x, slot))
            degree[slot] += 1
            links[x] = slot
    g = build_graph(offset, edges)
    if g.max_degree() > 5:
        raise AssertionError("reduction exceeded maximum degree 5")
    for tri in clause_map.values():
        assert all(g.degree(x) == 3 for x in tri)
    return ReductionArtifact(g, phi, anchors, clause_map, links)


def assignment_to_coloring(art: ReductionArtifact, assignment: Mapping[int, bool]) -> Coloring:
    """Coloring of the NAESAT graph induced by a truth assignment.

    True variables get a white even set; a clause vertex is gray exactly when
    its literal is true.  Valid iff the assignment is NAE-satisfying.
    """
    assert art.formula is not None
    color = [WHITE] * art.graph.n
    for var, anc in art.variable_anchor_map.items():
        even = WHITE if assignment[var] else GRAY
        for v in anc.even:
            color[v] = even
        for v in anc.odd:
            color[v] = 1 - even
    for ci, clause in enumerate(art.formula.clauses):
        for x, lit in zip(art.clause_vertex_map[ci], clause):
            color[x] = GRAY if assignment[abs(lit)] == (lit > 0) else WHITE
    # u1 takes the color of v1 in its copy, u2 the other one
    for anc in art.variable_anchor_map.values():
        for first in anc.spine[0::4]:
            u1, u2 = first - V1 + U1, first - V1 + U2
            color[u1] = color[first]
            color[u2] = 1 - color[first]
    return tuple(color)


def coloring_to_assignment(art: ReductionArtifact, c: Sequence[int]) -> dict[int, bool]:
    """Read a truth assignment off a valid coloring: x is true iff its even set is white."""
    if not validate(art.graph, c, 2, 2).valid:
        raise ValueError("not a valid two-color star coloring of the reduction graph")
    out = {}
    for var, anc in art.variable_anchor_map.items():
        colors = {c[v] for v in anc.even}
        assert len(colors) == 1, "even spine set is not monochromatic"
        out[var] = colors.pop() == WHITE
    return out


# ---------------------------------------------------------------------------
# 3-coloring -> (3,2)


def threecolor_to_3star2(g: Graph) -> ReductionArtifact:
    """Attach a K6 at every vertex; vertex v of ``g`` keeps id v as its attachment vertex."""
    if g.max_degree() > 4:
        raise ValueError("source graph must have maximum degree at most 4")
    edges = list(g.edges)
    copies = {}
    nxt = g.n
    for v in range(g.n):
        others = tuple(range(nxt, nxt + 5))
        nxt += 5
        clique = (v,) + others
        edges += [(a, b) for a, b in itertools.combinations(clique, 2)]
        copies[v] = others
    h = build_graph(nxt, edges)
    if h.max_degree() > 9:
        raise AssertionError("reduction exceeded maximum degree 9")
    return ReductionArtifact(h, attachment_map={v: v for v in range(g.n)}, k6_copies=copies)


def threecoloring_to_coloring(art: ReductionArtifact, c: Sequence[int]) -> Coloring:
    """Extend a proper 3-coloring of the source graph to every K6 copy (pairs of equal colors)."""
    color = [0] * art.graph.n
    for v, a in art.attachment_map.items():
        x = c[v]
        o = art.k6_copies[a]
        color[a] = x
        color[o[0]] = x
        color[o[1]] = color[o[2]] = (x + 1) % 3
        color[o[3]] = color[o[4]] = (x + 2) % 3
    return tuple(color)


def coloring_to_threecoloring(art: ReductionArtifact, c: Sequence[int]) -> Coloring:
    if not validate(art.graph, c, 3, 2).valid:
        raise ValueError("not a valid three-color star coloring")
    return tuple(c[art.attachment_map[v]] for v in sorted(art.attachment_map))


# ---------------------------------------------------------------------------
# triangle-free clause gadget

CLAUSE_GADGET_LABELS = ("u11", "u12", "u13", "u21", "u22", "u23", "u")


def trianglefree_clause_gadget() -> Graph:
    """2x3 grid u11 u12 u13 / u21 u22 u23 plus u joined to u11 and u23 (ids in label order)."""
    u11, u12, u13, u21, u22, u23, u = range(7)
    edges = [
        (u11, u12), (u12, u13), (u21, u22), (u22, u23),
        (u11, u21), (u12, u22), (u13, u23),
        (u, u11), (u, u23),
    ]
    return build_graph(7, edges)


def has_triangle(g: Graph) -> bool:
    return any(g.adj[a] & g.adj[b] for a, b in g.edges)


def format_certificate_map(art: ReductionArtifact) -> str:
    """Text listing of gadget -> vertex ids, one gadget per line."""
    lines = []
    for var, anc in sorted(art.variable_anchor_map.items()):
        lines.append(f"var {var} spine " + " ".join(map(str, anc.spine)))
        lines.append(f"var {var} odd " + " ".join(map(str, anc.odd)))
        lines.append(f"var {var} even " + " ".join(map(str, anc.even)))
    for ci, tri in sorted(art.clause_vertex_map.items()):
        lines.append(f"clause {ci} " + " ".join(map(str, tri)))
    for x, w in sorted(art.literal_links.items()):
        lines.append(f"link {x} {w}")
    for v, a in sorted(art.attachment_map.items()):
        lines.append(f"attach {v} {a} " + " ".join(map(str, art.k6_copies[a])))
    return "\n".join(lines) + "\n"


def _ints(words: Iterable[str]) -> tuple[int, ...]:
    return tuple(int(w) for w in words)


def parse_certificate_map(text: str) -> dict[str, dict]:
    """Inverse of :func:`format_certificate_map` (as plain dictionaries)."""
    out: dict[str, dict] = {"var": {}, "clause": {}, "link": {}, "attach": {}}
    for line in text.splitlines():
        parts = line.split()
        if not parts:
            continue
        kind = parts[0]
        if kind == "var":
            out["var"].setdefault(int(parts[1]), {})[parts[2]] = _ints(parts[3:])
        elif kind == "clause":
            out["clause"][int(parts[1])] = _ints(parts[2:])
        elif kind == "link":
            out["link"][int(parts[1])] = int(parts[2])
        elif kind == "attach":
            out["attach"][int(parts[1])] = _ints(parts[2:])
        else:
            raise ValueError(f"unknown certificate line {line!r}")
    return out
