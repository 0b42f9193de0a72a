"""Text formats: edge lists, colorings, DIMACS CNF and DOT."""

from __future__ import annotations

from pathlib import Path
from typing import Optional, Sequence

from .coloring import Coloring
from .graph import Graph, build_graph
from .reductions import CnfFormula, parse_dimacs_cnf


class FormatError(ValueError):
    pass


def _content_lines(text: str) -> list[tuple[int, list[str]]]:
    out = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            out.append((lineno, line.split()))
    return out


def _ints(lineno: int, words: list[str], count: int) -> list[int]:
    if len(words) != count:
        raise FormatError(f"line {lineno}: expected {count} integers, got {' '.join(words)!r}")
    try:
        return [int(w) for w in words]
    except ValueError:
        raise FormatError(f"line {lineno}: non-integer token in {' '.join(words)!r}") from None


def parse_edge_list(text: str) -> Graph:
    """First line ``n m``, then ``m`` lines ``u v`` (0-based); ``#`` starts a comment."""
    lines = _content_lines(text)
    if not lines:
        raise FormatError("empty graph file")
    n, m = _ints(*lines[0], 2)
    if n < 0 or m < 0:
        raise FormatError("negative vertex or edge count")
    if len(lines) - 1 != m:
        raise FormatError(f"header announces {m} edges, found {len(lines) - 1}")
    edges = [tuple(_ints(no, w, 2)) for no, w in lines[1:]]
    try:
        g = build_graph(n, edges)
    except ValueError as exc:
        raise FormatError(str(exc)) from None
    if g.m != m:
        raise FormatError("duplicate edges in edge list")
    return g


def format_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"] + [f"{u} {v}" for u, v in g.sorted_edges()]
    return "\n".join(lines) + "\n"


def parse_coloring(text: str, n: Optional[int] = None) -> Coloring:
    """Lines ``vertex color``, each vertex exactly once."""
    found: dict[int, int] = {}
    for lineno, words in _content_lines(text):
        v, col = _ints(lineno, words, 2)
        if v in found:
            raise FormatError(f"line {lineno}: vertex {v} colored twice")
        if col < 0:
            raise FormatError(f"line {lineno}: negative color")
        found[v] = col
    size = len(found) if n is None else n
    if sorted(found) != list(range(size)):
        raise FormatError(f"coloring must assign every vertex 0..{size - 1} exactly once")
    return tuple(found[v] for v in range(size))


def format_coloring(c: Sequence[int]) -> str:
    return "".join(f"{v} {col}\n" for v, col in enumerate(c))


def read_graph(path: str | Path) -> Graph:
    return parse_edge_list(Path(path).read_text())


def write_graph(path: str | Path, g: Graph) -> None:
    Path(path).write_text(format_edge_list(g))


def read_coloring(path: str | Path, n: Optional[int] = None) -> Coloring:
    return parse_coloring(Path(path).read_text(), n)


def write_coloring(path: str | Path, c: Sequence[int]) -> None:
    Path(path).write_text(format_coloring(c))


def read_cnf(path: str | Path) -> CnfFormula:
    return parse_dimacs_cnf(Path(path).read_text())


PALETTE = ("white", "gray", "lightblue", "orange", "palegreen", "pink", "gold", "violet")


def export_dot(g: Graph, c: Optional[Sequence[int]] = None, name: str = "G") -> str:
    """Undirected DOT text; edges between same-colored vertices are bold."""
    lines = [f"graph {name} {{", "  node [style=filled, fillcolor=white];"]
    for v in range(g.n):
        if c is None:
            lines.append(f"  {v};")
        else:
            fill = PALETTE[c[v] % len(PALETTE)]
            lines.append(f'  {v} [fillcolor={fill}, label="{v}:{c[v]}"];')
    for u, v in g.sorted_edges():
        bold = c is not None and c[u] == c[v]
        lines.append(f"  {u} -- {v}" + (" [style=bold, penwidth=3];" if bold else ";"))
    lines.append("}")
    return "\n".join(lines) + "\n"
