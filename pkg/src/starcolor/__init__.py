"""Defective colorings whose monochromatic components are stars."""

from .coloring import Coloring, Role, Verdict, is_star_coloring, role_of, validate
from .exact import SolveBudget, SolveOutcome, Status, decide, enumerate_colorings
from .graph import Graph, build_graph, is_outerplanar, recognize_outerplanar
from .outerpath import color_outerpath
from .outerplanar import decide_outerplanar_2star

__all__ = [
    "Coloring", "Graph", "Role", "SolveBudget", "SolveOutcome", "Status", "Verdict",
    "build_graph", "color_outerpath", "decide", "decide_outerplanar_2star",
    "enumerate_colorings", "is_outerplanar", "is_star_coloring", "recognize_outerplanar",
    "role_of", "validate",
]

__version__ = "0.1.0"
