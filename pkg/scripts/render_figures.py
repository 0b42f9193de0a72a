"""Write DOT renderings of the named instances into a directory.

Usage: python scripts/render_figures.py [out_dir]
"""

import sys
from pathlib import Path

from starcolor.exact import decide
from starcolor.instances import k6, lemma1_graph, random_outerpath
from starcolor.io import export_dot
from starcolor.outerpath import color_outerpath
from starcolor.reductions import CnfFormula, assignment_to_coloring, naesat_to_2star


def main(out: str = "figures") -> None:
    d = Path(out)
    d.mkdir(exist_ok=True)
    (d / "lemma1.dot").write_text(export_dot(lemma1_graph(), decide(lemma1_graph(), 3, 2).coloring, "lemma1"))
    (d / "k6.dot").write_text(export_dot(k6(), decide(k6(), 3, 2).coloring, "k6"))
    g = random_outerpath(24, seed=1)
    (d / "outerpath.dot").write_text(export_dot(g, color_outerpath(g), "outerpath"))
    art = naesat_to_2star(CnfFormula(3, ((1, 2, 3), (-1, -2, -3))))
    c = assignment_to_coloring(art, {1: True, 2: False, 3: False})
    (d / "naesat.dot").write_text(export_dot(art.graph, c, "naesat"))
    print(f"wrote {len(list(d.glob('*.dot')))} files to {d}/")


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else "figures")
