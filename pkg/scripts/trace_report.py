"""Tabulate state-trace mismatches of the outerpath machine over all maximal outerpaths.

Usage: python scripts/trace_report.py [max_n]
"""

import collections
import itertools
import sys

from starcolor.coloring import validate
from starcolor.instances import outerpath_from_turns
from starcolor.outerpath import run_machine, spine_decompose, trace_violations


def main(max_n: int = 13) -> None:
    print(f"{'n':>3} {'graphs':>7} {'invalid':>7} {'steps':>7} {'mismatch':>8}  kinds")
    for n in range(5, max_n + 1):
        graphs = invalid = steps = 0
        kinds = collections.Counter()
        for turns in itertools.product((False, True), repeat=n - 3):
            g = outerpath_from_turns(list(turns))
            if g.max_degree() < 4:
                continue
            colors, trace = run_machine(g, spine_decompose(g))
            graphs += 1
            invalid += not validate(g, [colors[v] for v in range(g.n)], 2, 2).valid
            steps += len(trace)
            for t in trace_violations(trace):
                last = "last" if t is trace[-1] else "inner"
                kinds[(t.state.name, tuple(s.name for s in t.holding), t.fan, last)] += 1
        total = sum(kinds.values())
        print(f"{n:>3} {graphs:>7} {invalid:>7} {steps:>7} {total:>8}  {dict(kinds)}")


if __name__ == "__main__":
    main(int(sys.argv[1]) if len(sys.argv) > 1 else 13)
