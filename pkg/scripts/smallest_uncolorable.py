"""Search fan-of-fans graphs for the fewest vertices without a two-color star coloring.

Usage: python scripts/smallest_uncolorable.py [max_n]
"""

import itertools
import sys

from starcolor.instances import fan_of_fans
from starcolor.outerplanar import decide_outerplanar_2star


def main(max_n: int = 16) -> None:
    best = {}
    for top in range(3, max_n):
        for k in (1, 2, 3):
            for hubs in itertools.combinations(range(1, top + 1), k):
                for sizes in itertools.product(range(1, 6), repeat=k):
                    n = 1 + top + sum(sizes)
                    if n > max_n:
                        continue
                    g = fan_of_fans(top, list(zip(hubs, sizes)))
                    if decide_outerplanar_2star(g) is None:
                        best.setdefault(n, []).append((top, hubs, sizes))
    if not best:
        print(f"every fan-of-fans graph with at most {max_n} vertices is colorable")
        return
    n = min(best)
    print(f"smallest uncolorable: {n} vertices, {len(best[n])} shapes")
    for top, hubs, sizes in best[n][:10]:
        print(f"  top path {top}, hubs {hubs}, fan sizes {sizes}")


if __name__ == "__main__":
    main(int(sys.argv[1]) if len(sys.argv) > 1 else 16)
