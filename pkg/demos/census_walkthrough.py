"""Walk the connected cubic bipartite census and count the balanced graphs.

The interesting pattern: balanced cubic graphs only show up when the vertex
count is a multiple of six, and there are very few of them.
"""

from __future__ import annotations

import argparse

from balgraph import (
    count_balanced_cubic,
    from_graph6,
    girth,
    is_vertex_transitive,
    twin_classes,
)


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument(
        "--max-vertices",
        type=int,
        default=16,
        help="largest (even) vertex count to census (default 16)",
    )
    args = parser.parse_args()

    print("=" * 70)
    print("Census of connected cubic bipartite graphs")
    print("=" * 70)
    print(f"{'vertices':>10} {'classes':>10} {'balanced':>10}")
    reports = []
    for d in range(6, args.max_vertices + 1, 2):
        report = count_balanced_cubic(d)
        reports.append(report)
        print(f"{d:>10} {report.total_cubic_bipartite:>10} {report.balanced_count:>10}")

    print()
    print("=" * 70)
    print("The balanced graphs, up close")
    print("=" * 70)
    for report in reports:
        for code in report.witnesses:
            g = from_graph6(code)
            twins = twin_classes(g)
            sizes = sorted((len(c) for c in twins.classes), reverse=True)
            print(f"graph6 {code}")
            print(f"  vertices          : {g.n}")
            print(f"  girth             : {girth(g)}")
            print(f"  twin class sizes  : {sizes}")
            print(f"  vertex-transitive : {is_vertex_transitive(g)}")
    print()
    print("Every balanced graph above has a twin class of size at least two,")
    print("so deleting one twin gives a smaller balanced graph; K_{3,3} (the")
    print("six-vertex entry) is the only vertex-transitive one.")


if __name__ == "__main__":
    main()
