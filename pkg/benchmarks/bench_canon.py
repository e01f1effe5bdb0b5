"""Benchmark the two canonical-labeling backends on a realistic workload.

The workload is every insertion term of the two pre-Lie products of the
3- and 5-spoke wheels (the same graphs the bracket computations grind
through), plus the splitting terms of a haired theta graph.  Run with

    python3 benchmarks/bench_canon.py
"""

import time
from itertools import product

from grt2.graphs._canon_py import canonical_form as python_form
from grt2.graphs.build import theta_graph, wheel
from grt2.graphs.ops import insert_at, split_terms

try:
    from grt2.graphs._canon_cy import canonical_form as compiled_form
except ImportError:
    compiled_form = None


def workload():
    graphs = []
    for g1, g2 in ((wheel(3), wheel(5)), (wheel(5), wheel(3))):
        for j in range(g1.n):
            loose = g1.incident_edges(j)
            for assignment in product(range(g2.n), repeat=len(loose)):
                graphs.append(insert_at(g1, j, g2, assignment))
    seed = theta_graph(0, (3, 2, 1))
    for v in range(seed.n):
        graphs.extend(split_terms(seed, v))
    return graphs


def timed(form, graphs, repeats=3):
    best = float("inf")
    result = None
    for _ in range(repeats):
        t0 = time.perf_counter()
        result = [form(g.n, g.ext, g.edges) for g in graphs]
        best = min(best, time.perf_counter() - t0)
    return best, result


def main():
    graphs = workload()
    print("workload: %d graphs (up to %d vertices)"
          % (len(graphs), max(g.n for g in graphs)))
    t_py, res_py = timed(python_form, graphs)
    print("python   backend: %.3fs  (%.1f us/graph)"
          % (t_py, 1e6 * t_py / len(graphs)))
    if compiled_form is None:
        print("compiled backend: not built")
        return
    t_cy, res_cy = timed(compiled_form, graphs)
    print("compiled backend: %.3fs  (%.1f us/graph)"
          % (t_cy, 1e6 * t_cy / len(graphs)))
    print("speedup: %.1fx" % (t_py / t_cy))
    assert res_py == res_cy, "backends disagree"
    print("backends agree on every graph")


if __name__ == "__main__":
    main()
