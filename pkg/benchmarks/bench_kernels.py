"""Time the compiled kernels against the pure-Python fallback.

    python benchmarks/bench_kernels.py [--repeat 5] [--seed 1]

Each kernel gets a fresh matching memo per run so neither backend benefits
from work cached on the graph. Results from the two backends are compared
before timing.
"""

from __future__ import annotations

import argparse
import random
import sys
import time

from evenorient import _pykernels, catalog
from evenorient.graph import Graph
from evenorient.matching import _edge_table, enumerate_perfect_matchings, mate_array

try:
    from evenorient import _ckernels
except ImportError:
    _ckernels = None


def random_cubic(n: int, rng: random.Random) -> Graph:
    while True:
        points = [v for v in range(1, n + 1) for _ in range(3)]
        rng.shuffle(points)
        pairs = [tuple(sorted(points[i:i + 2])) for i in range(0, len(points), 2)]
        if any(a == b for a, b in pairs) or len(set(pairs)) != len(pairs):
            continue
        g = Graph.from_edges(pairs)
        if g.is_connected():
            return g


def workloads(seed: int):
    rng = random.Random(seed)
    graphs = [("petersen", catalog.entry("petersen").graph),
              ("w_star", catalog.entry("w_star").graph)]
    graphs += [(f"cubic{n}", random_cubic(n, rng)) for n in (20, 32, 40)]
    graphs += [(f"K{n}", Graph.from_edges([(a, b) for a in range(n) for b in range(a + 1, n)]))
               for n in (8, 10)]
    for name, g in graphs:
        adj, n = g.adj_masks, g.n
        table = _edge_table(g)
        mate = mate_array(g, enumerate_perfect_matchings(g)[0])
        full = (1 << n) - 1
        yield name, "perfect_matchings", lambda k, adj=adj, t=table, n=n: k.perfect_matchings(adj, t, n, {})
        yield name, "alternating_cycles", lambda k, adj=adj, m=mate, n=n: k.alternating_cycles(adj, m, n, 1 << 22)
        yield name, "odd_components", lambda k, adj=adj, full=full: [
            k.odd_components(adj, full & ~(1 << v)) for v in range(len(adj))]


def best_of(fn, repeat: int) -> float:
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times)


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--seed", type=int, default=1)
    args = ap.parse_args(argv)
    if _ckernels is None:
        print("compiled kernels not built; run `pip install -e . --no-build-isolation` first")
        return 1
    print(f"{'graph':<10} {'kernel':<20} {'python ms':>10} {'compiled ms':>12} {'speedup':>8}")
    for name, kernel, run in workloads(args.seed):
        py_out, c_out = run(_pykernels), run(_ckernels)
        if sorted(map(tuple, py_out)) != sorted(map(tuple, c_out)):
            print(f"backends disagree on {name}/{kernel}", file=sys.stderr)
            return 1
        py = best_of(lambda: run(_pykernels), args.repeat)
        c = best_of(lambda: run(_ckernels), args.repeat)
        print(f"{name:<10} {kernel:<20} {py * 1e3:>10.2f} {c * 1e3:>12.2f} {py / max(c, 1e-9):>7.1f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
