#!/usr/bin/env python3
"""Benchmark the compiled search kernels against the pure-Python fallback.

Covers the two hot loops: exact cycle search (longest cycle and fixed
lengths) and the coloring sweep filter.  Both backends compute identical
results; the table reports wall times and the speedup.

Usage: python benchmarks/bench_kernels.py [--quick]
"""

from __future__ import annotations

import argparse
import random
import sys
from itertools import combinations
from time import perf_counter

from cyclestab import _pure
from cyclestab.graph import build_graph
from cyclestab.ramsey import cycle_edge_masks

try:
    from cyclestab import _core
except ImportError:
    _core = None


def _random_graphs(count: int, lo: int, hi: int, seed: int):
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        n = rng.randint(lo, hi)
        p = 0.3 + 0.6 * rng.random()
        edges = [(u, v) for u, v in combinations(range(n), 2) if rng.random() < p]
        out.append(build_graph(n, edges))
    return out


def bench_longest(backend, graphs):
    started = perf_counter()
    acc = 0
    for g in graphs:
        acc += backend.find_longest_cycle(g.adj, g.n)[0]
    return perf_counter() - started, acc


def bench_fixed(backend, graphs):
    started = perf_counter()
    acc = 0
    for g in graphs:
        for t in range(3, g.n + 1):
            if backend.find_cycle_of_length(g.adj, g.n, t) is not None:
                acc += 1
    return perf_counter() - started, acc


def bench_sweep(backend, p, n, span):
    masks = cycle_edge_masks(p, n)
    m = p * (p - 1) // 2
    started = perf_counter()
    mono, monofree = backend.sweep_filter_range(masks, m, 0, span, True)
    return perf_counter() - started, (mono, len(monofree))


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--quick", action="store_true",
                        help="smaller workloads for a fast sanity run")
    args = parser.parse_args()

    if _core is None:
        print("compiled extension not built; run "
              "'python setup.py build_ext --inplace' first", file=sys.stderr)
        return 1

    small = _random_graphs(40 if args.quick else 150, 8, 13, seed=42)
    large = _random_graphs(4 if args.quick else 12, 16, 20, seed=43)
    sweep_span = 1 << (16 if args.quick else 22)

    cases = [
        ("longest cycle, 8-13 vertices", bench_longest, (small,)),
        ("longest cycle, 16-20 vertices", bench_longest, (large,)),
        ("fixed-length sweep, 8-13 vertices", bench_fixed, (small,)),
        ("coloring filter, order 6 full", bench_sweep, (6, 4, 1 << 14)),
        ("coloring filter, order 8 slice", bench_sweep, (8, 5, sweep_span)),
    ]

    print(f"{'case':38} {'pure':>10} {'compiled':>10} {'speedup':>9}")
    for name, fn, extra in cases:
        t_pure, r_pure = fn(_pure, *extra)
        t_fast, r_fast = fn(_core, *extra)
        assert r_pure == r_fast, f"backend mismatch in {name}: {r_pure} vs {r_fast}"
        print(f"{name:38} {t_pure:9.3f}s {t_fast:9.3f}s {t_pure / t_fast:8.1f}x")
    print("\nresults identical across backends for every case")
    return 0


if __name__ == "__main__":
    sys.exit(main())
