#!/usr/bin/env python3
"""Benchmark the compiled kernel against the pure-Python fallback.

Times the three hot paths (associative-table backtracking, order-constrained
backtracking, canonical keys) at a chosen order on both backends and prints
a comparison table.

Usage:
    python benchmarks/bench_kernel.py [--order N] [--repeat K]
"""

import argparse
import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from osgkit import _kernel_py  # noqa: E402
from osgkit.enumeration import enumerate_partial_orders  # noqa: E402

try:
    from osgkit import _kernel
except ImportError:
    _kernel = None


def best_of(repeat, fn, *args):
    times = []
    result = None
    for _ in range(repeat):
        start = time.perf_counter()
        result = fn(*args)
        times.append(time.perf_counter() - start)
    return min(times), result


def bench(backend, n, repeat):
    rows = []

    elapsed, tables = best_of(repeat, backend.enumerate_assoc_tables, n)
    rows.append((f"assoc tables n={n} ({len(tables)} found)", elapsed))

    posets = enumerate_partial_orders(n)

    def all_orders():
        total = 0
        for rel in posets:
            leq = bytes(1 if rel[i][j] else 0 for i in range(n) for j in range(n))
            total += len(backend.enumerate_valid_tables(n, leq))
        return total

    elapsed, count = best_of(repeat, all_orders)
    rows.append((f"valid tables over {len(posets)} posets ({count} found)", elapsed))

    discrete = bytes(1 if i == j else 0 for i in range(n) for j in range(n))

    def canonical_all():
        return [backend.canonical_key(t, discrete, n) for t in tables]

    elapsed, _ = best_of(repeat, canonical_all)
    rows.append((f"canonical keys for {len(tables)} tables", elapsed))

    return rows


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--order", type=int, default=3, choices=(1, 2, 3, 4))
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    backends = [("python", _kernel_py)]
    if _kernel is not None:
        backends.insert(0, ("c", _kernel))
    else:
        print("compiled kernel not built; timing the fallback only")

    results = {name: bench(mod, args.order, args.repeat) for name, mod in backends}

    labels = [label for label, _ in results[backends[0][0]]]
    width = max(len(label) for label in labels) + 2
    header = f"{'benchmark':<{width}}" + "".join(f"{name:>12}" for name, _ in backends)
    if len(backends) == 2:
        header += f"{'speedup':>10}"
    print(header)
    for i, label in enumerate(labels):
        line = f"{label:<{width}}"
        timings = [results[name][i][1] for name, _ in backends]
        for t in timings:
            line += f"{t * 1000:>10.2f}ms"
        if len(timings) == 2 and timings[0] > 0:
            line += f"{timings[1] / timings[0]:>9.1f}x"
        print(line)


if __name__ == "__main__":
    main()
