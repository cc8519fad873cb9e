#!/usr/bin/env python3
"""Benchmark the compiled kernels against the pure-Python fallback.

Covers the three hot loops (blossom matching, rotation-extension long paths,
exact-coloring backtracking) plus the blossom-vs-DP equivalence sweep, and
asserts along the way that both backends return identical results.

    python benchmarks/bench_kernels.py [--quick]
"""

from __future__ import annotations

import argparse
import random
import sys
import time

from eqarbor._kernel import backends
from eqarbor.oracle import pair_count


def random_rows(rng: random.Random, n: int, p: float) -> list[int]:
    rows = [0] * n
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < p:
                rows[u] |= 1 << v
                rows[v] |= 1 << u
    return rows


def timed(fn, *args, repeat: int = 1):
    best = None
    out = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn(*args)
        dt = time.perf_counter() - t0
        best = dt if best is None else min(best, dt)
    return out, best


def row(name: str, t_py: float, t_c: float | None) -> None:
    if t_c is None:
        print(f"{name:<44} {t_py * 1e3:>10.1f} ms {'-':>12}")
    else:
        speedup = t_py / t_c if t_c > 0 else float("inf")
        print(f"{name:<44} {t_py * 1e3:>10.1f} ms {t_c * 1e3:>9.1f} ms {speedup:>7.1f}x")


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--quick", action="store_true", help="smaller sizes, faster run")
    args = parser.parse_args()

    impls = backends()
    py = impls["py"]
    c = impls.get("c")
    print(f"backends available: {sorted(impls)}")
    if c is None:
        print("compiled kernel not built; timing the pure backend only")
    header = f"{'benchmark':<44} {'pure':>13} {'compiled':>12} {'gain':>7}"
    print(header)
    print("-" * len(header))

    rng = random.Random(12345)

    sizes = [200, 600] if args.quick else [200, 600, 1500]
    for n in sizes:
        for p in (0.08, 0.5):
            rows = random_rows(rng, n, p)
            got_py, t_py = timed(py.max_matching, n, rows)
            if c is not None:
                got_c, t_c = timed(c.max_matching, n, rows)
                assert got_py == got_c
            else:
                t_c = None
            row(f"max_matching n={n} p={p}", t_py, t_c)

    for n in sizes:
        rows = random_rows(rng, n, 0.5)
        dmin = min(r.bit_count() for r in rows)
        target = min(2 * dmin, n - 1)
        got_py, t_py = timed(py.long_path_seq, n, rows, target)
        if c is not None:
            got_c, t_c = timed(c.long_path_seq, n, rows, target)
            assert got_py == got_c
        else:
            t_c = None
        row(f"long_path_seq n={n} target={target}", t_py, t_c)

    # exact-coloring decisions over a batch of small graphs
    batch = [(9, random_rows(rng, 9, rng.uniform(0.3, 0.8))) for _ in range(40 if args.quick else 150)]

    def aeq_batch(impl):
        out = []
        for n, rows in batch:
            for k in range(1, n + 1):
                got = impl.a_eq_exists(n, rows, k)
                if got is not None:
                    out.append(k)
                    break
        return out

    got_py, t_py = timed(aeq_batch, py)
    if c is not None:
        got_c, t_c = timed(aeq_batch, c)
        assert got_py == got_c
    else:
        t_c = None
    row(f"a_eq_exists batch ({len(batch)} graphs, n=9)", t_py, t_c)

    # blossom-vs-DP equivalence sweep over every 6-vertex graph
    n = 6
    full = 1 << pair_count(n)
    got_py, t_py = timed(py.match_equiv_range, n, 0, full)
    if c is not None:
        got_c, t_c = timed(c.match_equiv_range, n, 0, full)
        assert got_py == got_c == []
    else:
        t_c = None
    row(f"match_equiv_range all n={n} graphs", t_py, t_c)

    return 0


if __name__ == "__main__":
    sys.exit(main())
