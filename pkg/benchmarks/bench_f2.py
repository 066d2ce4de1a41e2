#!/usr/bin/env python3
"""Benchmark the GF(2) kernels: compiled Cython module vs pure Python.

Usage: python benchmarks/bench_f2.py [--full]

The --full flag adds the 2^21-element decomposability scan on 7 letters,
which takes a while in pure Python.
"""

import argparse
import random
import time

from stableforms.f2 import _fallback

try:
    from stableforms.f2 import _kernels
except ImportError:
    _kernels = None


def timed(fn, *args):
    start = time.perf_counter()
    out = fn(*args)
    return out, time.perf_counter() - start


def bench(name, workloads):
    print(f"\n== {name}")
    header = f"{'workload':<28} {'python':>10} {'compiled':>10} {'speedup':>8}"
    print(header)
    print("-" * len(header))
    for label, fn_name, args in workloads:
        py_out, py_t = timed(getattr(_fallback, fn_name), *args)
        if _kernels is None:
            print(f"{label:<28} {py_t:>9.3f}s {'n/a':>10} {'':>8}")
            continue
        cy_out, cy_t = timed(getattr(_kernels, fn_name), *args)
        assert py_out == cy_out, f"implementations disagree on {label}"
        speedup = py_t / cy_t if cy_t else float("inf")
        print(f"{label:<28} {py_t:>9.3f}s {cy_t:>9.3f}s {speedup:>7.1f}x")


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--full", action="store_true")
    args = parser.parse_args()

    if _kernels is None:
        print("compiled kernels not built; timing pure Python only")

    rng = random.Random(0)
    batch = [
        [rng.randrange(1, 1 << 12) for _ in range(6)] for _ in range(20000)
    ]

    def rref_batch(impl):
        acc = 0
        for rows in batch:
            acc ^= hash(impl.rref(rows))
        return acc

    print("== rref canonicalization, 20000 random 6x12 matrices")
    py_out, py_t = timed(rref_batch, _fallback)
    if _kernels is not None:
        cy_out, cy_t = timed(rref_batch, _kernels)
        assert py_out == cy_out
        print(f"python {py_t:.3f}s   compiled {cy_t:.3f}s   {py_t / cy_t:.1f}x")
    else:
        print(f"python {py_t:.3f}s")

    workloads = [
        ("enumerate Gr(8,3): 97k", "enumerate_rref", (8, 3)),
        ("enumerate Gr(9,3): 788k", "enumerate_rref", (9, 3)),
        ("scan classes, 6 letters", "count_decomposable_nonzero", (6,)),
    ]
    if args.full:
        workloads.append(("scan classes, 7 letters", "count_decomposable_nonzero", (7,)))
    bench("subspace enumeration and rank scans", workloads)


if __name__ == "__main__":
    main()
