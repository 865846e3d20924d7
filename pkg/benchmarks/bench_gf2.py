"""Benchmark the GF(2) elimination kernels: compiled extension vs pure Python.

Times rank and inverse on random dense matrices across sizes, then a macro
workload (Gauss-circuit pipeline over random 12-letter words) on whichever
backend the package selected at import.

Usage: python benchmarks/bench_gf2.py [--repeats N]
"""

import argparse
import random
import time

from gausscircuits import _gf2py
from gausscircuits import gf2
from gausscircuits.circuits import gauss_exists, gauss_word
from gausscircuits.graphs import random_word

try:
    from gausscircuits import _gf2fast
except ImportError:
    _gf2fast = None

SIZES = (8, 16, 32, 64, 128, 256)


def bench_kernel(kernel, rows_by_size, repeats):
    out = {}
    for n, cases in rows_by_size.items():
        t0 = time.perf_counter()
        for _ in range(repeats):
            for rows in cases:
                kernel.rank(rows, n, n)
                kernel.inverse(rows, n)
        out[n] = (time.perf_counter() - t0) / (repeats * len(cases))
    return out


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeats", type=int, default=5)
    args = ap.parse_args()

    rng = random.Random(2024)
    rows_by_size = {
        n: [tuple(rng.getrandbits(n) for _ in range(n)) for _ in range(10)] for n in SIZES
    }

    print(f"selected backend: {gf2.BACKEND}")
    pure = bench_kernel(_gf2py, rows_by_size, args.repeats)
    fast = bench_kernel(_gf2fast, rows_by_size, args.repeats) if _gf2fast else None

    header = f"{'n':>5}  {'pure (us)':>12}"
    if fast:
        header += f"  {'compiled (us)':>14}  {'speedup':>8}"
    print(header)
    for n in SIZES:
        line = f"{n:>5}  {pure[n] * 1e6:>12.1f}"
        if fast:
            line += f"  {fast[n] * 1e6:>14.1f}  {pure[n] / fast[n]:>7.1f}x"
        print(line)

    t0 = time.perf_counter()
    hits = 0
    for i in range(2000):
        w = random_word(12, 4_000_000 + i, mode="any")
        if gauss_exists(w):
            hits += gauss_word(w).consistent
    dt = time.perf_counter() - t0
    print(f"macro: 2000 x (existence + circuit) on 12-letter words: "
          f"{dt:.2f}s on the {gf2.BACKEND} backend ({hits} circuits)")


if __name__ == "__main__":
    main()
