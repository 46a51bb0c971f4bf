"""Benchmark the modular rank kernel: compiled extension vs pure Python.

Both kernels compute the rank of an integer matrix modulo a 31-bit prime.
The compiled one is what `fast_rank` picks up when the extension built;
the pure-Python fallback has the same signature.

Usage:
    python3 benchmarks/bench_rank.py [--sizes 60,120,200] [--repeats 3]
"""

import argparse
import random
import time

from gradedhecke import linalg
from gradedhecke import _rankref

try:
    from gradedhecke import _rankcore
except ImportError:
    _rankcore = None

PRIME = 2147483647


def random_matrix(rng, n, m, density=0.4, bound=10**6):
    return [
        [rng.randint(-bound, bound) if rng.random() < density else 0 for _ in range(m)]
        for _ in range(n)
    ]


def bench(kernel, rows, repeats):
    best = None
    result = None
    for _ in range(repeats):
        start = time.perf_counter()
        result = kernel(rows, PRIME)
        elapsed = time.perf_counter() - start
        best = elapsed if best is None else min(best, elapsed)
    return result, best


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--sizes", default="60,120,200")
    parser.add_argument("--repeats", type=int, default=3)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    rng = random.Random(args.seed)
    sizes = [int(s) for s in args.sizes.split(",")]
    print(f"active kernel: {linalg.KERNEL}")
    print(f"{'size':>10} {'python':>12} {'cython':>12} {'speedup':>9}")
    for n in sizes:
        rows = random_matrix(rng, n, n + n // 4)
        rank_py, t_py = bench(_rankref.rank_mod_p, rows, args.repeats)
        if _rankcore is None:
            print(f"{n:>10} {t_py:>11.4f}s {'n/a':>12} {'n/a':>9}")
            continue
        rank_cy, t_cy = bench(_rankcore.rank_mod_p, rows, args.repeats)
        assert rank_py == rank_cy, (rank_py, rank_cy)
        print(
            f"{n:>10} {t_py:>11.4f}s {t_cy:>11.4f}s {t_py / t_cy:>8.1f}x"
        )


if __name__ == "__main__":
    main()
