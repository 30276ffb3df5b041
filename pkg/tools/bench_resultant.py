#!/usr/bin/env python3
"""Benchmark the mod-p resultant kernel: numba JIT vs the pure-Python path.

The pure-Python path is what you get with ``JACPAIRS_PURE_PYTHON=1`` (or with
numba absent); this script times both implementations directly on the same
inputs so no re-exec is needed.

Usage: python3 tools/bench_resultant.py [--degree N] [--trials K]
"""
import argparse
import random
import time

import numpy as np

from jacpairs.kernels import (
    _resultant_mod_p_py,
    _resultant_mod_p_jit,
    kernel_backend,
)

P = (1 << 30) - 35  # 30-bit prime, same size class as the CRT prime stream


def _random_poly(rng, degree):
    coeffs = [rng.randrange(P) for _ in range(degree)] + [rng.randrange(1, P)]
    return np.array(coeffs, dtype=np.int64)


def _time(fn, pairs):
    best = float("inf")
    for _ in range(3):
        start = time.perf_counter()
        acc = 0
        for a, b in pairs:
            acc ^= fn(a, b, P)
        best = min(best, time.perf_counter() - start)
    return best, acc


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--degree", type=int, default=200)
    ap.add_argument("--trials", type=int, default=20)
    args = ap.parse_args()

    rng = random.Random(12345)
    pairs = [
        (_random_poly(rng, args.degree), _random_poly(rng, args.degree))
        for _ in range(args.trials)
    ]

    jit_available = _resultant_mod_p_jit is not None
    print(f"active backend: {kernel_backend()}")
    print(f"degree={args.degree} trials={args.trials} p={P}")

    py_time, py_acc = _time(_resultant_mod_p_py, pairs)
    print(f"pure python : {py_time:8.3f} s  ({py_time / args.trials * 1e3:.1f} ms/resultant)")

    if jit_available:
        _resultant_mod_p_jit(pairs[0][0], pairs[0][1], P)  # compile outside timing
        jit_time, jit_acc = _time(_resultant_mod_p_jit, pairs)
        print(f"numba jit   : {jit_time:8.3f} s  ({jit_time / args.trials * 1e3:.1f} ms/resultant)")
        assert py_acc == jit_acc, "backends disagree"
        print(f"speedup     : {py_time / jit_time:.1f}x")
    else:
        print("numba jit   : unavailable (set up numba or unset JACPAIRS_PURE_PYTHON)")


if __name__ == "__main__":
    main()
