"""Timing of the numba and numpy exponential-sum kernels.

    python benchmarks/bench_kernels.py [--points N] [--freqs K] [--repeat R]
"""
from __future__ import annotations

import argparse
import time

import numpy as np

from weylcub import _kernels as k


def best_of(func, repeat):
    times = []
    for _ in range(repeat):
        t = time.perf_counter()
        func()
        times.append(time.perf_counter() - t)
    return min(times)


def main():
    p = argparse.ArgumentParser()
    p.add_argument("--points", type=int, default=200_000)
    p.add_argument("--freqs", type=int, default=64)
    p.add_argument("--repeat", type=int, default=5)
    args = p.parse_args()

    rng = np.random.default_rng(1)
    pts = rng.random((args.points, 2))
    freqs = rng.integers(-30, 31, size=(args.freqs, 2))
    coefs = rng.standard_normal(args.freqs) + 1j * rng.standard_normal(args.freqs)

    print(f"points={args.points} freqs={args.freqs} repeat={args.repeat}")
    ref = k.expsum_numpy(pts, freqs, coefs)
    t_np = best_of(lambda: k.expsum_numpy(pts, freqs, coefs), args.repeat)
    print(f"numpy   expsum  {t_np * 1e3:9.2f} ms")
    if k.HAVE_NUMBA:
        got = k.expsum_numba(pts, freqs, coefs)  # compile
        t_nb = best_of(lambda: k.expsum_numba(pts, freqs, coefs), args.repeat)
        print(f"numba   expsum  {t_nb * 1e3:9.2f} ms  speedup {t_np / t_nb:5.1f}x  max diff {np.abs(got - ref).max():.1e}")
    else:
        print("numba not installed")

    w = rng.standard_normal(args.points)
    t_np = best_of(lambda: k.expsum_adjoint_numpy(pts, freqs, w), args.repeat)
    print(f"numpy   adjoint {t_np * 1e3:9.2f} ms")
    if k.HAVE_NUMBA:
        k.expsum_adjoint_numba(pts, freqs, w)
        t_nb = best_of(lambda: k.expsum_adjoint_numba(pts, freqs, w), args.repeat)
        print(f"numba   adjoint {t_nb * 1e3:9.2f} ms  speedup {t_np / t_nb:5.1f}x")


if __name__ == "__main__":
    main()
