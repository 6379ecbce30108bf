#!/usr/bin/env python3
"""Benchmark the compiled kernels against the pure-Python fallback.

Microbenchmarks load both backends in one process; the end-to-end pipeline
comparison re-runs this interpreter with PATCHWORK_PURE_PYTHON=1.

Usage: python3 benchmarks/bench_kernels.py [--quick]
"""

import argparse
import os
import subprocess
import sys
import time

from tropical_patchwork import _kernels_py as py_impl
from tropical_patchwork.generators import SplitMix64

try:
    from tropical_patchwork import _kernels as ext_impl
except ImportError:
    ext_impl = None


def bench(label, fn, repeats):
    best = min(_timed(fn) for _ in range(repeats))
    print(f"  {label:<24} {best * 1e3:9.3f} ms", flush=True)
    return best


def _timed(fn):
    t0 = time.perf_counter()
    fn()
    return time.perf_counter() - t0


def make_gf2_case(nrows, ncols, seed):
    rng = SplitMix64(seed)
    rows = []
    for _ in range(nrows):
        acc = 0
        for w in range(0, ncols, 48):
            acc |= rng.bits(48) << w
        rows.append(acc & ((1 << ncols) - 1))
    return rows, ncols


def make_hull_case(k, m, seed):
    rng = SplitMix64(seed)
    flat = [rng.bits(4) for _ in range(k * m)]
    heights = [rng.bits(24) for _ in range(k)]
    w = tuple(rng.bits(20) - (1 << 19) for _ in range(m))
    return flat, k, m, heights, w, 1 + rng.bits(8), rng.bits(20)


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--quick", action="store_true")
    args = parser.parse_args()
    repeats = 3 if args.quick else 7

    impls = [("python", py_impl)]
    if ext_impl is not None:
        impls.append(("cython", ext_impl))
    else:
        print("compiled kernels not built; benchmarking the fallback only")

    print("gf2 rank, 1500 x 2000 dense bitrows")
    rows, ncols = make_gf2_case(1500, 2000, 1)
    times = {}
    for name, impl in impls:
        times[name] = bench(name, lambda impl=impl: impl.gf2_rank_bitrows(rows, ncols),
                            repeats)
    _speedup(times)

    print("slack vectors, 2000 x (k=84, m=3)")
    case = make_hull_case(84, 3, 2)
    for name, impl in impls:
        def run(impl=impl):
            flat, k, m, heights, w, delta, b = case
            for _ in range(2000):
                impl.slack_vector(flat, k, m, heights, w, delta, b)
        times[name] = bench(name, run, repeats)
    _speedup(times)

    print("end-to-end betti, degree-6 surface", flush=True)
    script = ("import time; t0=time.perf_counter(); "
              "from fractions import Fraction; "
              "import tropical_patchwork as tp; "
              "from tropical_patchwork.generators import random_full_triangulation, random_signs; "
              "from tropical_patchwork.homology import analyze; "
              "p=random_full_triangulation(4,6,61,Fraction(1,2)); "
              "r=analyze(p, random_signs(4,6,62)); "
              "print(f'  {tp.kernel_backend:<24} {time.perf_counter()-t0:9.3f} s  "
              "betti={r.betti.b}')")
    for env_val in ("0", "1"):
        env = dict(os.environ, PATCHWORK_PURE_PYTHON=env_val)
        subprocess.run([sys.executable, "-c", script], env=env, check=True)


def _speedup(times):
    if "cython" in times and times["cython"] > 0:
        print(f"  speedup: {times['python'] / times['cython']:.1f}x")


if __name__ == "__main__":
    main()
