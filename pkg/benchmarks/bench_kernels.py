"""Benchmark the compiled kernels against the NumPy fallback.

Runs identical power-iteration and Jacobi workloads through
``specgap._kernels`` (if built) and ``specgap._kernels_py`` and reports
wall-clock times and the speedup.  Usage:

    python benchmarks/bench_kernels.py [--sizes 8,16,32,64] [--repeat 5]
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from specgap import _kernels_py
from specgap.families import parse_family_spec, generate
from specgap.spectral import default_start, signless_laplacian

try:
    from specgap import _kernels
except ImportError:
    _kernels = None


def _workload(n: int) -> np.ndarray:
    g = generate(parse_family_spec(f"path:{n}"))
    return signless_laplacian(g)


def _time_power(kernels, mat: np.ndarray, repeat: int) -> float:
    start = default_start(mat)
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        value, _vec, residual, iters, ok = kernels.power_iteration(
            mat, start, 1e-10, 200_000
        )
        best = min(best, time.perf_counter() - t0)
        assert ok, f"power iteration failed: residual={residual}, iters={iters}"
    return best


def _time_jacobi(kernels, mat: np.ndarray, repeat: int) -> float:
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        _values, _vectors, _sweeps, off = kernels.jacobi_eigh(mat, 1e-12, 60)
        best = min(best, time.perf_counter() - t0)
        assert off <= 1e-12
    return best


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--sizes", default="8,16,32,64")
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args()
    sizes = [int(s) for s in args.sizes.split(",")]

    if _kernels is None:
        print("compiled extension not available; benchmarking fallback only")
    header = f"{'kernel':<16}{'n':>6}{'python':>12}{'compiled':>12}{'speedup':>10}"
    print(header)
    print("-" * len(header))
    for n in sizes:
        mat = _workload(n)
        for name, timer in (("power_iteration", _time_power), ("jacobi_eigh", _time_jacobi)):
            t_py = timer(_kernels_py, mat, args.repeat)
            if _kernels is not None:
                t_c = timer(_kernels, mat, args.repeat)
                print(
                    f"{name:<16}{n:>6}{t_py * 1e3:>10.3f}ms{t_c * 1e3:>10.3f}ms"
                    f"{t_py / t_c:>9.1f}x"
                )
            else:
                print(f"{name:<16}{n:>6}{t_py * 1e3:>10.3f}ms{'-':>12}{'-':>10}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
