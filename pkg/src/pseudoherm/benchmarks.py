"""Timing comparison of the compiled and pure-Python QL kernels.

Run as `python -m pseudoherm.benchmarks [sizes...]`.  Builds the default
oscillator Hamiltonian at each size and times eigenvalue-only QL on both
backends.  The compiled kernel is what keeps large solves inside interactive
budgets; the fallback exists for environments without a C toolchain.
"""
from __future__ import annotations

import sys
import time

import numpy as np

from . import models
from ._kernels import BACKEND
from ._kernels import _ql_py as py_kernel
from .grid import Grid, build_hermitian

try:
    from ._kernels import _ql as c_kernel
except ImportError:
    c_kernel = None

DEFAULT_SIZES = (501, 1001, 2001)


def _problem(n: int):
    spec = models.swanson()
    t = build_hermitian(spec, Grid(-15.0, 15.0, n))
    d = np.asarray(t.diagonal, dtype=float)
    e = np.zeros(n)
    e[: n - 1] = t.off_diagonal
    return d, e


def _time_backend(kernel, d, e, repeats: int) -> float:
    best = float("inf")
    for _ in range(repeats):
        dd = d.copy()
        ee = e.copy()
        t0 = time.perf_counter()
        status = kernel.ql_eigenvalues(dd, ee)
        dt = time.perf_counter() - t0
        if status != -1:
            raise RuntimeError(f"QL failed to converge at index {status}")
        best = min(best, dt)
    return best


def main(argv=None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    sizes = [int(a) for a in argv] if argv else list(DEFAULT_SIZES)
    print(f"active backend: {BACKEND}")
    if c_kernel is None:
        print("compiled kernel unavailable; timing the pure-Python kernel only")
    header = f"{'N':>8}  {'python (s)':>12}"
    if c_kernel is not None:
        header += f"  {'compiled (s)':>12}  {'speedup':>8}"
    print(header)
    for n in sizes:
        d, e = _problem(n)
        repeats = 3 if n <= 1200 else 1
        t_py = _time_backend(py_kernel, d, e, repeats)
        line = f"{n:>8}  {t_py:>12.4f}"
        if c_kernel is not None:
            t_c = _time_backend(c_kernel, d, e, max(repeats, 3))
            line += f"  {t_c:>12.4f}  {t_py / t_c:>8.1f}"
        print(line)
    return 0


if __name__ == "__main__":
    sys.exit(main())
