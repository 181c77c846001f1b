"""Pure-Python reference kernels.

Implicit-shift QL for symmetric tridiagonal eigenvalues (eigenvalue-only,
tql1 style) and a partial-pivoting tridiagonal LU used by inverse iteration.
The compiled extension mirrors these operation-for-operation; any change
here must be replayed there to keep the two backends in lockstep.
"""
import math

import numpy as np

BACKEND_NAME = "python"


def ql_eigenvalues(d, e, max_sweeps=50):
    """Eigenvalues of the symmetric tridiagonal (diag d, off-diag e[:-1]).

    d is overwritten with the (unsorted) eigenvalues; e is scratch whose
    contents are unspecified afterwards and whose last slot must be 0 on
    entry.  Returns -1 on success, else the index that failed to settle
    within max_sweeps sweeps.
    """
    n = len(d)
    if n == 1:
        return -1
    dd = [float(v) for v in d]
    ee = [float(v) for v in e]
    for low in range(n):
        sweeps = 0
        while True:
            m = low
            while m < n - 1:
                s = abs(dd[m]) + abs(dd[m + 1])
                if abs(ee[m]) <= 2.3e-16 * s or ee[m] == 0.0:
                    break
                m += 1
            if m == low:
                break
            sweeps += 1
            if sweeps > max_sweeps:
                return low
            g = (dd[low + 1] - dd[low]) / (2.0 * ee[low])
            r = math.sqrt(g * g + 1.0)
            sgn = r if g >= 0.0 else -r
            g = dd[m] - dd[low] + ee[low] / (g + sgn)
            s = 1.0
            c = 1.0
            p = 0.0
            broke = False
            for i in range(m - 1, low - 1, -1):
                f = s * ee[i]
                b = c * ee[i]
                r = math.sqrt(f * f + g * g)
                ee[i + 1] = r
                if r == 0.0:
                    # rotation annihilated early; drop the shift and retry
                    dd[i + 1] -= p
                    ee[m] = 0.0
                    broke = True
                    break
                s = f / r
                c = g / r
                g = dd[i + 1] - p
                r = (dd[i] - g) * s + 2.0 * c * b
                p = s * r
                dd[i + 1] = g + p
                g = c * r - b
            if not broke:
                dd[low] -= p
                ee[low] = g
                ee[m] = 0.0
    d[:] = dd
    return -1


def lu_factor(d, e, shift):
    """LU of (T - shift*I) with partial pivoting; T symmetric tridiagonal
    (diag d length n, off-diag e length n-1).  Returns (l, u0, u1, u2, piv)
    with three upper bands (pivoting widens the bandwidth by one)."""
    n = len(d)
    u0 = [float(v) - shift for v in d]
    u1 = [float(v) for v in e] + [0.0]
    u2 = [0.0] * n
    low = [0.0] * n
    piv = np.zeros(n, dtype=np.uint8)
    bsub = [float(v) for v in e]
    for i in range(n - 1):
        if abs(bsub[i]) > abs(u0[i]):
            piv[i] = 1
            u0[i], bsub[i] = bsub[i], u0[i]
            u1[i], u0[i + 1] = u0[i + 1], u1[i]
            if i < n - 2:
                u2[i], u1[i + 1] = u1[i + 1], u2[i]
        if u0[i] == 0.0:
            u0[i] = 1e-300
        mlt = bsub[i] / u0[i]
        low[i] = mlt
        u0[i + 1] -= mlt * u1[i]
        if i < n - 2:
            u1[i + 1] -= mlt * u2[i]
    if u0[n - 1] == 0.0:
        u0[n - 1] = 1e-300
    return (
        np.asarray(low, dtype=float),
        np.asarray(u0, dtype=float),
        np.asarray(u1, dtype=float),
        np.asarray(u2, dtype=float),
        piv,
    )


def lu_solve(low, u0, u1, u2, piv, b):
    """Solve with factors from lu_factor; returns a fresh array."""
    n = len(u0)
    ll = low.tolist()
    uu0 = u0.tolist()
    uu1 = u1.tolist()
    uu2 = u2.tolist()
    pv = piv.tolist()
    y = [float(v) for v in b]
    for i in range(n - 1):
        if pv[i]:
            y[i], y[i + 1] = y[i + 1], y[i]
        y[i + 1] -= ll[i] * y[i]
    x = [0.0] * n
    x[n - 1] = y[n - 1] / uu0[n - 1]
    if n >= 2:
        x[n - 2] = (y[n - 2] - uu1[n - 2] * x[n - 1]) / uu0[n - 2]
    for i in range(n - 3, -1, -1):
        x[i] = (y[i] - uu1[i] * x[i + 1] - uu2[i] * x[i + 2]) / uu0[i]
    return np.asarray(x, dtype=float)
