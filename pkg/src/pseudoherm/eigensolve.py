"""Eigensolver for the Hermitian equivalents plus Dyson-map transport.

The non-Hermitian operators are never diagonalized directly: the symmetric
tridiagonal h is solved (implicit-shift QL for eigenvalues, shifted inverse
iteration for eigenvectors), and eigenvectors of H are obtained by dividing
out the similarity weight.  Everything is deterministic — fixed shift
strategy, fixed polynomial start vector — so identical inputs give
bit-identical outputs under a given kernel backend.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import _kernels as kernels
from .errors import ConvergenceError, DomainError, LengthError, WeightOverflowError
from .grid import Grid, SymTridiag, weighted_inner_product

__all__ = ["EigenSet", "tridiag_eigen", "transport_eigenvectors"]

_SIGN_FLOOR = 1e-6  # fraction of the max entry below which tail values are
# rounding noise; the sign convention keys off the first entry above it


@dataclass(frozen=True)
class EigenSet:
    """Ascending eigenvalues with unit-norm eigenvectors (rows) and the
    2-norm residuals ||T v - lam v|| of each pair."""

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray
    residuals: np.ndarray


def _inverse_iteration(d, e, lam):
    # All five solves always run: the 2-norm residual bottoms out after one
    # or two, but each further solve shrinks the contamination of the tail
    # entries by ~|lam_err/gap|, and transport divides those tails by an
    # exponentially small weight.  The last iterate is kept unless a rare
    # degeneracy made it worse than the best one seen.
    n = d.shape[0]
    factors = kernels.lu_factor(d, e, lam)
    t = np.arange(n) / max(n - 1, 1)
    v = 1.0 + 0.5 * t + 0.25 * t * t
    v /= np.linalg.norm(v)
    best_v = v
    best_res = np.inf
    last_v, last_res = None, np.inf
    for _ in range(5):
        v = kernels.lu_solve(*factors, v)
        nv = float(np.linalg.norm(v))
        if not np.isfinite(nv):
            # a solve that hit the tiny-pivot guard returns entries near
            # 1e300 whose squared norm overflows; rescale and retry the norm
            mx = float(np.max(np.abs(v)))
            if mx == 0.0 or not np.isfinite(mx):
                break
            v = v / mx
            nv = float(np.linalg.norm(v))
        if nv == 0.0 or not np.isfinite(nv):
            break
        v = v / nv
        r = d * v - lam * v
        r[:-1] += e[: n - 1] * v[1:]
        r[1:] += e[: n - 1] * v[:-1]
        res = float(np.linalg.norm(r))
        last_v, last_res = v, res
        if res < best_res:
            best_v, best_res = v, res
    if last_v is not None and last_res <= 2.0 * best_res:
        return last_v, last_res
    return best_v, best_res


def _orient(v: np.ndarray) -> None:
    mx = float(np.max(np.abs(v)))
    idx = np.nonzero(np.abs(v) > _SIGN_FLOOR * mx)[0]
    if idx.size and v[idx[0]] < 0:
        np.negative(v, out=v)


def tridiag_eigen(t: SymTridiag, k: int) -> EigenSet:
    """Lowest k eigenpairs of the symmetric tridiagonal t.

    QL gives the full (unsorted) eigenvalue set; each requested eigenvector
    comes from at most five inverse-iteration steps on the pivoted LU of
    (t - lam I), followed by one Gram-Schmidt pass in ascending order and a
    sign fix (first significant component positive).
    """
    n = t.n
    if not isinstance(k, (int, np.integer)) or not 1 <= k <= n:
        raise DomainError(f"k must satisfy 1 <= k <= {n}, got {k!r}")
    d = t.diagonal.astype(float, copy=True)
    e_ext = np.zeros(n)
    e_ext[: n - 1] = t.off_diagonal
    status = kernels.ql_eigenvalues(d, e_ext)
    if status != -1:
        raise ConvergenceError(
            f"eigenvalue index {status} did not settle within the sweep budget"
        )
    d.sort()
    lams = d[:k].copy()

    d0 = t.diagonal.astype(float, copy=True)
    e0 = t.off_diagonal.astype(float, copy=True)
    vecs = np.empty((k, n))
    for i, lam in enumerate(lams):
        v, _ = _inverse_iteration(d0, e0, float(lam))
        vecs[i] = v
    for i in range(k):
        for j in range(i):
            vecs[i] -= np.dot(vecs[j], vecs[i]) * vecs[j]
        nv = float(np.linalg.norm(vecs[i]))
        if nv == 0.0 or not np.isfinite(nv):
            raise ConvergenceError(f"inverse iteration degenerated at level {i}")
        vecs[i] /= nv
        _orient(vecs[i])
    residuals = np.empty(k)
    for i in range(k):
        residuals[i] = float(np.linalg.norm(t.matvec(vecs[i]) - lams[i] * vecs[i]))
    return EigenSet(lams, vecs, residuals)


def transport_eigenvectors(es: EigenSet, weights, grid: Grid) -> np.ndarray:
    """Map eigenvectors of h to eigenvectors of H: psi_H = psi_h / g,
    renormalized under the metric (theta = g^2) trapezoid inner product."""
    weights = np.asarray(weights, dtype=float)
    n = es.eigenvectors.shape[1]
    if weights.shape != (n,):
        raise LengthError(f"weights have shape {weights.shape}, expected ({n},)")
    if grid.n_points != n:
        raise LengthError("grid does not match eigenvector length")
    if not np.all(weights > 0):
        raise DomainError("weights must be strictly positive")
    out = es.eigenvectors / weights[None, :]
    if not np.all(np.isfinite(out)):
        raise WeightOverflowError("transport produced non-finite entries; shrink the domain")
    theta = weights * weights
    for i in range(out.shape[0]):
        nrm2 = weighted_inner_product(out[i], out[i], theta, grid)
        if not np.isfinite(nrm2) or nrm2 <= 0.0:
            raise WeightOverflowError("metric normalization failed during transport")
        out[i] /= np.sqrt(nrm2)
    return out
