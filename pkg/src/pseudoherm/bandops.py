"""Banded-matrix helpers backing the operator-product (SUSY) checks.

Storage convention: diags[k][i] = M[i, i+k], with every diagonal kept as a
full length-n array whose out-of-range slots are exactly 0.0 — products and
shifts then run on plain slices with no index bookkeeping.
"""
from __future__ import annotations

import math

import numpy as np

from .errors import ShapeError

__all__ = ["BandMatrix"]


def _shift_rows(arr: np.ndarray, p: int) -> np.ndarray:
    # out[i] = arr[i + p], zero-filled
    n = arr.shape[0]
    out = np.zeros(n)
    if p >= 0:
        if p < n:
            out[: n - p] = arr[p:]
    else:
        out[-p:] = arr[: n + p]
    return out


class BandMatrix:
    __slots__ = ("n", "diags")

    def __init__(self, n: int, diags=None):
        if n < 1:
            raise ShapeError("BandMatrix needs n >= 1")
        self.n = n
        self.diags: dict = {}
        if diags:
            for k, values in diags.items():
                self.set_diag(k, values)

    def set_diag(self, k: int, values) -> None:
        k = int(k)
        if abs(k) >= self.n:
            raise ShapeError(f"diagonal offset {k} out of range for n={self.n}")
        values = np.asarray(values, dtype=float)
        full = np.zeros(self.n)
        if values.shape == (self.n,):
            full[:] = values
        elif values.shape == (self.n - abs(k),):
            if k >= 0:
                full[: self.n - k] = values
            else:
                full[-k:] = values
        else:
            raise ShapeError(
                f"diagonal {k}: expected length {self.n} or {self.n - abs(k)}, got {values.shape}"
            )
        # out-of-range slots must stay zero for the slice algebra to be valid
        if k > 0:
            full[self.n - k :] = 0.0
        elif k < 0:
            full[: -k] = 0.0
        self.diags[k] = full

    @classmethod
    def from_tridiagonal(cls, sub, main, sup) -> "BandMatrix":
        n = len(main)
        return cls(n, {-1: np.asarray(sub, float), 0: np.asarray(main, float), 1: np.asarray(sup, float)})

    def matvec(self, v) -> np.ndarray:
        v = np.asarray(v, dtype=float)
        if v.shape != (self.n,):
            raise ShapeError(f"matvec: expected vector of length {self.n}")
        y = np.zeros(self.n)
        for k, dk in self.diags.items():
            y += dk * _shift_rows(v, k)
        return y

    def __matmul__(self, other: "BandMatrix") -> "BandMatrix":
        if not isinstance(other, BandMatrix) or other.n != self.n:
            raise ShapeError("matmul: operands must be BandMatrix of equal size")
        out = BandMatrix(self.n)
        acc: dict = {}
        for p, ap in self.diags.items():
            for q, bq in other.diags.items():
                r = p + q
                if abs(r) >= self.n:
                    continue
                term = ap * _shift_rows(bq, p)
                if r in acc:
                    acc[r] += term
                else:
                    acc[r] = term
        out.diags = acc
        return out

    def __sub__(self, other: "BandMatrix") -> "BandMatrix":
        if not isinstance(other, BandMatrix) or other.n != self.n:
            raise ShapeError("sub: operands must be BandMatrix of equal size")
        out = BandMatrix(self.n)
        keys = set(self.diags) | set(other.diags)
        for k in keys:
            a = self.diags.get(k)
            b = other.diags.get(k)
            if a is None:
                out.diags[k] = -b
            elif b is None:
                out.diags[k] = a.copy()
            else:
                out.diags[k] = a - b
        return out

    def frobenius(self) -> float:
        total = 0.0
        for dk in self.diags.values():
            total += float(np.dot(dk, dk))
        return math.sqrt(total)

    def to_dense(self) -> np.ndarray:
        m = np.zeros((self.n, self.n))
        for k, dk in self.diags.items():
            for i in range(max(0, -k), min(self.n, self.n - k)):
                m[i, i + k] = dk[i]
        return m
