"""Normal-ordered polynomials in bosonic ladder operators.

A polynomial is stored as a map (j, k) -> coefficient for the monomial
(a^dag)^j a^k with [a, a^dag] = 1 and hbar = 1.  Products are rewritten to
normal order through the binomial-commutator identity

    a^k (a^dag)^j = sum_i i! C(k,i) C(j,i) (a^dag)^(j-i) a^(k-i),

so the representation stays canonical: equal operators have equal term maps
(zero coefficients are pruned).  Total monomial degree is capped at 8;
products that could exceed the cap raise instead of truncating silently.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field

from .errors import ConsistencyError, DomainError, ShapeError

__all__ = [
    "MAX_DEGREE",
    "LadderPoly",
    "QuadraticXP",
    "SwansonParams",
    "normal_product",
    "pt_transform",
    "adjoint",
    "from_xp_scheme_one",
    "from_xp_scheme_two",
    "extract_swanson",
]

MAX_DEGREE = 8

# extraction and equality comparisons happen at this scale
_EXTRACT_TOL = 1e-10


def _validated_terms(raw) -> dict:
    terms = {}
    for key, coeff in raw.items():
        j, k = key
        if j < 0 or k < 0 or j != int(j) or k != int(k):
            raise DomainError(f"monomial powers must be non-negative integers, got {key}")
        if j + k > MAX_DEGREE:
            raise DomainError(
                f"monomial (a^dag)^{j} a^{k} exceeds the tracked degree cap {MAX_DEGREE}"
            )
        c = complex(coeff)
        if c != 0:
            terms[(int(j), int(k))] = c
    return terms


@dataclass(frozen=True)
class LadderPoly:
    """Normal-ordered ladder polynomial; immutable value object."""

    terms: dict = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "terms", _validated_terms(self.terms))

    # -- constructors -------------------------------------------------
    @classmethod
    def zero(cls) -> "LadderPoly":
        return cls({})

    @classmethod
    def constant(cls, c) -> "LadderPoly":
        return cls({(0, 0): c})

    @classmethod
    def lowering(cls) -> "LadderPoly":
        return cls({(0, 1): 1.0})

    @classmethod
    def raising(cls) -> "LadderPoly":
        return cls({(1, 0): 1.0})

    # -- ring operations ----------------------------------------------
    def __add__(self, other: "LadderPoly") -> "LadderPoly":
        out = dict(self.terms)
        for key, c in other.terms.items():
            out[key] = out.get(key, 0.0) + c
        return LadderPoly(out)

    def __sub__(self, other: "LadderPoly") -> "LadderPoly":
        out = dict(self.terms)
        for key, c in other.terms.items():
            out[key] = out.get(key, 0.0) - c
        return LadderPoly(out)

    def __neg__(self) -> "LadderPoly":
        return LadderPoly({key: -c for key, c in self.terms.items()})

    def scale(self, c) -> "LadderPoly":
        return LadderPoly({key: complex(c) * v for key, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, LadderPoly):
            return normal_product(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def __eq__(self, other) -> bool:
        return isinstance(other, LadderPoly) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    # -- queries --------------------------------------------------------
    def degree(self) -> int:
        return max((j + k for j, k in self.terms), default=0)

    def coefficient(self, j: int, k: int) -> complex:
        return self.terms.get((j, k), 0.0 + 0.0j)

    def isclose(self, other: "LadderPoly", tol: float = _EXTRACT_TOL) -> bool:
        keys = set(self.terms) | set(other.terms)
        return all(abs(self.coefficient(*k) - other.coefficient(*k)) <= tol for k in keys)

    def adjoint(self) -> "LadderPoly":
        return LadderPoly({(k, j): c.conjugate() for (j, k), c in self.terms.items()})

    def pt_image(self) -> "LadderPoly":
        # parity sends a -> -a, a^dag -> -a^dag; time reversal conjugates scalars
        return LadderPoly(
            {(j, k): c.conjugate() * (-1.0) ** (j + k) for (j, k), c in self.terms.items()}
        )

    def is_hermitian(self, tol: float = _EXTRACT_TOL) -> bool:
        return self.isclose(self.adjoint(), tol)

    def is_pt_symmetric(self, tol: float = _EXTRACT_TOL) -> bool:
        return self.isclose(self.pt_image(), tol)

    def __repr__(self):
        if not self.terms:
            return "LadderPoly(0)"
        bits = [
            f"({c:.6g})*(ad^{j} a^{k})"
            for (j, k), c in sorted(self.terms.items(), key=lambda t: (t[0][0] + t[0][1], t[0]))
        ]
        return "LadderPoly(" + " + ".join(bits) + ")"


def normal_product(p: LadderPoly, q: LadderPoly) -> LadderPoly:
    """Product p*q rewritten to normal order."""
    out: dict = {}
    for (j1, k1), c1 in p.terms.items():
        for (j2, k2), c2 in q.terms.items():
            if j1 + k1 + j2 + k2 > MAX_DEGREE:
                raise DomainError(
                    f"product degree {j1 + k1 + j2 + k2} exceeds the cap {MAX_DEGREE}"
                )
            for i in range(min(k1, j2) + 1):
                w = math.factorial(i) * math.comb(k1, i) * math.comb(j2, i)
                key = (j1 + j2 - i, k1 + k2 - i)
                out[key] = out.get(key, 0.0) + w * c1 * c2
    return LadderPoly(out)


def pt_transform(p: LadderPoly) -> LadderPoly:
    """Combined parity and antilinear time-reversal image of p."""
    return p.pt_image()


def adjoint(p: LadderPoly) -> LadderPoly:
    return p.adjoint()


@dataclass(frozen=True)
class QuadraticXP:
    """Quadratic operator c_pp p^2 + c_xx x^2 + c_xp_sym (xp+px)/2 + c_0."""

    c_pp: complex
    c_xx: complex
    c_xp_sym: complex
    c_0: complex = 0.0
    m: float = 1.0

    def __post_init__(self):
        if not self.m > 0:
            raise DomainError(f"mass must be positive, got {self.m}")

    @classmethod
    def gauge_oscillator(cls, m: float, big_omega: float, lam: float) -> "QuadraticXP":
        """Oscillator of frequency Omega with imaginary linear gauge of strength Lambda."""
        return cls(c_pp=1.0 / (2.0 * m), c_xx=m * big_omega**2 / 2.0, c_xp_sym=1j * lam, m=m)


@dataclass(frozen=True)
class SwansonParams:
    """Coefficients of omega0 (ad a + 1/2) + alpha a^2 + beta ad^2."""

    omega0: float
    alpha: complex
    beta: complex


def _substitute(h: QuadraticXP, x: LadderPoly, p: LadderPoly) -> LadderPoly:
    half_xp = (normal_product(x, p) + normal_product(p, x)).scale(0.5)
    out = normal_product(p, p).scale(h.c_pp)
    out = out + normal_product(x, x).scale(h.c_xx)
    out = out + half_xp.scale(h.c_xp_sym)
    return out + LadderPoly.constant(h.c_0)


def from_xp_scheme_one(h: QuadraticXP, big_omega: float) -> LadderPoly:
    """Ladder form of h under the frequency-matched map.

    Uses x = (a^dag + a)/sqrt(2 m Omega), p = i sqrt(m Omega / 2)(a^dag - a),
    which needs Omega > 0.
    """
    if not big_omega > 0:
        raise DomainError(f"scheme one needs a positive frequency, got {big_omega}")
    s = 1.0 / math.sqrt(2.0 * h.m * big_omega)
    t = math.sqrt(h.m * big_omega / 2.0)
    x = LadderPoly({(1, 0): s, (0, 1): s})
    p = LadderPoly({(1, 0): 1j * t, (0, 1): -1j * t})
    return _substitute(h, x, p)


def from_xp_scheme_two(h: QuadraticXP) -> LadderPoly:
    """Ladder form of h under the unit-scale map x=(a^dag+a)/sqrt2, p=i(a^dag-a)/sqrt2."""
    r = 1.0 / math.sqrt(2.0)
    x = LadderPoly({(1, 0): r, (0, 1): r})
    p = LadderPoly({(1, 0): 1j * r, (0, 1): -1j * r})
    return _substitute(h, x, p)


def extract_swanson(p: LadderPoly) -> SwansonParams:
    """Read (omega0, alpha, beta) off a quadratic ladder operator.

    The operator must consist of the monomials ad a, a^2, ad^2 and a constant
    equal to half the ad a coefficient (the +1/2 zero-point convention);
    anything else raises.
    """
    allowed = {(1, 1), (0, 2), (2, 0), (0, 0)}
    extra = set(p.terms) - allowed
    if extra:
        raise ShapeError(f"unexpected monomials for a Swanson-form operator: {sorted(extra)}")
    omega0 = p.coefficient(1, 1)
    c0 = p.coefficient(0, 0)
    if abs(c0 - omega0 / 2.0) > _EXTRACT_TOL:
        raise ConsistencyError(
            f"constant term {c0} is not half the number-operator coefficient {omega0}"
        )
    if abs(omega0.imag) > _EXTRACT_TOL:
        raise ConsistencyError(f"number-operator coefficient must be real, got {omega0}")
    return SwansonParams(omega0=omega0.real, alpha=p.coefficient(0, 2), beta=p.coefficient(2, 0))
