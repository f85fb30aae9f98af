"""The complex Hermite basis of the Gaussian L2 space of the plane.

Each basis element carries three representations that are kept permanently
as a self-test pair: the exact polynomial built by repeated creation
operators, the exact closed-form coefficient expansion, and a floating-point
evaluator routed through Laguerre polynomials of degree min(p, q) (the
monomial expansion cancels catastrophically for large min(p, q) and is never
used numerically).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import NamedTuple

import numpy as np

from .exact_poly import (BiPolynomial, ScaledPolynomial, creation_adagger,
                         creation_adagger_bar, factorial)
from .laguerre import _recurrence_array, _recurrence_scalar

MAX_EXACT_INDEX = 32
MAX_NUMERIC_INDEX = 128


@dataclass(frozen=True)
class HermiteIndex:
    """Index pair (p, q): p powers of z, q powers of zbar."""

    p: int
    q: int

    def __post_init__(self):
        if self.p < 0 or self.q < 0:
            raise ValueError(f"indices must be nonnegative, got ({self.p}, {self.q})")

    @property
    def d(self) -> int:
        """Diagonal index p - q."""
        return self.p - self.q

    @property
    def m(self) -> int:
        """min(p, q), the Laguerre degree of the radial profile."""
        return min(self.p, self.q)


@dataclass(frozen=True)
class DiagonalSpec:
    """A run of `count` leading basis elements on diagonal d.

    When the optional space order n is given, the run must be the truncated
    diagonal that actually sits inside that space: d >= -n+1 and
    count = min(n, n+d).
    """

    d: int
    count: int
    n: int | None = None

    def __post_init__(self):
        if self.count < 1:
            raise ValueError("count must be positive")
        if self.n is not None:
            if self.d < -self.n + 1:
                raise ValueError(f"diagonal {self.d} empty in a space of order {self.n}")
            expected = min(self.n, self.n + self.d)
            if self.count != expected:
                raise ValueError(
                    f"count must be min(n, n+d) = {expected}, got {self.count}")


def truncated_diagonal(spec: DiagonalSpec) -> list[HermiteIndex]:
    """Ordered indices (d+k, k) of the first `count` elements on diagonal d."""
    start = max(0, -spec.d)
    return [HermiteIndex(spec.d + k, k) for k in range(start, start + spec.count)]


@lru_cache(maxsize=None)
def _b_exact(p: int, q: int) -> ScaledPolynomial:
    body = BiPolynomial.one()
    for _ in range(p):
        body = creation_adagger_bar(body)
    for _ in range(q):
        body = creation_adagger(body)
    return ScaledPolynomial(body, Fraction(1, factorial(p) * factorial(q)))


def b_exact(idx: HermiteIndex, max_index: int = MAX_EXACT_INDEX) -> ScaledPolynomial:
    """Basis element from q creation and p conjugate-creation steps on 1."""
    if idx.p > max_index or idx.q > max_index:
        raise ValueError(f"exact layer capped at index {max_index}")
    return _b_exact(idx.p, idx.q)


@lru_cache(maxsize=None)
def _b_coeffs(p: int, q: int) -> ScaledPolynomial:
    lo, hi = min(p, q), max(p, q)
    terms = {}
    for s in range(lo + 1):
        coeff = Fraction((-1) ** s * math.comb(hi, s), factorial(lo - s))
        terms[(p - s, q - s)] = coeff
    return ScaledPolynomial(BiPolynomial(terms), Fraction(factorial(lo), factorial(hi)))


def b_coeffs(idx: HermiteIndex, max_index: int = MAX_EXACT_INDEX) -> ScaledPolynomial:
    """Closed-form coefficient expansion over monomials m_{p-s, q-s}."""
    if idx.p > max_index or idx.q > max_index:
        raise ValueError(f"exact layer capped at index {max_index}")
    return _b_coeffs(idx.p, idx.q)


def _radial_log_prefactor(m: int, alpha: int) -> float:
    return 0.5 * (math.lgamma(m + 1) - math.lgamma(m + alpha + 1))


def b_eval(idx: HermiteIndex, z: complex,
           max_index: int = MAX_NUMERIC_INDEX) -> complex:
    """Floating-point value via the Laguerre form of degree min(p, q)."""
    if idx.p > max_index or idx.q > max_index:
        raise ValueError(f"numeric layer capped at index {max_index}")
    m, d = idx.m, idx.d
    alpha = abs(d)
    x = abs(z) ** 2
    lag = _recurrence_scalar(m, alpha, x)
    sign = -1.0 if m % 2 else 1.0
    if alpha == 0:
        return complex(sign * lag)
    if z == 0:
        return 0j
    mag = math.exp(_radial_log_prefactor(m, alpha) + alpha * math.log(abs(z)))
    phase = (z / abs(z)) ** d
    return sign * mag * phase * lag


def b_eval_polar(idx: HermiteIndex, r: float, tau: complex,
                 unit_tol: float = 1e-12) -> complex:
    """Value at z = r tau with |tau| = 1, bypassing the cartesian form."""
    if abs(abs(tau) - 1.0) > unit_tol:
        raise ValueError(f"|tau| = {abs(tau)} is off the unit circle")
    if r < 0:
        raise ValueError("radius must be nonnegative")
    m, d = idx.m, idx.d
    alpha = abs(d)
    lag = _recurrence_scalar(m, alpha, r * r)
    sign = -1.0 if m % 2 else 1.0
    if alpha == 0:
        return complex(sign * lag)
    if r == 0.0:
        return 0j
    mag = math.exp(_radial_log_prefactor(m, alpha) + alpha * math.log(r))
    return sign * mag * tau**d * lag


def b_polar_values(idx: HermiteIndex, t: np.ndarray, taus: np.ndarray) -> np.ndarray:
    """Matrix of values b_idx(sqrt(t_i) tau_j), vectorized over a polar grid."""
    m, d = idx.m, idx.d
    alpha = abs(d)
    t = np.asarray(t, dtype=float)
    lag = _recurrence_array(m, alpha, t)
    sign = -1.0 if m % 2 else 1.0
    if alpha == 0:
        radial = sign * lag
    else:
        with np.errstate(divide="ignore"):
            logmag = _radial_log_prefactor(m, alpha) + 0.5 * alpha * np.where(
                t > 0, np.log(t), -np.inf)
        radial = np.where(t > 0, sign * np.exp(logmag) * lag, 0.0)
    return radial[:, None] * (np.asarray(taus, dtype=complex) ** d)[None, :]


class SignedSquare(NamedTuple):
    """Exact representation of a real value v as (sign(v), v^2)."""

    sign: int
    square: Fraction


def monomial_b_inner(d: int, k: int, q: int) -> SignedSquare:
    """Exact <m_{d+k,k}, b_{d+q,q}> as a signed square.

    Requires k <= q and all exponents nonnegative.  The value is
    sqrt(q! (d+q)!) for k = q and 0 for k < q.
    """
    if k > q:
        raise ValueError("requires k <= q")
    if min(d + k, d + q, k, q) < 0:
        raise ValueError("all exponents must be nonnegative")
    mono = ScaledPolynomial(BiPolynomial.monomial(d + k, k), Fraction(1))
    basis = b_coeffs(HermiteIndex(d + q, q))
    sign, square = mono.inner_sign_square(basis)
    return SignedSquare(sign, square)


def basis_json_dict(idx: HermiteIndex) -> dict:
    """CLI-facing serialization: exact body coefficients plus squared scale."""
    sp = b_exact(idx)
    coeffs = [[j, k, str(c.re), str(c.im)]
              for (j, k), c in sorted(sp.body.terms())]
    return {"p": idx.p, "q": idx.q, "coeffs": coeffs, "scale_sq": str(sp.scale_sq)}
