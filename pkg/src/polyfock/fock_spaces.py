"""Polyanalytic and true-polyanalytic Fock spaces: reproducing kernels,
series and recursion cross-checks, the creation isometry between consecutive
true-polyanalytic spaces, evaluation bounds, and the Berezin transform.

The kernel of the order-n polyanalytic space is e^(zbar w) L_{n-1}^(1)(|w-z|^2);
its true-polyanalytic sibling replaces L^(1) by the plain Laguerre polynomial.
Plain evaluations overflow once Re(zbar w) exceeds about 700, so log-scaled
variants are provided alongside.
"""

from __future__ import annotations

import cmath
import math
import warnings
from dataclasses import dataclass
from fractions import Fraction
from typing import Literal

import numpy as np

from .exact_poly import (BiPolynomial, creation_adagger, creation_adagger_bar)
from .hermite_basis import HermiteIndex, b_eval
from .laguerre import LaguerreParams, _recurrence_scalar, laguerre_exact

Kind = Literal["poly", "true_poly"]

EXP_OVERFLOW_LIMIT = 700.0


@dataclass(frozen=True)
class SpaceId:
    """Either the order-n polyanalytic space or its true-polyanalytic layer."""

    kind: Kind
    n: int

    def __post_init__(self):
        if self.kind not in ("poly", "true_poly"):
            raise ValueError(f"unknown space kind {self.kind!r}")
        if self.n < 1:
            raise ValueError("space order must be >= 1")

    def basis_indices(self, truncation: int) -> list[tuple[int, int]]:
        """Basis enumeration up to the truncation: p ranges over 0..P-1.

        For the full space the order is lexicographic in (q, p); the true
        layer is the single column q = n-1 ordered by p.
        """
        if truncation < 1:
            raise ValueError("truncation must be positive")
        if self.kind == "poly":
            return [(p, q) for q in range(self.n) for p in range(truncation)]
        return [(p, self.n - 1) for p in range(truncation)]


@dataclass
class FockVector:
    """Finite expansion over the basis of one space, at an explicit truncation.

    Operations refuse to mix truncations silently; the truncation is data.
    """

    space: SpaceId
    coefficients: dict[tuple[int, int], complex]
    truncation: int

    def __post_init__(self):
        valid = set(self.space.basis_indices(self.truncation))
        for key in self.coefficients:
            if key not in valid:
                raise ValueError(f"index {key} invalid for {self.space} "
                                 f"at truncation {self.truncation}")

    def norm(self) -> float:
        return math.sqrt(sum(abs(c) ** 2 for c in self.coefficients.values()))

    def inner(self, other: "FockVector") -> complex:
        if other.space != self.space or other.truncation != self.truncation:
            raise ValueError("mismatched space or truncation")
        return sum(c * other.coefficients.get(k, 0.0).conjugate()
                   for k, c in self.coefficients.items())


def _checked_exp_arg(z: complex, w: complex) -> complex:
    arg = z.conjugate() * w
    if arg.real > EXP_OVERFLOW_LIMIT:
        raise OverflowError(
            f"kernel exponent Re(zbar w) = {arg.real:.1f} exceeds the plain-form "
            f"limit {EXP_OVERFLOW_LIMIT}; use the log-scaled variant")
    return arg


def kernel_true(n: int, z: complex, w: complex) -> complex:
    """Reproducing kernel of the true-polyanalytic layer of order n."""
    if n < 1:
        raise ValueError("order must be >= 1")
    arg = _checked_exp_arg(z, w)
    return cmath.exp(arg) * _recurrence_scalar(n - 1, 0, abs(w - z) ** 2)


def kernel_poly(n: int, z: complex, w: complex) -> complex:
    """Reproducing kernel of the order-n polyanalytic space."""
    if n < 1:
        raise ValueError("order must be >= 1")
    arg = _checked_exp_arg(z, w)
    return cmath.exp(arg) * _recurrence_scalar(n - 1, 1, abs(w - z) ** 2)


def _kernel_log(n: int, z: complex, w: complex, alpha: int) -> tuple[float, float]:
    arg = z.conjugate() * w
    lag = _recurrence_scalar(n - 1, alpha, abs(w - z) ** 2)
    if lag == 0.0:
        return (-math.inf, 0.0)
    logmag = arg.real + math.log(abs(lag))
    phase = arg.imag + (0.0 if lag > 0 else math.pi)
    return (logmag, math.remainder(phase, 2.0 * math.pi))


def kernel_true_log(n: int, z: complex, w: complex) -> tuple[float, float]:
    """(log magnitude, phase) of the true-layer kernel; safe for large |z w|."""
    if n < 1:
        raise ValueError("order must be >= 1")
    return _kernel_log(n, z, w, 0)


def kernel_poly_log(n: int, z: complex, w: complex) -> tuple[float, float]:
    """(log magnitude, phase) of the full-space kernel."""
    if n < 1:
        raise ValueError("order must be >= 1")
    return _kernel_log(n, z, w, 1)


def kernel_partial_sum(space: SpaceId, z: complex, w: complex,
                       truncation: int) -> complex:
    """Truncated basis series sum of conj(b(z)) b(w) over the space's basis."""
    cap = max(truncation, 128)
    total = 0j
    for p, q in space.basis_indices(truncation):
        idx = HermiteIndex(p, q)
        total += b_eval(idx, z, cap).conjugate() * b_eval(idx, w, cap)
    return total


def kernel_recursion_check(n: int) -> bool:
    """Exact one-step check of the kernel recursion between consecutive layers.

    Writing the kernel as e^(zbar w) P(u, ubar) in the offset variable
    u = w - z, the two first-order factors of the recursion act on P as the
    creation operators of the exact layer, so the whole step reduces to exact
    polynomial arithmetic:  P_{n+1} = -(1/n) (u - d/du_bar)(ubar - d/du) P_n.
    """
    if n < 1:
        raise ValueError("recursion starts at order 1; the order-0 kernel "
                         "does not exist")
    if n > 8:
        raise ValueError("exact recursion check capped at order 8")

    def layer_poly(order: int) -> BiPolynomial:
        coeffs = laguerre_exact(LaguerreParams(order - 1, 0))
        return BiPolynomial({(k, k): c for k, c in enumerate(coeffs)})

    stepped = creation_adagger_bar(creation_adagger(layer_poly(n)))
    stepped = stepped.scale(Fraction(-1, n))
    return stepped == layer_poly(n + 1)


def creation_apply(n: int, v: FockVector) -> FockVector:
    """The normalized creation operator as an index shift between layers.

    Sends the basis element (p, n-1) to (p, n) with unchanged coefficient,
    hence preserves the norm exactly.
    """
    if v.space != SpaceId("true_poly", n):
        raise ValueError(f"vector lives in {v.space}, expected true_poly({n})")
    shifted = {(p, n): c for (p, _), c in v.coefficients.items()}
    return FockVector(SpaceId("true_poly", n + 1), shifted, v.truncation)


def evaluation_bound(n: int, z: complex) -> float:
    """Sharp bound sqrt(n) e^(|z|^2 / 2) on point evaluation at z."""
    half = 0.5 * abs(z) ** 2
    if half > EXP_OVERFLOW_LIMIT:
        raise OverflowError("bound overflows; use evaluation_bound_log")
    return math.sqrt(n) * math.exp(half)


def evaluation_bound_log(n: int, z: complex) -> float:
    """Natural log of the evaluation bound."""
    return 0.5 * math.log(n) + 0.5 * abs(z) ** 2


_TAIL_FRACTION = 10  # last 1/10 of the enumerated diagonal feeds the tail estimate


def berezin(space: SpaceId, operator_matrix: np.ndarray, z: complex,
            truncation: int) -> complex:
    """Berezin transform (S K_z)(z) / K_z(z) at a point, from a basis matrix.

    The matrix is indexed by the space enumeration at the given truncation,
    entry [out, in] = <S b_in, b_out>.  A tail estimate on the kernel series
    warns when the truncation has not converged at this z.
    """
    indices = space.basis_indices(truncation)
    k = len(indices)
    if operator_matrix.shape != (k, k):
        raise ValueError(f"matrix shape {operator_matrix.shape} does not match "
                         f"enumeration of size {k}")
    cap = max(truncation, 128)
    values = np.array([b_eval(HermiteIndex(p, q), z, cap) for p, q in indices])
    den_terms = np.abs(values) ** 2
    den = float(np.sum(den_terms))
    tail_start = truncation - max(1, truncation // _TAIL_FRACTION)
    tail_mask = np.array([p >= tail_start for p, _ in indices])
    tail = float(np.sum(den_terms[tail_mask]))
    if tail > 1e-8 * den:
        warnings.warn(f"kernel series tail at z={z} is {tail/den:.2e} of the "
                      "diagonal mass; increase the truncation", stacklevel=2)
    num = values @ operator_matrix @ values.conjugate()
    return complex(num / den)
