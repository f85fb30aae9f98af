"""Integration rules: generalized Gauss-Laguerre, piecewise half-line rules,
circle averaging, and the Gaussian-plane inner product via polar factorization.

All rules are immutable once built; integration itself is pure, so rules can
be shared freely across threads.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Sequence

import numpy as np
from scipy.linalg import eigh_tridiagonal


class QuadratureConvergenceError(RuntimeError):
    """Raised when a self-checked integral fails to converge under refinement."""


@dataclass(frozen=True)
class QuadratureRule:
    """Nodes and weights for the weight t^alpha e^(-t) on [0, inf).

    `weights` are the true weights (summing to alpha!); `log_weights` carries
    their logarithms so that rules with very large alpha, whose weights
    overflow a double, remain usable through log-space accumulation.
    """

    nodes: np.ndarray
    weights: np.ndarray
    alpha: int
    log_weights: np.ndarray = field(repr=False, default=None)

    def __post_init__(self):
        if self.log_weights is None:
            with np.errstate(divide="ignore"):
                object.__setattr__(self, "log_weights", np.log(self.weights))


def _christoffel_log_weights(nodes: np.ndarray, alpha: int,
                             n_nodes: int) -> np.ndarray:
    """Log weights via the inverse Christoffel function w = mu0 / sum psi_k^2.

    psi_k are the recurrence polynomials normalized to psi_0 = 1, evaluated at
    every node with a shared floating scale per node so that rules with large
    node ranges neither overflow nor lose their far-tail weights.  Unlike the
    squared first eigenvector component, this is relatively accurate even for
    weights far below machine epsilon.
    """
    x = np.asarray(nodes, dtype=float)
    m_prev = np.zeros_like(x)
    m_cur = np.ones_like(x)
    scale = np.zeros_like(x)
    logs = np.full((n_nodes, len(x)), -np.inf)
    logs[0] = 0.0
    for k in range(n_nodes - 1):
        b_k = math.sqrt((k + 1) * (k + 1 + alpha))
        b_km1 = math.sqrt(k * (k + alpha))
        m_next = ((x - (2 * k + alpha + 1)) * m_cur - b_km1 * m_prev) / b_k
        m_prev, m_cur = m_cur, m_next
        mag = np.maximum(np.abs(m_cur), np.abs(m_prev))
        off_range = (mag > 1e100) | ((mag > 0) & (mag < 1e-100))
        if np.any(off_range):
            c = np.where(off_range, mag, 1.0)
            m_prev = m_prev / c
            m_cur = m_cur / c
            scale = scale + np.log(c)
        with np.errstate(divide="ignore"):
            logs[k + 1] = 2.0 * (np.where(m_cur != 0, np.log(np.abs(m_cur)),
                                          -np.inf) + scale)
    top = logs.max(axis=0)
    log_sum = top + np.log(np.sum(np.exp(logs - top[None, :]), axis=0))
    return math.lgamma(alpha + 1) - log_sum


@lru_cache(maxsize=None)
def gauss_laguerre(alpha: int, n_nodes: int) -> QuadratureRule:
    """N-point generalized Gauss-Laguerre rule via the Jacobi matrix.

    Recurrence coefficients for the weight t^alpha e^(-t): diagonal
    a_k = 2k + alpha + 1, off-diagonal b_k = sqrt(k (k + alpha)).  Nodes are
    the Jacobi-matrix eigenvalues; weights come from the Christoffel sum at
    each node.
    """
    if n_nodes < 1:
        raise ValueError("need at least one node")
    if alpha < 0:
        raise ValueError("alpha must be nonnegative")
    diag = np.array([2 * k + alpha + 1 for k in range(n_nodes)], dtype=float)
    off = np.array([math.sqrt(k * (k + alpha)) for k in range(1, n_nodes)],
                   dtype=float)
    # eigh_tridiagonal raises LinAlgError on failure; that is a hard error here
    nodes = eigh_tridiagonal(diag, off, eigvals_only=True)
    log_w = _christoffel_log_weights(nodes, alpha, n_nodes)
    with np.errstate(over="ignore"):
        weights = np.exp(log_w)
    nodes.setflags(write=False)
    weights.setflags(write=False)
    log_w.setflags(write=False)
    return QuadratureRule(nodes=nodes, weights=weights, alpha=alpha,
                          log_weights=log_w)


@lru_cache(maxsize=None)
def _leggauss(n: int) -> tuple[np.ndarray, np.ndarray]:
    return np.polynomial.legendre.leggauss(n)


def legendre_rule(a: float, b: float, n_nodes: int) -> tuple[np.ndarray, np.ndarray]:
    """Gauss-Legendre nodes and weights on a finite interval [a, b]."""
    x, w = _leggauss(n_nodes)
    half = 0.5 * (b - a)
    return a + half * (x + 1.0), half * w


def piecewise_halfline_rule(breakpoints: Sequence[float] = (),
                            n_per_piece: int = 64,
                            n_tail: int = 64,
                            head_split: float = 4.0) -> QuadratureRule:
    """Composite rule for integrals of f(t) e^(-t) over [0, inf).

    Finite pieces between consecutive breakpoints use Gauss-Legendre after the
    substitution t = u^2, which removes sqrt(t)-type kinks of radius-smooth
    integrands near the origin; past the last breakpoint a shifted
    Gauss-Laguerre rule covers the tail.  The e^(-t) factor is folded into the
    weights, so the rule composes with alpha = 0 semantics.
    """
    bps = sorted({float(b) for b in breakpoints if b > 0})
    if any(not math.isfinite(b) for b in bps):
        raise ValueError("breakpoints must be finite")
    if not bps:
        bps = [head_split]
    edges = [0.0] + bps
    all_nodes, all_weights = [], []
    for a, b in zip(edges[:-1], edges[1:]):
        u, v = legendre_rule(math.sqrt(a), math.sqrt(b), n_per_piece)
        t = u * u
        all_nodes.append(t)
        all_weights.append(v * 2.0 * u * np.exp(-t))
    last = edges[-1]
    tail = gauss_laguerre(0, n_tail)
    all_nodes.append(last + tail.nodes)
    all_weights.append(tail.weights * math.exp(-last))
    nodes = np.concatenate(all_nodes)
    weights = np.concatenate(all_weights)
    nodes.setflags(write=False)
    weights.setflags(write=False)
    return QuadratureRule(nodes=nodes, weights=weights, alpha=0)


def integrate_halfline(f: Callable[[float], complex], rule: QuadratureRule) -> complex:
    """Sum of w_i f(t_i); f receives the bare node, without the weight factor."""
    total = 0j
    for t, w in zip(rule.nodes, rule.weights):
        val = complex(f(float(t)))
        if not (math.isfinite(val.real) and math.isfinite(val.imag)):
            raise ValueError(f"integrand not finite at node t={t}")
        total += w * val
    return total


def integrate_piecewise(f: Callable[[float], complex],
                        weight_alpha: int = 0,
                        breakpoints: Sequence[float] = (),
                        n_per_piece: int = 64) -> complex:
    """Integral of f(t) t^weight_alpha e^(-t) honoring declared breakpoints.

    Undeclared discontinuities are integrated silently but inaccurately:
    Gauss rules lose their accuracy on jumps inside a piece.
    """
    rule = piecewise_halfline_rule(tuple(breakpoints), n_per_piece, n_per_piece)
    if weight_alpha == 0:
        return integrate_halfline(f, rule)
    return integrate_halfline(lambda t: f(t) * t ** weight_alpha, rule)


@dataclass(frozen=True)
class CircleRule:
    """Equispaced sampling of the unit circle: exact for powers tau^k, |k| < M."""

    m_angles: int

    def __post_init__(self):
        if self.m_angles < 1:
            raise ValueError("need at least one angle")

    @property
    def taus(self) -> np.ndarray:
        angles = 2.0 * np.pi * np.arange(self.m_angles) / self.m_angles
        return np.exp(1j * angles)


def circle_average(g: Callable[[complex], complex], rule: CircleRule) -> complex:
    """Mean of g over the sampled roots of unity."""
    return sum(complex(g(complex(tau))) for tau in rule.taus) / rule.m_angles


DEFAULT_RADIAL_NODES = 64
DEFAULT_ANGLES = 64
_SELF_CHECK_TOL = 1e-9
_MAX_REFINE = 3


def _plane_inner_once(f, g, radial_rule: QuadratureRule,
                      circle_rule: CircleRule) -> complex:
    taus = circle_rule.taus
    total = 0j
    for t, w in zip(radial_rule.nodes, radial_rule.weights):
        r = math.sqrt(t)
        avg = 0j
        for tau in taus:
            z = complex(r * tau)
            fv = complex(f(z))
            gv = complex(g(z))
            if not (math.isfinite(fv.real) and math.isfinite(fv.imag)
                    and math.isfinite(gv.real) and math.isfinite(gv.imag)):
                raise ValueError(f"non-finite sample at z={z}")
            avg += fv * gv.conjugate()
        total += w * avg / circle_rule.m_angles
    return total


def plane_inner(f: Callable[[complex], complex],
                g: Callable[[complex], complex],
                radial_rule: QuadratureRule | None = None,
                circle_rule: CircleRule | None = None) -> complex:
    """Inner product on L2 of the plane with Gaussian weight.

    Polar factorization: with t = r^2 the Gaussian measure splits into
    e^(-t) dt on the half-line times the normalized angle average.  When no
    rules are passed, the default 64x64 tensor rule is refined by doubling
    until two consecutive sizes agree to 1e-9 (relative).
    """
    if radial_rule is not None or circle_rule is not None:
        rr = radial_rule if radial_rule is not None else gauss_laguerre(
            0, DEFAULT_RADIAL_NODES)
        cr = circle_rule if circle_rule is not None else CircleRule(DEFAULT_ANGLES)
        return _plane_inner_once(f, g, rr, cr)
    n, m = DEFAULT_RADIAL_NODES, DEFAULT_ANGLES
    prev = _plane_inner_once(f, g, gauss_laguerre(0, n), CircleRule(m))
    for _ in range(_MAX_REFINE):
        n, m = 2 * n, 2 * m
        cur = _plane_inner_once(f, g, gauss_laguerre(0, n), CircleRule(m))
        if abs(cur - prev) <= _SELF_CHECK_TOL * max(1.0, abs(cur)):
            return cur
        prev = cur
    raise QuadratureConvergenceError(
        f"plane inner product did not stabilize up to {n} radial nodes")
