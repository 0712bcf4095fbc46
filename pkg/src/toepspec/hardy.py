"""Coefficient-space Hardy machinery.

Riesz and complementary projections, the Cauchy singular integral, dense
Toeplitz finite sections, Hardy norms, Poisson extension and winding
numbers of sampled closed curves. Everything acts on finitely supported
coefficient sequences, where the three operators P, Q and S are exact.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
import scipy.linalg
import scipy.signal

from .errors import (
    GridTooCoarseError,
    NotAnalyticError,
    SizeError,
    TooCloseError,
    TruncationError,
    UnderResolvedError,
)
from .symbols import TWO_PI, CoefficientSequence, PiecewiseSymbol

# Winding queries reject points closer to the curve than this.
WINDING_DIST_TOL = 1e-8

# Poisson truncation: the cutoff must satisfy r**k_cut < this bound.
POISSON_TAIL_BOUND = 1e-14

_ZERO = CoefficientSequence(0, 0, np.zeros(1, dtype=complex))


def riesz_project(c: CoefficientSequence) -> CoefficientSequence:
    """P: zero all coefficients with k < 0."""
    if c.k_max < 0:
        return _ZERO
    return c.restricted(max(c.k_min, 0), c.k_max)


def complementary_project(c: CoefficientSequence) -> CoefficientSequence:
    """Q = I - P: keep only the strictly negative indices."""
    if c.k_min >= 0:
        return _ZERO
    return c.restricted(c.k_min, min(c.k_max, -1))


def cauchy_singular(c: CoefficientSequence) -> CoefficientSequence:
    """S = 2P - I: negate coefficients with k < 0, fix the rest."""
    coeffs = c.coeffs.copy()
    coeffs[c.indices < 0] *= -1
    return CoefficientSequence(c.k_min, c.k_max, coeffs)


@dataclass(frozen=True, eq=False)
class ToeplitzSection:
    """Dense n x n finite section with entries a_{j-k}."""

    n: int
    entries: np.ndarray

    def __post_init__(self):
        arr = np.asarray(self.entries, dtype=complex)
        if arr.shape != (self.n, self.n):
            raise SizeError(f"entries shape {arr.shape} != ({self.n}, {self.n})")
        arr = arr.copy()
        arr.setflags(write=False)
        object.__setattr__(self, "entries", arr)


def toeplitz_section(symbol: PiecewiseSymbol, n: int) -> ToeplitzSection:
    """The n x n truncation of T_a in the monomial basis."""
    if n < 1:
        raise SizeError(f"section size must be >= 1, got {n}")
    a = symbol.fourier_coefficients(-(n - 1), n - 1)
    col = np.array([a[j] for j in range(n)])
    row = np.array([a[-k] for k in range(n)])
    return ToeplitzSection(n, scipy.linalg.toeplitz(col, row))


def _check_analytic(f: CoefficientSequence) -> None:
    if f.k_min < 0 and np.any(f.coeffs[f.indices < 0] != 0):
        raise NotAnalyticError("sequence has nonzero negative-index coefficients")


def apply_toeplitz(
    symbol: PiecewiseSymbol, f: CoefficientSequence, out_degree: int
) -> CoefficientSequence:
    """Coefficients of P(a*f) on [0, out_degree] for analytic f.

    (T_a f)_k = sum_m a_{k-m} f_m; the symbol coefficients are taken on the
    exact index window the convolution touches.
    """
    _check_analytic(f)
    if out_degree < 0:
        raise ValueError(f"out_degree must be >= 0, got {out_degree}")
    f = riesz_project(f)
    a = symbol.fourier_coefficients(-f.k_max, out_degree - f.k_min)
    if a.coeffs.size * f.coeffs.size > 1 << 22:
        conv = scipy.signal.fftconvolve(a.coeffs, f.coeffs)
    else:
        conv = np.convolve(a.coeffs, f.coeffs)
    base = a.k_min + f.k_min  # index of conv[0]
    out = conv[-base : -base + out_degree + 1]
    return CoefficientSequence(0, out_degree, out)


def hardy_norm(
    f: CoefficientSequence, p: float, grid_size: int | None = None
) -> float:
    """((1/2pi) int |f|^p)^{1/p} for an analytic polynomial.

    p=2 is summed exactly via Parseval; other p use uniform trapezoid
    quadrature, which on the circle is the plain sample mean. The grid must
    have at least 4*(degree+1) points; `grid_size=None` picks that minimum.
    """
    _check_analytic(f)
    if p < 1:
        raise ValueError(f"p must be >= 1, got {p}")
    degree = max(f.k_max, 0)
    min_grid = 4 * (degree + 1)
    if grid_size is None:
        grid_size = min_grid
    if grid_size < min_grid:
        raise GridTooCoarseError(f"grid {grid_size} < 4*(degree+1) = {min_grid}")
    if p == 2:
        return float(np.sqrt(np.sum(np.abs(f.coeffs) ** 2)))
    values = f.values_on_grid(grid_size)
    return float(np.mean(np.abs(values) ** p) ** (1.0 / p))


def poisson_extension(
    symbol: PiecewiseSymbol, r: float, theta: float, k_cut: int
) -> complex:
    """Harmonic extension sum_{|k|<=k_cut} a_k r^{|k|} e^{ik theta}."""
    if not 0 <= r < 1:
        raise ValueError(f"radius must be in [0, 1), got {r}")
    if r**k_cut >= POISSON_TAIL_BOUND:
        raise TruncationError(
            f"r^k_cut = {r**k_cut:.3e} >= {POISSON_TAIL_BOUND}; increase k_cut"
        )
    a = symbol.fourier_coefficients(-k_cut, k_cut)
    ks = a.indices
    return complex(np.sum(a.coeffs * r ** np.abs(ks) * np.exp(1j * ks * theta)))


def poisson_cutoff(r: float) -> int:
    """Smallest k_cut with r**k_cut < the truncation bound."""
    if r <= 0:
        return 1
    return int(np.ceil(np.log(POISSON_TAIL_BOUND) / np.log(r))) + 1


@dataclass(frozen=True, eq=False)
class SampledCurve:
    """An ordered list of complex samples, optionally a closed loop.

    For closed curves the first and last samples are identified logically;
    they are not duplicated in `points`.
    """

    points: np.ndarray
    closed: bool

    def __post_init__(self):
        arr = np.asarray(self.points, dtype=complex).ravel()
        if arr.size < 2:
            raise ValueError("a curve needs at least 2 samples")
        arr = arr.copy()
        arr.setflags(write=False)
        object.__setattr__(self, "points", arr)


def winding_number(curve: SampledCurve, w: complex) -> int:
    """Signed number of times a closed sampled curve encircles w.

    Sums principal-branch increments of arg(z_i - w). A step turning by
    >= pi is ambiguous (the chord passes through w), so the caller must
    refine the sampling rather than trust a guess.
    """
    if not curve.closed:
        raise ValueError("winding number needs a closed curve")
    z = curve.points - w
    dist = np.abs(z)
    if np.min(dist) <= WINDING_DIST_TOL:
        raise TooCloseError(
            f"point within {WINDING_DIST_TOL} of the curve (min dist {np.min(dist):.3e})"
        )
    steps = np.angle(np.roll(z, -1) / z)
    if np.max(np.abs(steps)) >= np.pi * (1 - 1e-12):
        raise UnderResolvedError("a sample step turns by >= pi; refine the sampling")
    total = float(np.sum(steps)) / TWO_PI
    k = int(np.rint(total))
    if abs(total - k) > 1e-6:
        raise UnderResolvedError(f"winding sum {total} is not close to an integer")
    return k
