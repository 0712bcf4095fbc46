"""Desk-scale empirical harnesses.

Norm-growth ladders witnessing H^1 unboundedness for jump symbols,
finite-section singular-value probes of the essential spectrum at p=2,
an exact cross-check of the winding-number index against polynomial
root counting, and a boundary-limit demo for analytic polynomials.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

import numpy as np

from .errors import BudgetError, InSpectrumError, NotAnalyticError
from .hardy import apply_toeplitz, hardy_norm, toeplitz_section
from .spectra import fredholm_index, is_in_essential_spectrum
from .symbols import CoefficientSequence, PiecewiseSymbol

GROWTH_N_CAP = 2**15
PROBE_N_CAP = 2048
OUT_DEGREE_CAP = 2**22

# The truncation tail is accepted once doubling out_degree moves the
# H^1 norm by less than this relative amount.
TAIL_RTOL = 1e-3


def _check_increasing(n_list) -> None:
    if not n_list:
        raise ValueError("n_list must be nonempty")
    if any(b <= a for a, b in zip(n_list, n_list[1:])):
        raise ValueError("n_list must be strictly increasing")


def _norm_grid(degree: int) -> int:
    """Power-of-two quadrature grid with at least 4*(degree+1) points."""
    return 1 << int(np.ceil(np.log2(max(4 * (degree + 1), 4096))))


@dataclass(frozen=True)
class GrowthRow:
    n: int
    ratio: float
    wall_time: float


@dataclass(frozen=True)
class GrowthTable:
    """Ratios ||T_a f_n||_1 / ||f_n||_1 for f_n = sum_{k<=n} z^k."""

    rows: tuple[GrowthRow, ...]


def h1_growth_experiment(symbol: PiecewiseSymbol, n_list: list[int]) -> GrowthTable:
    """H^1 norm-growth ladder for the truncated Cauchy kernels f_n.

    The test family f_n = sum_{k=0}^n z^k has slowly growing H^1 norm
    (~ log n), which sharpens the growth signal of an unbounded operator.
    out_degree for T_a f_n is doubled until the dropped tail moves the
    norm by less than TAIL_RTOL; both norms are evaluated on the same
    quadrature grid so that T_1 = I gives ratios exactly 1.
    """
    _check_increasing(n_list)
    if n_list[-1] > GROWTH_N_CAP:
        raise BudgetError(f"n={n_list[-1]} exceeds the desk-scale cap {GROWTH_N_CAP}")
    rows = []
    for n in n_list:
        t0 = time.perf_counter()
        f = CoefficientSequence(0, n, np.ones(n + 1, dtype=complex))
        out = 2 * (n + 1)
        prev = hardy_norm(apply_toeplitz(symbol, f, out), 1.0, _norm_grid(out))
        while True:
            out *= 2
            if out > OUT_DEGREE_CAP:
                raise BudgetError(f"out_degree {out} exceeds cap {OUT_DEGREE_CAP}")
            cur = hardy_norm(apply_toeplitz(symbol, f, out), 1.0, _norm_grid(out))
            if abs(cur - prev) <= TAIL_RTOL * cur:
                break
            prev = cur
        denom = hardy_norm(f, 1.0, _norm_grid(out))
        rows.append(GrowthRow(n, cur / denom, time.perf_counter() - t0))
    return GrowthTable(tuple(rows))


@dataclass(frozen=True)
class ProbeRow:
    n: int
    sigma_min: float


@dataclass(frozen=True)
class ProbeTable:
    """Smallest singular values of the shifted finite sections."""

    rows: tuple[ProbeRow, ...]


def finite_section_probe(
    symbol: PiecewiseSymbol, lam: complex, n_list: list[int]
) -> ProbeTable:
    """sigma_min of T_n(a - lambda) along n_list, by dense SVD.

    Decay of sigma_min to zero is the numerical shadow of lambda lying in
    the essential spectrum at p=2; a uniform lower bound shadows
    Fredholmness.
    """
    _check_increasing(n_list)
    if n_list[-1] > PROBE_N_CAP:
        raise BudgetError(f"n={n_list[-1]} exceeds the dense-SVD cap {PROBE_N_CAP}")
    shifted = symbol.shifted(-lam)
    rows = []
    for n in n_list:
        section = toeplitz_section(shifted, n)
        sigma = float(np.linalg.svd(section.entries, compute_uv=False)[-1])
        rows.append(ProbeRow(n, sigma))
    return ProbeTable(tuple(rows))


@dataclass(frozen=True)
class IndexConsistencyReport:
    """Winding-number index versus root-counting index."""

    index_from_curve: int
    index_from_roots: int
    winding: int

    @property
    def matches(self) -> bool:
        return self.index_from_curve == self.index_from_roots


def index_consistency(
    symbol: PiecewiseSymbol, lam: complex
) -> IndexConsistencyReport:
    """Cross-check the curve index of a global trig polynomial at lambda.

    The shifted symbol b = a - lambda is a Laurent polynomial z^m q(z);
    its winding equals m plus the number of roots of q inside the unit
    disk, giving an independent index -wind(b) to compare with the
    arc-completed curve computation. Both must match exactly.
    """
    if len(symbol.pieces) != 1:
        raise ValueError("index_consistency needs a single-piece trig-polynomial symbol")
    if is_in_essential_spectrum(symbol, 2.0, lam):
        raise InSpectrumError(f"lambda = {lam} lies in the essential spectrum")
    value = symbol.shifted(-lam).pieces[0].value
    coeffs = value.coeffs
    nz = np.flatnonzero(np.abs(coeffs) > 0)
    coeffs = coeffs[nz[0] : nz[-1] + 1]
    k_min = value.k_min + int(nz[0])
    if coeffs.size == 1:
        inside = 0
    else:
        roots = np.roots(coeffs[::-1])
        inside = int(np.count_nonzero(np.abs(roots) < 1.0))
    winding = k_min + inside
    return IndexConsistencyReport(
        index_from_curve=fredholm_index(symbol, 2.0, lam),
        index_from_roots=-winding,
        winding=winding,
    )


@dataclass(frozen=True, eq=False)
class LindelofReport:
    """Two-sided tangential boundary limits of an analytic polynomial."""

    t: float
    radii: np.ndarray
    plus_values: np.ndarray
    minus_values: np.ndarray
    plus_limit: complex
    minus_limit: complex
    boundary_value: complex

    @property
    def difference(self) -> float:
        return abs(self.plus_limit - self.minus_limit)


def _neville_at_zero(xs: np.ndarray, ys: np.ndarray) -> complex:
    """Polynomial extrapolation of (xs, ys) to x = 0."""
    ys = list(ys)
    n = len(ys)
    for level in range(1, n):
        for i in range(n - level):
            xi, xk = xs[i], xs[i + level]
            ys[i] = (xk * ys[i] - xi * ys[i + 1]) / (xk - xi)
    return complex(ys[0])


def lindelof_demo(
    analytic_coeffs: CoefficientSequence,
    t: float,
    radii: list[float] | None = None,
) -> LindelofReport:
    """Approach e^{it} tangentially from both sides and compare limits.

    The approach paths are z = r e^{i(t +/- (1-r))}, i.e. the classical
    (1 - 1/m) e^{i(t +/- 1/m)} wedge with m on a log ladder. Limits are
    Neville-extrapolated in 1 - r to the boundary; for polynomials both
    sides must agree with the direct boundary value, illustrating why a
    jump in an H^infinity boundary function is impossible.
    """
    if analytic_coeffs.k_min < 0 and np.any(
        analytic_coeffs.coeffs[analytic_coeffs.indices < 0] != 0
    ):
        raise NotAnalyticError("lindelof_demo needs k_min >= 0 coefficients")
    if radii is None:
        radii = list(1.0 - 1.0 / np.geomspace(10.0, 1e4, 25))
    radii_arr = np.asarray(radii, dtype=float)
    if np.any((radii_arr <= 0) | (radii_arr >= 1)):
        raise ValueError("radii must lie in (0, 1)")
    eps = 1.0 - radii_arr
    z_plus = radii_arr * np.exp(1j * (t + eps))
    z_minus = radii_arr * np.exp(1j * (t - eps))

    def poly(z):
        acc = np.zeros_like(z, dtype=complex)
        for k, c in zip(analytic_coeffs.indices, analytic_coeffs.coeffs):
            if k >= 0 and c != 0:
                acc += c * z**k
        return acc

    plus_vals = poly(z_plus)
    minus_vals = poly(z_minus)
    order = np.argsort(eps)[: min(8, eps.size)]  # extrapolate on the closest nodes
    plus_limit = _neville_at_zero(eps[order], plus_vals[order])
    minus_limit = _neville_at_zero(eps[order], minus_vals[order])
    boundary = complex(poly(np.array(np.exp(1j * t), dtype=complex)))
    return LindelofReport(
        t=t,
        radii=radii_arr,
        plus_values=plus_vals,
        minus_values=minus_vals,
        plus_limit=plus_limit,
        minus_limit=minus_limit,
        boundary_value=boundary,
    )
