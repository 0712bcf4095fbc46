"""Essential spectra of Toeplitz operators with piecewise continuous symbols.

The essential spectrum on H^p is the union of the symbol's range closure
and, for every jump, the circular arc from which the chord between the
one-sided limits is seen at the angle 2*pi/p. For p=2 the arc degenerates
to the open chord; conjugate exponents give mirror arcs. Fredholm indices
away from the spectrum come from the winding number of the arc-completed
symbol curve.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
import scipy.optimize

from .errors import (
    DegenerateError,
    EndpointError,
    HasJumpsError,
    InSpectrumError,
    UnderResolvedError,
)
from .hardy import SampledCurve, poisson_cutoff, winding_number
from .symbols import TWO_PI, PiecewiseSymbol, _normalize_angle

# Angular tolerance for the arc membership condition.
ARC_ANGLE_TOL = 1e-9

# Distance tolerance separating spectrum membership from index queries.
SPECTRUM_DIST_TOL = 1e-8

# Number of radial levels sampled per rung of the Douglas annulus ladder.
DOUGLAS_RADIAL_LEVELS = 8


def _normalize_arg(x: float | np.ndarray) -> float | np.ndarray:
    """Argument normalized to [0, 2*pi); the condition needs angles > pi."""
    return np.mod(x, TWO_PI)


def _circular_diff(x, y):
    d = np.abs(np.mod(x - y, TWO_PI))
    return np.minimum(d, TWO_PI - d)


@dataclass(frozen=True)
class ArcP:
    """The p-circular arc between the one-sided limits z_minus, z_plus."""

    z_minus: complex
    z_plus: complex
    p: float

    def __post_init__(self):
        if self.z_minus == self.z_plus:
            raise DegenerateError("arc endpoints coincide")
        if not 1 < self.p < np.inf:
            raise ValueError(f"p must lie in (1, inf), got {self.p}")

    @property
    def alpha(self) -> float:
        """The viewing angle 2*pi/p, in (0, 2*pi)."""
        return TWO_PI / self.p


def arc_membership(arc: ArcP, zeta: complex, tol: float = ARC_ANGLE_TOL) -> bool:
    """True iff arg((z_minus - zeta)/(z_plus - zeta)) equals 2*pi/p within tol.

    The argument is reduced to [0, 2*pi) with circular wrap-around, since
    for 1 < p < 2 the angle 2*pi/p exceeds pi and has no principal-branch
    representation.
    """
    if abs(zeta - arc.z_minus) <= tol or abs(zeta - arc.z_plus) <= tol:
        raise EndpointError("zeta coincides with an arc endpoint")
    w = (arc.z_minus - zeta) / (arc.z_plus - zeta)
    return bool(_circular_diff(_normalize_arg(np.angle(w)), arc.alpha) <= tol)


def arc_parameter_grid(m: int) -> np.ndarray:
    """Moebius parameters for arc_points: r_j = s_j/(1-s_j), s_j = j/(m+1).

    Endpoints are r=0 (z_minus) and r=inf (z_plus).
    """
    s = np.arange(1, m + 1) / (m + 1)
    return np.concatenate(([0.0], s / (1.0 - s), [np.inf]))


def arc_points(arc: ArcP, m: int) -> SampledCurve:
    """m interior samples of the arc, oriented z_minus -> z_plus.

    Uses the exact parametrization zeta(r) = (z_minus - r e^{i alpha}
    z_plus)/(1 - r e^{i alpha}), whose cross-ratio is identically
    r e^{i alpha}, so every interior sample satisfies the membership
    condition by construction (p=2 degenerates to the chord).
    """
    if m < 1:
        raise ValueError(f"need at least one interior sample, got m={m}")
    r = arc_parameter_grid(m)[1:-1]
    rot = r * np.exp(1j * arc.alpha)
    interior = (arc.z_minus - rot * arc.z_plus) / (1.0 - rot)
    points = np.concatenate(([arc.z_minus], interior, [arc.z_plus]))
    return SampledCurve(points, closed=False)


@dataclass(frozen=True, eq=False)
class SpectrumSegment:
    """One sampled component of the essential spectrum with provenance."""

    curve: SampledCurve
    kind: str  # "range" or "arc"
    piece_index: int | None
    jump_t: float | None
    params: np.ndarray  # sample angles (range) or Moebius parameters (arc)

    @property
    def provenance(self) -> str:
        if self.kind == "range":
            return f"range:{self.piece_index}"
        return f"jump:{format(self.jump_t, '.17g')}"


@dataclass(frozen=True, eq=False)
class SpectrumDescription:
    """Sampled essential spectrum: range pieces plus one arc per jump."""

    segments: tuple[SpectrumSegment, ...]
    p: float
    resolution: int

    def all_points(self) -> np.ndarray:
        return np.concatenate([seg.curve.points for seg in self.segments])


def essential_spectrum(
    symbol: PiecewiseSymbol, p: float, resolution: int
) -> SpectrumDescription:
    """Sampled union of the symbol's range closure and its jump arcs.

    Each piece is sampled on its closed sub-arc, so the one-sided limits
    appear as range endpoints; each jump contributes arc_points from
    a(t-0) to a(t+0).
    """
    if not 1 < p < np.inf:
        raise ValueError(f"p must lie in (1, inf), got {p}")
    if resolution < 16:
        raise ValueError(f"resolution must be >= 16, got {resolution}")
    segments = []
    for i, piece in enumerate(symbol.pieces):
        thetas = np.linspace(piece.start_angle, piece.end_angle, resolution)
        values = piece.value_at(thetas)
        segments.append(
            SpectrumSegment(SampledCurve(values, closed=False), "range", i, None, thetas)
        )
    for jump in symbol.jumps:
        arc = ArcP(jump.left_limit, jump.right_limit, p)
        curve = arc_points(arc, resolution)
        segments.append(
            SpectrumSegment(curve, "arc", None, jump.t, arc_parameter_grid(resolution))
        )
    return SpectrumDescription(tuple(segments), p, resolution)


def essential_spectrum_continuous(
    symbol: PiecewiseSymbol, resolution: int = 512
) -> SpectrumDescription:
    """Essential spectrum of a jump-free symbol: just the range, any p."""
    if symbol.jumps:
        raise HasJumpsError("symbol has jumps; use essential_spectrum with a p")
    return essential_spectrum(symbol, 2.0, resolution)


def _min_distance_to_piece(piece, lam: complex) -> float:
    """min over the closed sub-arc of |value(theta) - lam|."""
    deg = max(abs(piece.value.k_min), abs(piece.value.k_max), 1)
    n = max(64, 16 * deg)
    thetas = np.linspace(piece.start_angle, piece.end_angle, n)
    d2 = np.abs(piece.value_at(thetas) - lam) ** 2
    best = float(np.sqrt(d2.min()))
    # Refine every local minimum of the sampled squared distance.
    for j in np.flatnonzero((d2 <= np.roll(d2, 1)) & (d2 <= np.roll(d2, -1))):
        lo = thetas[max(j - 1, 0)]
        hi = thetas[min(j + 1, n - 1)]
        if lo >= hi:
            continue
        res = scipy.optimize.minimize_scalar(
            lambda t: float(np.abs(piece.value_at(np.array(t)) - lam) ** 2),
            bounds=(lo, hi),
            method="bounded",
            options={"xatol": 1e-12},
        )
        best = min(best, float(np.sqrt(res.fun)))
    return best


def is_in_essential_spectrum(
    symbol: PiecewiseSymbol, p: float, lam: complex, tol: float = SPECTRUM_DIST_TOL
) -> bool:
    """True iff lam is within tol of the essential spectrum on H^p."""
    if not 1 < p < np.inf:
        raise ValueError(f"p must lie in (1, inf), got {p}")
    for piece in symbol.pieces:
        left, right = symbol.one_sided_limits(piece.start_angle)
        if abs(lam - left) <= tol or abs(lam - right) <= tol:
            return True
    for piece in symbol.pieces:
        if _min_distance_to_piece(piece, lam) <= tol:
            return True
    alpha = TWO_PI / p
    for jump in symbol.jumps:
        zm, zp = jump.left_limit, jump.right_limit
        # Convert the distance tolerance to an angle tolerance via the
        # gradient of arg((zm - z)/(zp - z)) at lam.
        grad = abs(zm - zp) / (abs(zm - lam) * abs(zp - lam))
        w = (zm - lam) / (zp - lam)
        if _circular_diff(_normalize_arg(np.angle(w)), alpha) <= tol * grad:
            return True
    return False


def completed_symbol_curve(
    symbol: PiecewiseSymbol, p: float, resolution: int
) -> SampledCurve:
    """The closed curve tracing the range and crossing each jump by its arc.

    As theta increases through a jump t, the arc from a(t-0) to a(t+0) is
    inserted, which reduces to the plain symbol curve when no jumps exist.
    """
    jump_at = {jump.t: jump for jump in symbol.jumps}
    pts: list[np.ndarray] = []
    for piece in symbol.pieces:
        thetas = np.linspace(piece.start_angle, piece.end_angle, resolution)
        pts.append(np.asarray(piece.value_at(thetas)))
        boundary = _normalize_angle(piece.end_angle)
        jump = jump_at.get(boundary)
        if jump is not None:
            arc = ArcP(jump.left_limit, jump.right_limit, p)
            pts.append(arc_points(arc, resolution).points)
    return SampledCurve(np.concatenate(pts), closed=True)


def fredholm_index(
    symbol: PiecewiseSymbol, p: float, lam: complex, tol: float = SPECTRUM_DIST_TOL
) -> int:
    """-winding of the arc-completed symbol curve around lam.

    Raises InSpectrumError when lam lies in the essential spectrum (no
    Fredholm index exists there). The sampling is refined geometrically
    until the winding is resolved.
    """
    if is_in_essential_spectrum(symbol, p, lam, tol):
        raise InSpectrumError(f"lambda = {lam} lies in the essential spectrum")
    resolution = 256
    while resolution <= 16384:
        curve = completed_symbol_curve(symbol, p, resolution)
        try:
            return -winding_number(curve, lam)
        except UnderResolvedError:
            resolution *= 2
    raise UnderResolvedError(
        "winding not resolved at the maximum curve resolution 16384"
    )


@dataclass(frozen=True, eq=False)
class DouglasEstimate:
    """Annulus-image samples per rung of the radius ladder."""

    rungs: tuple[tuple[float, np.ndarray], ...]

    @property
    def innermost(self) -> np.ndarray:
        """Samples for the largest requested inner radius."""
        return self.rungs[-1][1]


def douglas_spectrum_estimate(
    symbol: PiecewiseSymbol, radii: list[float], grid: int
) -> DouglasEstimate:
    """Sampled harmonic-extension images of annuli r <= |z| <= 1 - 1/grid.

    For each r in the increasing ladder, the rung collects Poisson
    extension values on DOUGLAS_RADIAL_LEVELS circles between r and
    1 - 1/grid, each sampled at `grid` angles. The rungs shrink toward the
    essential spectrum as r -> 1; a true intersection of closures is not
    finitely computable, so the innermost rung is the estimate.
    """
    if not radii:
        raise ValueError("radii must be nonempty")
    if any(not 0 < r < 1 for r in radii):
        raise ValueError("radii must lie in (0, 1)")
    if list(radii) != sorted(radii):
        raise ValueError("radii must be increasing")
    if grid < 8:
        raise ValueError(f"grid must be >= 8, got {grid}")
    rho_max = 1.0 - 1.0 / grid
    k_cut = poisson_cutoff(max(rho_max, max(radii)))
    a = symbol.fourier_coefficients(-k_cut, k_cut)
    abs_k = np.abs(a.indices)
    fft_size = int(np.ceil((2 * k_cut + 1) / grid)) * grid
    rungs = []
    for r in radii:
        rhos = np.unique(np.linspace(r, max(r, rho_max), DOUGLAS_RADIAL_LEVELS))
        rings = []
        for rho in rhos:
            damped = a.coeffs * rho**abs_k
            buf = np.zeros(fft_size, dtype=complex)
            buf[np.mod(a.indices, fft_size)] = damped
            ring = (np.fft.ifft(buf) * fft_size)[:: fft_size // grid]
            rings.append(ring)
        rungs.append((float(r), np.concatenate(rings)))
    return DouglasEstimate(tuple(rungs))
