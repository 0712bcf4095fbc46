"""Piecewise continuous symbols on the unit circle.

A symbol is a finite partition of [0, 2*pi) into arcs, each carrying a
trigonometric polynomial. This gives exact one-sided limits at the arc
boundaries and closed-form Fourier coefficients, so no Gibbs artifacts
enter the downstream spectral computations.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import EmptyError, OverlapError

TWO_PI = 2.0 * np.pi

# Boundary is a genuine jump iff the one-sided values differ by more than
# this; below it the boundary is merged as removable (rounding noise).
JUMP_TOL = 1e-10

# Two angles are the same circle point if they differ by less than this.
ANGLE_TOL = 1e-12


def _normalize_angle(t: float) -> float:
    """Reduce an angle mod 2*pi into [0, 2*pi)."""
    t = float(np.mod(t, TWO_PI))
    if t >= TWO_PI:  # np.mod can return the modulus itself for tiny negatives
        t -= TWO_PI
    return t


@dataclass(frozen=True, eq=False)
class CoefficientSequence:
    """Finitely supported Fourier coefficients c_k, k in [k_min, k_max].

    Out-of-range coefficients are implicitly zero. Instances are immutable;
    the backing array is marked read-only.
    """

    k_min: int
    k_max: int
    coeffs: np.ndarray

    def __post_init__(self):
        if self.k_min > self.k_max:
            raise ValueError(f"k_min={self.k_min} > k_max={self.k_max}")
        arr = np.asarray(self.coeffs, dtype=complex)
        if arr.shape != (self.k_max - self.k_min + 1,):
            raise ValueError(
                f"need {self.k_max - self.k_min + 1} coefficients, got shape {arr.shape}"
            )
        arr = arr.copy()
        arr.setflags(write=False)
        object.__setattr__(self, "coeffs", arr)

    @classmethod
    def from_dict(cls, entries: dict[int, complex]) -> "CoefficientSequence":
        """Build from a sparse {k: c_k} mapping."""
        if not entries:
            return cls(0, 0, np.zeros(1, dtype=complex))
        k_min, k_max = min(entries), max(entries)
        coeffs = np.zeros(k_max - k_min + 1, dtype=complex)
        for k, v in entries.items():
            coeffs[k - k_min] = v
        return cls(k_min, k_max, coeffs)

    def __getitem__(self, k: int) -> complex:
        if self.k_min <= k <= self.k_max:
            return complex(self.coeffs[k - self.k_min])
        return 0j

    @property
    def indices(self) -> np.ndarray:
        return np.arange(self.k_min, self.k_max + 1)

    def restricted(self, k_min: int, k_max: int) -> "CoefficientSequence":
        """The same sequence viewed on [k_min, k_max], zero-padded."""
        coeffs = np.zeros(k_max - k_min + 1, dtype=complex)
        lo = max(k_min, self.k_min)
        hi = min(k_max, self.k_max)
        if lo <= hi:
            coeffs[lo - k_min : hi - k_min + 1] = self.coeffs[
                lo - self.k_min : hi - self.k_min + 1
            ]
        return CoefficientSequence(k_min, k_max, coeffs)

    def conjugate(self) -> "CoefficientSequence":
        """Coefficients of the complex conjugate function: b_k = conj(c_{-k})."""
        return CoefficientSequence(-self.k_max, -self.k_min, np.conj(self.coeffs[::-1]))

    def allclose(self, other: "CoefficientSequence", tol: float = 1e-12) -> bool:
        """Compare as functions: equal coefficients on the union range."""
        k_min = min(self.k_min, other.k_min)
        k_max = max(self.k_max, other.k_max)
        a = self.restricted(k_min, k_max).coeffs
        b = other.restricted(k_min, k_max).coeffs
        return bool(np.max(np.abs(a - b), initial=0.0) <= tol)

    def values_at(self, thetas: np.ndarray) -> np.ndarray:
        """Evaluate sum_k c_k e^{ik theta} at the given angles."""
        thetas = np.asarray(thetas, dtype=float)
        out = np.zeros(thetas.shape, dtype=complex)
        for k, c in zip(self.indices, self.coeffs):
            if c != 0:
                out += c * np.exp(1j * k * thetas)
        return out

    def values_on_grid(self, n: int) -> np.ndarray:
        """Values at theta_j = 2*pi*j/n via FFT synthesis; needs n >= span."""
        span = self.k_max - self.k_min + 1
        if n < span:
            raise ValueError(f"grid {n} aliases a sequence spanning {span} indices")
        buf = np.zeros(n, dtype=complex)
        buf[np.mod(self.indices, n)] = self.coeffs
        return np.fft.ifft(buf) * n


@dataclass(frozen=True)
class Piece:
    """One arc of the partition with a trigonometric-polynomial value."""

    start_angle: float
    end_angle: float
    value: CoefficientSequence

    def value_at(self, t) -> complex | np.ndarray:
        v = self.value.values_at(np.asarray(t, dtype=float))
        return complex(v) if v.ndim == 0 else v


@dataclass(frozen=True)
class JumpPoint:
    """A boundary angle where the one-sided limits differ."""

    t: float
    left_limit: complex
    right_limit: complex

    @property
    def gap(self) -> float:
        return abs(self.left_limit - self.right_limit)


@dataclass(frozen=True, eq=False)
class PiecewiseSymbol:
    """A piecewise continuous symbol with derived, classified jump list."""

    pieces: tuple[Piece, ...]
    jumps: tuple[JumpPoint, ...] = field(init=False)

    def __post_init__(self):
        starts = [p.start_angle for p in self.pieces]
        jumps = []
        for i, piece in enumerate(self.pieces):
            t = piece.start_angle
            left = self.pieces[i - 1].value_at(t)  # i=0 wraps to the last piece
            right = piece.value_at(t)
            if abs(left - right) > JUMP_TOL:
                jumps.append(JumpPoint(t, left, right))
        object.__setattr__(self, "jumps", tuple(jumps))
        object.__setattr__(self, "_starts", np.asarray(starts))

    @property
    def degree(self) -> int:
        """Largest |k| carried by any piece."""
        return max(max(abs(p.value.k_min), abs(p.value.k_max)) for p in self.pieces)

    def piece_index_at(self, t: float) -> int:
        t = _normalize_angle(t)
        idx = int(np.searchsorted(self._starts, t, side="right")) - 1
        return max(idx, 0)

    def evaluate(self, t: float) -> complex:
        """Value at angle t; at a jump returns the right limit."""
        t = _normalize_angle(t)
        return complex(self.pieces[self.piece_index_at(t)].value_at(t))

    def sample_values(self, thetas: np.ndarray) -> np.ndarray:
        """Vectorized evaluate (right-limit convention at boundaries)."""
        thetas = np.mod(np.asarray(thetas, dtype=float), TWO_PI)
        idx = np.searchsorted(self._starts, thetas, side="right") - 1
        idx = np.maximum(idx, 0)
        out = np.empty(thetas.shape, dtype=complex)
        for i, piece in enumerate(self.pieces):
            mask = idx == i
            if np.any(mask):
                out[mask] = piece.value_at(thetas[mask])
        return out

    def one_sided_limits(self, t: float) -> tuple[complex, complex]:
        """(a(t-0), a(t+0)); equal unless t is a jump boundary."""
        t = _normalize_angle(t)
        for i, piece in enumerate(self.pieces):
            s = piece.start_angle
            if min(abs(t - s), TWO_PI - abs(t - s)) <= ANGLE_TOL:
                left = complex(self.pieces[i - 1].value_at(s))
                right = complex(piece.value_at(s))
                return left, right
        v = self.evaluate(t)
        return v, v

    def fourier_coefficients(self, k_min: int, k_max: int) -> CoefficientSequence:
        """Exact a_k = (1/2pi) int a(e^{i theta}) e^{-ik theta} d theta.

        Each piece contributes sum_m c_m * int_s^e e^{i(m-k)theta} d theta,
        integrated in closed form, so the result is exact to rounding.
        """
        if k_min > k_max:
            raise ValueError(f"k_min={k_min} > k_max={k_max}")
        ks = np.arange(k_min, k_max + 1)
        acc = np.zeros(ks.shape, dtype=complex)
        for piece in self.pieces:
            s, e = piece.start_angle, piece.end_angle
            for m, c in zip(piece.value.indices, piece.value.coeffs):
                if c == 0:
                    continue
                n = m - ks
                term = np.empty(ks.shape, dtype=complex)
                zero = n == 0
                term[zero] = e - s
                nz = n[~zero]
                term[~zero] = (np.exp(1j * nz * e) - np.exp(1j * nz * s)) / (1j * nz)
                acc += c * term
        return CoefficientSequence(k_min, k_max, acc / TWO_PI)

    def shifted(self, c: complex) -> "PiecewiseSymbol":
        """The symbol a + c (adds c to every piece's constant coefficient)."""
        pieces = []
        for piece in self.pieces:
            val = piece.value
            k_min, k_max = min(val.k_min, 0), max(val.k_max, 0)
            coeffs = val.restricted(k_min, k_max).coeffs.copy()
            coeffs[-k_min] += c
            pieces.append(
                Piece(piece.start_angle, piece.end_angle, CoefficientSequence(k_min, k_max, coeffs))
            )
        return PiecewiseSymbol(tuple(pieces))


def make_piecewise_symbol(
    pieces: list[tuple[float, float, CoefficientSequence]],
) -> PiecewiseSymbol:
    """Validate and build a symbol from (start_angle, end_angle, value) triples.

    The pieces must partition [0, 2*pi) after mod-2*pi reduction: sorted by
    start, each end meeting the next start to within 1e-9, with total measure
    2*pi. Boundary angles are snapped so the partition is exact. Jump
    classification happens in the constructor.

    Raises:
        EmptyError: no pieces given.
        OverlapError: pieces overlap or leave a gap.
    """
    if not pieces:
        raise EmptyError("a symbol needs at least one piece")
    norm = []
    for start, end, value in pieces:
        s = _normalize_angle(start)
        e = _normalize_angle(end)
        if e <= ANGLE_TOL:  # end at 0 means the full sweep reaches 2*pi
            e = TWO_PI
        norm.append((s, e, value))
    norm.sort(key=lambda item: item[0])

    match_tol = 1e-9
    if abs(norm[0][0]) > match_tol:
        raise OverlapError(f"partition must start at angle 0, got {norm[0][0]}")
    snapped = []
    cursor = 0.0
    for i, (s, e, value) in enumerate(norm):
        if abs(s - cursor) > match_tol:
            kind = "overlap" if s < cursor else "gap"
            raise OverlapError(f"{kind} at angle {cursor}: next piece starts at {s}")
        target = TWO_PI if i == len(norm) - 1 else norm[i + 1][0]
        if i == len(norm) - 1 and abs(e - TWO_PI) > match_tol:
            raise OverlapError(f"last piece ends at {e}, not 2*pi")
        if e < target - match_tol or e > target + match_tol:
            kind = "gap" if e < target else "overlap"
            raise OverlapError(f"{kind} after piece ending at {e}")
        snapped.append(Piece(cursor, target, value))
        cursor = target
    return PiecewiseSymbol(tuple(snapped))
