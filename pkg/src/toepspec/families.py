"""Named symbol constructors shared by tests, docs and the CLI examples."""

from __future__ import annotations

import numpy as np

from .symbols import CoefficientSequence, PiecewiseSymbol, make_piecewise_symbol

TWO_PI = 2.0 * np.pi


def constant_symbol(c: complex) -> PiecewiseSymbol:
    """The constant symbol a = c on the whole circle."""
    return make_piecewise_symbol([(0.0, TWO_PI, CoefficientSequence.from_dict({0: c}))])


def monomial_symbol(k: int, c: complex = 1.0) -> PiecewiseSymbol:
    """The symbol a(e^{i t}) = c e^{ikt}; k=1 is the identity a(t)=t."""
    return make_piecewise_symbol([(0.0, TWO_PI, CoefficientSequence.from_dict({k: c}))])


def trig_poly_symbol(entries: dict[int, complex]) -> PiecewiseSymbol:
    """A single-piece symbol with the given Fourier coefficients."""
    return make_piecewise_symbol([(0.0, TWO_PI, CoefficientSequence.from_dict(entries))])


def sgn_symbol() -> PiecewiseSymbol:
    """+1 on the upper half circle, -1 on the lower; jumps at 0 and pi."""
    plus = CoefficientSequence.from_dict({0: 1.0})
    minus = CoefficientSequence.from_dict({0: -1.0})
    return make_piecewise_symbol([(0.0, np.pi, plus), (np.pi, TWO_PI, minus)])


def step_symbol(t0: float, t1: float, left: complex, right: complex) -> PiecewiseSymbol:
    """A two-piece constant symbol: `right` on [t0, t1), `left` elsewhere."""
    a = CoefficientSequence.from_dict({0: right})
    b = CoefficientSequence.from_dict({0: left})
    return make_piecewise_symbol([(0.0, t0, b), (t0, t1, a), (t1, TWO_PI, b)])


def lip_log_profile(thetas: np.ndarray) -> np.ndarray:
    """The canonical log-Lipschitz modulus function 1/log(8/d(theta)).

    d(theta) = |e^{i theta} - 1| = 2|sin(theta/2)| is the chordal distance
    to the point 1; the profile is continuous with value 0 there and has
    modulus of continuity O(1/log(1/d)) but is not Lipschitz.
    """
    thetas = np.asarray(thetas, dtype=float)
    d = 2.0 * np.abs(np.sin(thetas / 2.0))
    out = np.zeros_like(d)
    pos = d > 0
    out[pos] = 1.0 / np.log(8.0 / d[pos])
    return out


def lip_log_exemplar_symbol(degree: int = 32, fft_size: int = 2**16) -> PiecewiseSymbol:
    """Trig-polynomial truncation of `lip_log_profile` (a bounded control).

    Coefficients come from an FFT of the profile at `fft_size` samples,
    truncated to |k| <= degree. The recipe is deterministic, so repeated
    calls build identical symbols.
    """
    thetas = TWO_PI * np.arange(fft_size) / fft_size
    coeffs_full = np.fft.fft(lip_log_profile(thetas)) / fft_size
    entries: dict[int, complex] = {}
    for k in range(-degree, degree + 1):
        entries[k] = complex(coeffs_full[k % fft_size])
    return trig_poly_symbol(entries)
