"""Symbol construction, evaluation, one-sided limits, Fourier coefficients."""

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from toepspec import (
    CoefficientSequence,
    EmptyError,
    OverlapError,
    constant_symbol,
    make_piecewise_symbol,
    monomial_symbol,
    sgn_symbol,
    trig_poly_symbol,
)

TWO_PI = 2.0 * np.pi


def quadrature_fourier_oracle(symbol, k, n_per_piece=200_000):
    """Independent a_k via per-piece trapezoid quadrature (smooth integrands)."""
    total = 0j
    for piece in symbol.pieces:
        thetas = np.linspace(piece.start_angle, piece.end_angle, n_per_piece)
        vals = piece.value_at(thetas) * np.exp(-1j * k * thetas)
        total += np.trapezoid(vals, thetas)
    return total / TWO_PI


class TestConstruction:
    def test_constant_symbol_has_no_jumps(self):
        sym = constant_symbol(1.0)
        assert len(sym.pieces) == 1
        assert sym.jumps == ()

    def test_sgn_jumps_at_zero_and_pi(self):
        sym = sgn_symbol()
        assert [j.t for j in sym.jumps] == [0.0, np.pi]
        assert sym.jumps[0].left_limit == -1
        assert sym.jumps[0].right_limit == 1

    def test_same_polynomial_on_both_sides_is_removable(self):
        c = CoefficientSequence.from_dict({1: 1.0})
        sym = make_piecewise_symbol([(0.0, np.pi, c), (np.pi, TWO_PI, c)])
        assert sym.jumps == ()

    def test_empty_piece_list_rejected(self):
        with pytest.raises(EmptyError):
            make_piecewise_symbol([])

    def test_gap_rejected(self):
        c = CoefficientSequence.from_dict({0: 1.0})
        with pytest.raises(OverlapError):
            make_piecewise_symbol([(0.0, 1.0, c), (2.0, TWO_PI, c)])

    def test_overlap_rejected(self):
        c = CoefficientSequence.from_dict({0: 1.0})
        with pytest.raises(OverlapError):
            make_piecewise_symbol([(0.0, 4.0, c), (3.0, TWO_PI, c)])

    def test_partition_not_starting_at_zero_rejected(self):
        c = CoefficientSequence.from_dict({0: 1.0})
        with pytest.raises(OverlapError):
            make_piecewise_symbol([(1.0, TWO_PI, c)])

    def test_partition_measure_is_two_pi(self):
        sym = sgn_symbol()
        total = sum(p.end_angle - p.start_angle for p in sym.pieces)
        assert abs(total - TWO_PI) < 1e-12


class TestEvaluate:
    def test_sgn_values(self):
        sym = sgn_symbol()
        assert sym.evaluate(np.pi / 2) == 1
        assert sym.evaluate(0.0) == 1  # right-limit convention at the jump
        assert sym.evaluate(3 * np.pi / 2) == -1

    def test_identity_symbol_at_pi(self):
        assert abs(monomial_symbol(1).evaluate(np.pi) - (-1)) < 1e-15

    def test_angle_reduction_mod_two_pi(self):
        sym = sgn_symbol()
        assert sym.evaluate(np.pi / 2 + 4 * np.pi) == sym.evaluate(np.pi / 2)

    def test_sample_values_matches_scalar_evaluate(self):
        sym = trig_poly_symbol({-2: 0.5j, 0: 1.0, 3: -0.25})
        thetas = np.linspace(0, TWO_PI, 37)
        sampled = sym.sample_values(thetas)
        for t, v in zip(thetas, sampled):
            assert abs(v - sym.evaluate(t)) < 1e-14


class TestOneSidedLimits:
    def test_sgn_limits(self):
        sym = sgn_symbol()
        assert sym.one_sided_limits(0.0) == (-1, 1)
        assert sym.one_sided_limits(np.pi) == (1, -1)

    def test_constant_limits_equal_everywhere(self):
        sym = constant_symbol(2.0 - 1.0j)
        for t in (0.0, 1.0, np.pi, 5.5):
            left, right = sym.one_sided_limits(t)
            assert left == right == 2.0 - 1.0j

    def test_interior_point_limits_equal(self):
        sym = sgn_symbol()
        left, right = sym.one_sided_limits(1.0)
        assert left == right == 1

    def test_removable_boundary_limits_agree(self):
        c = CoefficientSequence.from_dict({1: 1.0})
        sym = make_piecewise_symbol([(0.0, np.pi, c), (np.pi, TWO_PI, c)])
        left, right = sym.one_sided_limits(np.pi)
        assert abs(left - right) <= 1e-10


class TestFourierCoefficients:
    def test_constant_symbol(self):
        c = constant_symbol(1.0).fourier_coefficients(-4, 4)
        for k in range(-4, 5):
            assert abs(c[k] - (1.0 if k == 0 else 0.0)) < 1e-15

    def test_sgn_against_quadrature_oracle_and_closed_form(self):
        sym = sgn_symbol()
        c = sym.fourier_coefficients(-5, 5)
        for k in range(-5, 6):
            oracle = quadrature_fourier_oracle(sym, k)
            closed = 0.0 if k % 2 == 0 else 2.0 / (1j * np.pi * k)
            assert abs(oracle - closed) < 1e-9  # oracle validates the formula
            assert abs(c[k] - closed) < 1e-14

    def test_identity_symbol(self):
        c = monomial_symbol(1).fourier_coefficients(-3, 3)
        for k in range(-3, 4):
            assert abs(c[k] - (1.0 if k == 1 else 0.0)) < 1e-12

    def test_single_piece_round_trip(self):
        entries = {-3: 1.5j, -1: 2.0, 0: -0.5, 2: 1.0 - 1.0j}
        sym = trig_poly_symbol(entries)
        c = sym.fourier_coefficients(-5, 5)
        for k in range(-5, 6):
            assert abs(c[k] - entries.get(k, 0.0)) < 1e-12

    def test_multi_piece_round_trip_against_oracle(self):
        a = CoefficientSequence.from_dict({0: 1.0, 1: 0.5j})
        b = CoefficientSequence.from_dict({-1: 0.25, 0: -1.0})
        sym = make_piecewise_symbol([(0.0, 2.0, a), (2.0, TWO_PI, b)])
        c = sym.fourier_coefficients(-3, 3)
        for k in range(-3, 4):
            assert abs(c[k] - quadrature_fourier_oracle(sym, k)) < 1e-9


@st.composite
def coefficient_sequences(draw):
    k_min = draw(st.integers(min_value=-6, max_value=0))
    k_max = draw(st.integers(min_value=k_min, max_value=6))
    vals = draw(
        st.lists(
            st.complex_numbers(max_magnitude=10, allow_nan=False, allow_infinity=False),
            min_size=k_max - k_min + 1,
            max_size=k_max - k_min + 1,
        )
    )
    return CoefficientSequence(k_min, k_max, np.array(vals, dtype=complex))


@given(coefficient_sequences())
@settings(max_examples=50, deadline=None)
def test_conjugation_property(c):
    """Coefficients of the conjugate symbol are conj(a_{-k})."""
    sym = make_piecewise_symbol([(0.0, TWO_PI, c)])
    conj_sym = make_piecewise_symbol([(0.0, TWO_PI, c.conjugate())])
    a = sym.fourier_coefficients(-8, 8)
    b = conj_sym.fourier_coefficients(-8, 8)
    for k in range(-8, 9):
        assert abs(b[k] - np.conj(a[-k])) < 1e-10


@given(coefficient_sequences(), st.floats(min_value=0.0, max_value=20.0))
@settings(max_examples=50, deadline=None)
def test_evaluate_equals_polynomial_value(c, t):
    sym = make_piecewise_symbol([(0.0, TWO_PI, c)])
    direct = sum(c[k] * np.exp(1j * k * t) for k in range(c.k_min, c.k_max + 1))
    assert abs(sym.evaluate(t) - direct) < 1e-9 * (1 + abs(direct))


class TestCoefficientSequence:
    def test_out_of_range_is_zero(self):
        c = CoefficientSequence.from_dict({0: 1.0})
        assert c[5] == 0 and c[-5] == 0

    def test_restricted_view(self):
        c = CoefficientSequence.from_dict({-1: 2.0, 3: 1.0j})
        r = c.restricted(0, 4)
        assert r[-1] == 0 and r[3] == 1.0j

    def test_values_on_grid_matches_direct(self):
        c = CoefficientSequence.from_dict({-2: 1.0, 1: -0.5j})
        n = 16
        grid = c.values_on_grid(n)
        thetas = TWO_PI * np.arange(n) / n
        direct = c.values_at(thetas)
        assert np.max(np.abs(grid - direct)) < 1e-12

    def test_shifted_symbol_subtracts_from_constant_term(self):
        sym = sgn_symbol().shifted(-2.0)
        assert sym.evaluate(np.pi / 2) == -1.0
        assert sym.evaluate(3 * np.pi / 2) == -3.0
