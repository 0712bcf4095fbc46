"""Projections, Toeplitz sections, Hardy norms, Poisson extension, winding."""

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from toepspec import (
    CoefficientSequence,
    GridTooCoarseError,
    NotAnalyticError,
    SampledCurve,
    SizeError,
    TooCloseError,
    TruncationError,
    UnderResolvedError,
    apply_toeplitz,
    cauchy_singular,
    complementary_project,
    constant_symbol,
    hardy_norm,
    monomial_symbol,
    poisson_extension,
    riesz_project,
    sgn_symbol,
    toeplitz_section,
    winding_number,
)
from toepspec.hardy import poisson_cutoff

TWO_PI = 2.0 * np.pi


@st.composite
def sequences(draw):
    k_min = draw(st.integers(min_value=-8, max_value=0))
    k_max = draw(st.integers(min_value=k_min, max_value=8))
    vals = draw(
        st.lists(
            st.complex_numbers(max_magnitude=100, allow_nan=False, allow_infinity=False),
            min_size=k_max - k_min + 1,
            max_size=k_max - k_min + 1,
        )
    )
    return CoefficientSequence(k_min, k_max, np.array(vals, dtype=complex))


class TestProjections:
    def test_riesz_example(self):
        c = CoefficientSequence.from_dict({-1: 5.0, 0: 1.0, 2: 3.0})
        p = riesz_project(c)
        assert p[-1] == 0 and p[0] == 1 and p[2] == 3

    def test_complementary_example(self):
        c = CoefficientSequence.from_dict({-1: 5.0, 0: 1.0, 2: 3.0})
        q = complementary_project(c)
        assert q[-1] == 5 and q[0] == 0 and q[2] == 0

    def test_cauchy_example(self):
        c = CoefficientSequence.from_dict({-1: 5.0, 0: 1.0})
        s = cauchy_singular(c)
        assert s[-1] == -5 and s[0] == 1

    def test_analytic_input_fixed_points(self):
        c = CoefficientSequence.from_dict({0: 1.0, 3: 2.0j})
        assert riesz_project(c).allclose(c, 0)
        assert complementary_project(c).allclose(CoefficientSequence.from_dict({}), 0)
        assert cauchy_singular(c).allclose(c, 0)

    @given(sequences())
    @settings(max_examples=100, deadline=None)
    def test_identities_exact(self, c):
        """P^2 = P, Q^2 = Q, P + Q = I, S = 2P - I, (I + S)/2 = P, exactly."""
        p = riesz_project(c)
        q = complementary_project(c)
        s = cauchy_singular(c)
        assert riesz_project(p).allclose(p, 0)
        assert complementary_project(q).allclose(q, 0)
        for k in range(c.k_min, c.k_max + 1):
            assert p[k] + q[k] == c[k]
            assert s[k] == 2 * p[k] - c[k]
            assert (c[k] + s[k]) / 2 == p[k]


class TestToeplitzSection:
    def test_identity_symbol_subdiagonal(self):
        T = toeplitz_section(monomial_symbol(1), 3).entries
        expected = np.zeros((3, 3), dtype=complex)
        expected[1, 0] = expected[2, 1] = 1.0
        assert np.max(np.abs(T - expected)) < 1e-12

    def test_constant_symbol_is_identity(self):
        T = toeplitz_section(constant_symbol(1.0), 5).entries
        assert np.max(np.abs(T - np.eye(5))) < 1e-12

    def test_sgn_two_by_two_pattern(self):
        a1 = 2.0 / (1j * np.pi)  # quadrature-verified in test_symbols
        T = toeplitz_section(sgn_symbol(), 2).entries
        expected = np.array([[0.0, -a1], [a1, 0.0]])
        assert np.max(np.abs(T - expected)) < 1e-13

    def test_nesting(self):
        sym = sgn_symbol()
        T4 = toeplitz_section(sym, 4).entries
        T7 = toeplitz_section(sym, 7).entries
        assert np.array_equal(T4, T7[:4, :4])

    def test_hermitian_for_real_symbol(self):
        T = toeplitz_section(sgn_symbol(), 6).entries
        assert np.max(np.abs(T - T.conj().T)) < 1e-13

    def test_size_error(self):
        with pytest.raises(SizeError):
            toeplitz_section(sgn_symbol(), 0)


class TestApplyToeplitz:
    def test_constant_symbol_acts_as_identity(self):
        f = CoefficientSequence.from_dict({0: 1.0, 2: -3.0j})
        g = apply_toeplitz(constant_symbol(1.0), f, 4)
        for k in range(5):
            assert abs(g[k] - f[k]) < 1e-14

    def test_identity_symbol_shifts_one(self):
        f = CoefficientSequence.from_dict({0: 1.0})
        g = apply_toeplitz(monomial_symbol(1), f, 3)
        assert abs(g[1] - 1.0) < 1e-14
        assert abs(g[0]) < 1e-14 and abs(g[2]) < 1e-14

    def test_sgn_against_dense_convolution_oracle(self):
        sym = sgn_symbol()
        f = CoefficientSequence.from_dict({0: 1.0, 1: 1.0})
        out_degree = 4
        g = apply_toeplitz(sym, f, out_degree)
        a = sym.fourier_coefficients(-1, out_degree)  # independent index window
        for k in range(out_degree + 1):
            oracle = sum(a[k - m] * f[m] for m in range(0, 2))
            assert abs(g[k] - oracle) < 1e-13

    def test_agrees_with_section_times_vector(self):
        sym = sgn_symbol()
        rng = np.random.default_rng(7)
        n = 12
        coeffs = rng.standard_normal(n) + 1j * rng.standard_normal(n)
        f = CoefficientSequence(0, n - 1, coeffs)
        g = apply_toeplitz(sym, f, n - 1)
        T = toeplitz_section(sym, n).entries
        assert np.max(np.abs(g.coeffs - T @ coeffs)) < 1e-12

    def test_not_analytic_rejected(self):
        f = CoefficientSequence.from_dict({-1: 1.0})
        with pytest.raises(NotAnalyticError):
            apply_toeplitz(sgn_symbol(), f, 3)


class TestHardyNorm:
    @pytest.mark.parametrize("n", [0, 1, 5])
    @pytest.mark.parametrize("p", [1.0, 2.0, 3.5])
    def test_monomial_norm_is_one(self, n, p):
        f = CoefficientSequence.from_dict({n: 1.0})
        assert abs(hardy_norm(f, p) - 1.0) < 1e-12

    def test_one_plus_z_h1_norm(self):
        """(1/2pi) int 2|cos(theta/2)| = 4/pi, checked by grid refinement."""
        f = CoefficientSequence.from_dict({0: 1.0, 1: 1.0})
        coarse = hardy_norm(f, 1.0, 1 << 16)
        fine = hardy_norm(f, 1.0, 1 << 17)
        assert abs(fine - coarse) < 1e-8  # refinement oracle has converged
        assert abs(fine - 4.0 / np.pi) < 1e-8

    def test_parseval_matches_quadrature(self):
        f = CoefficientSequence.from_dict({0: 1.0, 1: -2.0j, 4: 0.5})
        exact = hardy_norm(f, 2.0)
        assert abs(exact - np.sqrt(1 + 4 + 0.25)) < 1e-10
        values = f.values_on_grid(1 << 12)
        quad = float(np.sqrt(np.mean(np.abs(values) ** 2)))
        assert abs(exact - quad) < 1e-10

    def test_grid_too_coarse(self):
        f = CoefficientSequence.from_dict({10: 1.0})
        with pytest.raises(GridTooCoarseError):
            hardy_norm(f, 1.0, 16)

    def test_stability_under_doubling(self):
        f = CoefficientSequence.from_dict({0: 1.0, 1: 1.0, 3: -0.5j})
        a = hardy_norm(f, 1.0, 1 << 16)
        b = hardy_norm(f, 1.0, 1 << 17)
        assert abs(a - b) < 1e-8


class TestPoissonExtension:
    def test_constant(self):
        k_cut = poisson_cutoff(0.7)
        assert abs(poisson_extension(constant_symbol(1.0), 0.7, 2.0, k_cut) - 1.0) < 1e-13

    def test_identity_symbol(self):
        v = poisson_extension(monomial_symbol(1), 0.5, 0.0, poisson_cutoff(0.5))
        assert abs(v - 0.5) < 1e-13

    def test_sgn_against_poisson_kernel_quadrature(self):
        """Independent oracle: per-piece trapezoid of the Poisson integral."""
        sym = sgn_symbol()
        r, theta = 0.9, np.pi / 2
        series = poisson_extension(sym, r, theta, poisson_cutoff(r))
        oracle = 0j
        for piece in sym.pieces:
            ts = np.linspace(piece.start_angle, piece.end_angle, 50_001)
            kern = (1 - r**2) / (1 - 2 * r * np.cos(theta - ts) + r**2)
            oracle += np.trapezoid(piece.value_at(ts) * kern, ts) / TWO_PI
        assert abs(series - oracle) < 1e-8

    def test_sgn_interior_approach(self):
        v = poisson_extension(sgn_symbol(), 0.999, np.pi / 2, poisson_cutoff(0.999))
        assert abs(v - 1.0) < 1e-3

    def test_truncation_error(self):
        with pytest.raises(TruncationError):
            poisson_extension(sgn_symbol(), 0.9, 0.0, 10)


def unit_circle(n=1024, winds=1):
    th = np.linspace(0, TWO_PI * winds, n, endpoint=False)
    return SampledCurve(np.exp(1j * th), closed=True)


class TestWindingNumber:
    def test_circle_examples(self):
        assert winding_number(unit_circle(), 0j) == 1
        assert winding_number(unit_circle(), 3 + 0j) == 0
        assert winding_number(unit_circle(1024, winds=2), 0j) == 2

    def test_translation_invariance(self):
        w = 0.3 - 0.2j
        shifted = SampledCurve(unit_circle().points + w, closed=True)
        assert winding_number(shifted, w) == winding_number(unit_circle(), 0j)

    def test_refinement_invariance(self):
        for n in (64, 256, 4096):
            assert winding_number(unit_circle(n), 0.5j) == 1

    def test_too_close(self):
        with pytest.raises(TooCloseError):
            winding_number(unit_circle(), 1.0 + 1e-12j)

    def test_under_resolved(self):
        # the chord between antipodal samples passes through the query point
        two_point = SampledCurve(np.array([1.0 + 0j, -1.0 + 0j]), closed=True)
        with pytest.raises(UnderResolvedError):
            winding_number(two_point, 0j)

    def test_open_curve_rejected(self):
        open_curve = SampledCurve(np.array([0j, 1.0 + 0j]), closed=False)
        with pytest.raises(ValueError):
            winding_number(open_curve, 5.0 + 0j)
