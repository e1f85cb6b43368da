import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from fractions import Fraction

from olshanski import InvalidSpectrumError, SingularArgumentError, Spectrum, kernel_b, kernel_b2, kernel_f, kernel_g
from olshanski.spectral import B2_SERIES_RADIUS, SERIES_RADIUS, fhat, fourier_fhat_check

from conftest import rand_vec


def direct_f(z):
    return 2 * z / (np.exp(z) - np.exp(-z))


def direct_g(z):
    return (np.exp(z) + np.exp(-z) - 2) / (1j * (np.exp(z) - np.exp(-z)))


class TestKernelValues:
    def test_removable_points(self):
        assert kernel_f(0) == 1
        assert kernel_g(0) == 0
        assert kernel_b(0) == 1

    def test_f_at_two(self):
        assert kernel_f(2) == pytest.approx(4 / (math.exp(2) - math.exp(-2)), abs=1e-15)
        assert kernel_f(2).real == pytest.approx(0.551441, abs=1e-6)

    def test_g_at_two(self):
        assert kernel_g(2) == pytest.approx(-1j * math.tanh(1), abs=1e-15)
        assert abs(kernel_g(2) - direct_g(2)) < 1e-13

    def test_b_at_one(self):
        assert kernel_b(1) == pytest.approx(math.e - 1, abs=1e-15)
        assert kernel_b(1) == pytest.approx(sum(1 / math.factorial(k + 1) for k in range(25)), abs=1e-15)

    def test_b2_origin_and_identity(self, rng):
        assert kernel_b2(0) == 0.5
        w = rng.normal(size=20) * 3 + 1j * rng.normal(size=20) * 3
        assert np.allclose(kernel_b(w) - 1, w * kernel_b2(w), atol=1e-14, rtol=0)

    @pytest.mark.parametrize("y", [1e-9, 1e-4, 0.3, 0.49, 0.51, 2.0])
    def test_b2_imaginary_axis_exact(self, y):
        # (e^{iy} - 1 - iy) / (iy)^2 from exact rational Taylor sums
        terms = [Fraction(1, math.factorial(k + 2)) for k in range(40)]
        yf = Fraction(y)
        re = float(sum(c * (-1) ** (k // 2) * yf ** k for k, c in enumerate(terms) if k % 2 == 0))
        im = float(sum(c * (-1) ** (k // 2) * yf ** k for k, c in enumerate(terms) if k % 2 == 1))
        assert abs(kernel_b2(1j * y) - complex(re, im)) < 1e-15

    def test_b2_continuous_at_series_edge(self):
        lo, hi = B2_SERIES_RADIUS * (1 - 1e-12), B2_SERIES_RADIUS * (1 + 1e-12)
        for phase in np.exp(1j * np.linspace(0, 2 * np.pi, 9)):
            for w in (lo * phase, hi * phase):
                reference = sum(w ** k / math.factorial(k + 2) for k in range(30))
                assert abs(kernel_b2(w) - reference) < 1e-15

    @pytest.mark.parametrize("k", [1, -1, 2, 3])
    def test_poles_rejected(self, k):
        with pytest.raises(SingularArgumentError):
            kernel_f(1j * math.pi * k)
        with pytest.raises(SingularArgumentError):
            kernel_g(1j * math.pi * k + 1e-13)

    def test_near_pole_but_outside_guard_is_finite(self):
        assert np.isfinite(kernel_f(1j * math.pi + 1e-6))

    def test_large_arguments_do_not_overflow(self):
        vals = kernel_f(np.array([800.0, -800.0, 800 + 3j]))
        assert np.all(np.isfinite(vals))
        assert abs(vals[0]) < 1e-300

    def test_vectorised_matches_scalar(self, rng):
        z = rng.normal(size=7) + 1j * rng.normal(size=7)
        for k in (kernel_f, kernel_g, kernel_b, kernel_b2):
            arr = k(z)
            assert arr.shape == z.shape
            assert np.allclose(arr, [k(complex(w)) for w in z], atol=0, rtol=1e-15)


@settings(max_examples=300, deadline=None)
@given(st.floats(1e-3, 4), st.floats(-3, 3), st.sampled_from([-1, 1]))
def test_parity(re, im, sign):
    z = complex(sign * re, im)
    assert abs(kernel_f(-z) - kernel_f(z)) < 1e-13
    assert abs(kernel_g(-z) + kernel_g(z)) < 1e-13


@settings(max_examples=200, deadline=None)
@given(st.floats(-3, 3), st.floats(-3, 3))
def test_g_quotient_identity(re, im):
    z = complex(re, im)
    ez, emz = np.exp(z), np.exp(-z)
    assert abs(1j * kernel_g(z) * (ez - emz) - (ez + emz - 2)) < 1e-12


@pytest.mark.parametrize("phase", np.exp(2j * np.pi * np.linspace(0, 1, 9)))
def test_series_straddle(phase):
    inside, outside = SERIES_RADIUS * (1 - 1e-12) * phase, SERIES_RADIUS * (1 + 1e-12) * phase
    for k in (kernel_f, kernel_g, kernel_b):
        assert abs(k(inside) - k(outside)) < 1e-12
    # direct formulas are still accurate at the switch radius, so both branches can be compared
    assert abs(kernel_f(inside) - direct_f(inside)) < 1e-12
    assert abs(kernel_g(outside) - direct_g(outside)) < 1e-12


class TestFourier:
    def test_density_at_zero(self):
        assert fhat(0.0) == pytest.approx(math.pi / 4, abs=1e-15)

    @pytest.mark.parametrize("x", [0.0, 2.0, -1.5])
    def test_identity(self, x):
        quad, exact = fourier_fhat_check(x, T=40, steps=8000)
        assert abs(quad - exact) < 1e-8

    def test_at_zero_is_one(self):
        quad, _ = fourier_fhat_check(0.0, T=40, steps=8000)
        assert quad == pytest.approx(1.0, abs=1e-8)

    def test_parameters_validated(self):
        with pytest.raises(ValueError):
            fourier_fhat_check(0.0, T=10, steps=8000)
        with pytest.raises(ValueError):
            fourier_fhat_check(0.0, T=40, steps=100)


class TestSpectrum:
    @pytest.mark.parametrize("bad", [[], [0.0, 1.0], [-1.0], [float("nan")], [float("inf")]])
    def test_validation(self, bad):
        with pytest.raises(InvalidSpectrumError):
            Spectrum(np.array(bad))

    def test_parse_forms(self):
        assert Spectrum.parse("1, 2.5") == Spectrum.parse("[1, 2.5]")
        assert Spectrum.parse("3").n == 1
        with pytest.raises(InvalidSpectrumError):
            Spectrum.parse("[1, \"a\"]")
        with pytest.raises(InvalidSpectrumError):
            Spectrum.parse("1,x")

    def test_eigs_are_read_only(self, sp):
        with pytest.raises(ValueError):
            sp.eigs[0] = 5

    def test_vector_length_checked(self, sp):
        with pytest.raises(ValueError):
            sp.vector([1, 2, 3])

    def test_gamma_is_unitary_and_periodic(self, sp, rng):
        v = rand_vec(rng)
        assert np.array_equal(sp.apply_gamma(0.0, v), v)
        assert np.linalg.norm(sp.apply_gamma(1.7, v)) == pytest.approx(np.linalg.norm(v), rel=1e-15)
        commensurable = Spectrum(np.array([1.0, 2.0]))
        assert np.allclose(commensurable.apply_gamma(2 * math.pi, v), v, atol=1e-14)

    def test_f_and_g_at_zero(self, sp, rng):
        v = rand_vec(rng)
        assert np.array_equal(sp.apply_fA(0.0, v), v)
        assert np.array_equal(sp.apply_gA(0.0, v), np.zeros(2))

    def test_f_commutes_with_gamma(self, sp, rng):
        v = rand_vec(rng)
        a = sp.apply_fA(1.3, sp.apply_gamma(0.4, v))
        b = sp.apply_gamma(0.4, sp.apply_fA(1.3, v))
        assert np.max(np.abs(a - b)) < 1e-13

    def test_f_inverse(self, sp, rng):
        for s in np.linspace(-5, 5, 41):
            v = rand_vec(rng)
            assert np.max(np.abs(sp.apply_fA(s, sp.apply_fA_inverse(s, v)) - v)) < 1e-12

    def test_skew_symmetry(self, sp, rng):
        for _ in range(50):
            s = rng.uniform(-3, 3)
            x, y = rand_vec(rng), rand_vec(rng)

            def T(v):
                return sp.apply_gA(s, sp.apply_fA_inverse(s, v))

            assert abs(np.vdot(y, T(x)).real + np.vdot(T(y), x).real) < 1e-12


class TestSeminorm:
    def test_zero(self, sp):
        assert sp.qn_seminorm(np.zeros(2), 3) == 0.0

    def test_exponential_closed_form(self):
        one = Spectrum(np.array([1.0]))
        assert one.qn_seminorm(np.array([1.0]), 2) == pytest.approx(math.exp(2), rel=1e-15)

    def test_matches_direct_sum(self, sp, rng):
        v = rand_vec(rng)
        direct = sum(3**k / math.factorial(k) * np.linalg.norm(sp.eigs**k * v) for k in range(80))
        assert sp.qn_seminorm(v, 3) == pytest.approx(direct, rel=1e-14)

    def test_rejects_nonpositive_index(self, sp):
        with pytest.raises(ValueError):
            sp.qn_seminorm(np.ones(2), 0)
