import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from olshanski import (AlgebraElement, ComplexAlgebraElement, ComplexGroupElement, ComplexOscillatorGroup,
                       CVector, GroupElement, Spectrum, UnsupportedDirectionError)

from conftest import SPECTRUM, rand_vec

G0 = ComplexOscillatorGroup(SPECTRUM)
ext = st.tuples(st.floats(-1, 1), st.floats(-1, 1)).map(lambda t: complex(*t))


def rand_cvec(rng, r=1.0):
    return CVector(rand_vec(rng, rmax=r), rand_vec(rng, rmax=r))


def rand_calg(rng, smax=3.0):
    s = smax * rng.uniform() * np.exp(2j * np.pi * rng.uniform())
    return ComplexAlgebraElement(complex(*rng.uniform(-1, 1, 2)), rand_cvec(rng), s)


def series_gamma(G, z, v, terms=80):
    total, term = CVector(v.p, v.q), CVector(v.p, v.q)
    for k in range(1, terms):
        term = G.D_C(term) * (z / k)
        total = total + term
    return total


class TestCVector:
    def test_external_scalar(self, rng):
        v = rand_cvec(rng)
        w = v * 1j
        assert np.array_equal(w.p, -v.q) and np.array_equal(w.q, v.p)
        assert (v * 1j * 1j).distance(-v) == 0

    def test_shape_mismatch(self):
        with pytest.raises(ValueError):
            CVector(np.zeros(2), np.zeros(3))

    def test_sigma(self, G, rng):
        x = rand_vec(rng)
        assert G.sigma(CVector.real(x)).distance(CVector.real(x)) == 0
        v = rand_cvec(rng)
        assert G.sigma(G.sigma(v)).distance(v) == 0


class TestForms:
    def test_real_vectors(self, G, R, rng):
        x, y = rand_vec(rng), rand_vec(rng)
        X, Y = CVector.real(x), CVector.real(y)
        assert G.inner_C(X, Y) == pytest.approx(np.vdot(y, x).real, abs=1e-15)
        assert G.omega_C(X, Y) == pytest.approx(R.omega(x, y), abs=1e-15)

    def test_norm_of_real_vector(self, G, rng):
        x = CVector.real(rand_vec(rng))
        assert G.inner_C(x, G.sigma(x)) == pytest.approx(np.vdot(x.p, x.p).real, abs=1e-15)

    def test_hermitian(self, G, rng):
        v, w = rand_cvec(rng), rand_cvec(rng)
        assert G.inner_C(v, w) == pytest.approx(np.conj(G.inner_C(w, v)), abs=1e-15)
        assert G.inner_C(v, v).imag == pytest.approx(0, abs=1e-15)
        assert G.inner_C(v, v).real > 0

    def test_omega_skew(self, G, rng):
        v = rand_cvec(rng)
        assert abs(G.omega_C(v, v)) < 1e-15

    def test_omega_identity(self, G, rng):
        for _ in range(50):
            x, y = rand_cvec(rng), rand_cvec(rng)
            assert abs(G.omega_C(x, y) + G.inner_C(G.D_C(x), G.sigma(y))) < 1e-12


class TestGammaC:
    def test_real_time(self, sp, G, rng):
        x = rand_vec(rng)
        got = G.gamma_C(0.8, CVector.real(x))
        assert got.distance(CVector.real(sp.apply_gamma(0.8, x))) < 1e-15

    def test_hand_example(self):
        G = ComplexOscillatorGroup(Spectrum(np.array([1.0])))
        got = G.gamma_C(1j * math.log(2), CVector.real(np.array([1.0])))
        assert got.distance(CVector(np.array([1.25]), np.array([0.75j]))) < 1e-15
        assert got.distance(series_gamma(G, 1j * math.log(2), CVector.real(np.array([1.0])))) < 1e-14

    def test_against_series(self, G, rng):
        for _ in range(20):
            z = complex(*rng.uniform(-1.5, 1.5, 2))
            v = rand_cvec(rng)
            assert G.gamma_C(z, v).distance(series_gamma(G, z, v)) < 1e-12

    @settings(max_examples=100, deadline=None)
    @given(ext, ext)
    def test_action(self, z1, z2):
        v = CVector(np.array([0.3 + 0.1j, -0.2j]), np.array([0.5, 0.1 - 0.4j]))
        a, b = G0.gamma_C(z1, G0.gamma_C(z2, v)), G0.gamma_C(z1 + z2, v)
        assert a.distance(b) < 1e-12

    def test_preserves_bilinear_norm(self, G, rng):
        for _ in range(50):
            z = complex(*rng.uniform(-1, 1, 2))
            x = rand_cvec(rng)
            gx = G.gamma_C(z, x)
            assert abs(G.inner_C(gx, G.sigma(gx)) - G.inner_C(x, G.sigma(x))) < 1e-11

    def test_apply_series_matches_gamma(self, G, rng):
        v, z = rand_cvec(rng), complex(0.4, -0.9)
        assert G.apply_series(np.exp, z, v).distance(G.gamma_C(z, v)) < 1e-14


class TestGroupLaw:
    def test_real_restriction(self, G, R, rng):
        g = GroupElement(0.3, rand_vec(rng), 1.2)
        h = GroupElement(-1.1, rand_vec(rng), 0.4)
        assert G.mul(G.embed(g), G.embed(h)).distance(G.embed(R.mul(g, h))) == 0

    def test_inverse(self, G, rng):
        g = G.exp(rand_calg(rng))
        assert G.mul(g, G.inv(g)).distance(G.identity) < 1e-12

    def test_associativity(self, G, rng):
        for _ in range(30):
            g, h, k = (G.exp(rand_calg(rng, smax=1.0)) for _ in range(3))
            assert G.mul(G.mul(g, h), k).distance(G.mul(g, G.mul(h, k))) < 1e-11


class TestExpC:
    def test_trivial_cases(self, G, rng):
        zero = CVector.real(np.zeros(2))
        X = ComplexAlgebraElement(0.5 + 1j, zero, 2 - 1j)
        assert G.exp(X).distance(ComplexGroupElement(X.z, zero, X.s)) < 1e-15
        imag = ComplexAlgebraElement.imag(AlgebraElement(1.5, np.zeros(2), 0.7))
        assert G.exp(imag).distance(ComplexGroupElement(1.5j, zero, 0.7j)) < 1e-15
        v = rand_cvec(rng)
        assert G.exp(ComplexAlgebraElement(1.0, v, 0.0)).distance(ComplexGroupElement(1.0, v, 0.0)) == 0

    def test_restricts_to_real_exp(self, G, R, rng):
        X = AlgebraElement(0.7, rand_vec(rng), -2.1)
        assert G.exp(ComplexAlgebraElement.from_real(X)).distance(G.embed(R.exp(X))) < 1e-14

    def test_against_quadrature(self, G, rng):
        for _ in range(10):
            X = rand_calg(rng)
            ref = G.exp_quadrature(X, steps=400)
            assert G.exp(X).distance(ref) / max(1.0, ref.maxabs()) < 1e-8

    def test_one_parameter(self, G, rng):
        X = rand_calg(rng, smax=1.0)
        lhs = G.mul(G.exp(X * 0.3), G.exp(X * (0.5 - 0.2j)))
        assert lhs.distance(G.exp(X * (0.8 - 0.2j))) < 1e-12

    def test_kernel_identity(self, sp, G, rng):
        for _ in range(100):
            s = rng.uniform(-3, 3)
            x = rand_vec(rng)
            finv = sp.apply_fA_inverse(s, x)
            got = G.B(1j * s, CVector.imag(x))
            assert got.distance(CVector(sp.apply_gA(s, finv), finv)) < 1e-11


class TestStar:
    def test_real_points_go_to_inverse(self, G, rng):
        g = G.embed(GroupElement(0.4, rand_vec(rng), -1.0))
        assert G.star(g).distance(G.inv(g)) == 0

    def test_involutive_and_antiautomorphism(self, G, rng):
        for _ in range(30):
            g, h = G.exp(rand_calg(rng, 1.0)), G.exp(rand_calg(rng, 1.0))
            assert G.star(G.star(g)).distance(g) < 1e-12
            assert G.star(G.mul(g, h)).distance(G.mul(G.star(h), G.star(g))) < 1e-11

    def test_polar_identity(self, G, R, rng):
        for _ in range(30):
            g = GroupElement(rng.uniform(-3, 3), rand_vec(rng), rng.uniform(-3, 3))
            w = AlgebraElement(rng.uniform(-3, 3), rand_vec(rng), rng.uniform(0.1, 3))
            e = G.exp(ComplexAlgebraElement.imag(w))
            lhs = G.star(G.mul(G.embed(g), e))
            assert lhs.distance(G.mul(e, G.embed(R.inv(g)))) < 1e-11


class TestLogDerivative:
    def fd(self, G, X, Y, h=1e-5):
        base = G.inv(G.exp(X))
        plus, minus = G.mul(base, G.exp(X + Y * h)), G.mul(base, G.exp(X - Y * h))
        return ComplexAlgebraElement((plus.z - minus.z) / (2 * h), (plus.v - minus.v) * (1 / (2 * h)),
                                     (plus.s - minus.s) / (2 * h))

    def test_finite_difference(self, G, rng):
        zero = CVector.real(np.zeros(2))
        for _ in range(30):
            X = ComplexAlgebraElement(1j * rng.uniform(-2, 2), zero, 1j * rng.uniform(-2, 2))
            Y = rand_calg(rng, 1.0)
            assert G.log_derivative(X, Y).distance(self.fd(G, X, Y)) < 1e-6

    def test_central_directions_unchanged(self, G):
        zero = CVector.real(np.zeros(2))
        X = ComplexAlgebraElement(0.5j, zero, 1.5j)
        Y = ComplexAlgebraElement(2j, zero, -1j)
        assert G.log_derivative(X, Y).distance(Y) == 0

    def test_choice_of_correction_gives_imaginary_plus_real(self, sp, G, rng):
        x0, x2 = 0.3, 1.7
        y0, y1, y2 = 0.4, rand_vec(rng), -0.8
        X = ComplexAlgebraElement.imag(AlgebraElement(x0, np.zeros(2), x2))
        shifted = AlgebraElement(y0, sp.apply_fA(-x2, y1), y2)
        got = G.log_derivative(X, ComplexAlgebraElement.imag(shifted))
        want = ComplexAlgebraElement(1j * y0, CVector(sp.apply_gA(-x2, y1), y1), 1j * y2)
        assert got.distance(want) < 1e-12

    def test_rejects_non_cartan_base(self, G, rng):
        X = ComplexAlgebraElement(0, rand_cvec(rng), 1j)
        with pytest.raises(UnsupportedDirectionError):
            G.log_derivative(X, X)


def test_seminorm_growth_bound(sp, G, rng):
    for _ in range(300):
        m = int(rng.integers(1, 4))
        z = 2.0 * rng.uniform() * np.exp(2j * np.pi * rng.uniform())
        v = rand_cvec(rng)
        assert sp.qn_seminorm(G.gamma_C(z, v), m) <= sp.qn_seminorm(v, m + math.ceil(abs(z))) * (1 + 1e-12)
