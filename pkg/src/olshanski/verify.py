"""Randomised verification suites and their machine-readable reports.

A suite is a list of named checks.  Each check draws its own samples from a
generator seeded by ``(seed, crc32(check name))``, so adding or reordering
checks never changes the samples of another check, and every report is a
pure function of its configuration.

Sample counts are quoted for ``trials = 100`` and scale linearly with the
``trials`` setting (never below one).  Sampling boxes:

* exponential checks: ``t, s`` in ``[-3, 3]``, ``||x|| <= 1``;
* polar checks: ``|t| <= 3``, ``||x|| <= 3``, polar ``s`` in ``[0.1, 3]``,
  ``Re r`` in ``[-3, 3]``;
* Fock checks: ``||x|| <= 1``, polar ``s`` in ``[0.5, 3]``.
"""

from __future__ import annotations

import json
import math
import time
import zlib
from dataclasses import dataclass, field
from typing import Callable, Iterator

import numpy as np

from . import cones, jsonio
from .cones import ConeParameter
from .fock import FockSpace
from .group_complex import ComplexAlgebraElement, ComplexGroupElement, ComplexOscillatorGroup, CVector
from .group_real import AlgebraElement, CoAlgebraElement, GroupElement, OscillatorGroup
from .semigroup import Semigroup
from .spectral import Spectrum, fourier_fhat_check, kernel_b, kernel_f, kernel_g, SERIES_RADIUS

SUITES = ("exp", "group", "complex", "cones", "polar", "semigroup", "fock", "fourier")
DEFAULT_D_VALUES = (-1.0, 0.0, 1.0, math.inf)


class UnknownSuiteError(ValueError):
    pass


@dataclass(frozen=True)
class Config:
    spectrum: Spectrum = field(default_factory=lambda: Spectrum(np.array([1.0, 2.5])))
    seed: int = 42
    trials: int = 100
    tol: float | None = None
    truncation: int = 30
    cones: tuple[ConeParameter, ...] = tuple(ConeParameter(d) for d in DEFAULT_D_VALUES)
    omit_timing: bool = False

    def count(self, base: int) -> int:
        return max(1, math.ceil(base * self.trials / 100))


@dataclass
class Case:
    err: float
    expected: object
    got: object
    input: dict


@dataclass
class Check:
    name: str
    tolerance: float
    base: int
    body: Callable[["Context", np.random.Generator, int], Iterator[Case]]


class Context:
    """Lazily built mathematical objects shared by the checks of one run."""

    def __init__(self, config: Config):
        self.config = config
        self.sp = config.spectrum
        self.R = OscillatorGroup(self.sp)
        self.G = ComplexOscillatorGroup(self.sp)
        self.S = Semigroup(self.sp)
        self._fock: dict[int, FockSpace] = {}

    def fock(self, cutoff: int | None = None) -> FockSpace:
        cutoff = self.config.truncation if cutoff is None else cutoff
        if cutoff not in self._fock:
            self._fock[cutoff] = FockSpace(self.sp, cutoff)
        return self._fock[cutoff]

    # -- replay helpers ----------------------------------------------------

    def replay(self, command: str, *elems, **flags) -> dict:
        argv = ["--spectrum", ",".join(repr(a) for a in self.sp.eigs.tolist())]
        for key, value in flags.items():
            if key in ("truncation",):
                argv += [f"--{key}", str(value)]
        argv.append(command)
        for key, value in flags.items():
            if key not in ("truncation",):
                argv += [f"--{key.replace('_', '-')}"] + ([] if value is True else [str(value)])
        for e in elems:
            argv += ["--elem", json.dumps(jsonio.element_to_json(e), sort_keys=True)]
        return {"argv": argv}


# -- sampling ----------------------------------------------------------------

def rand_vec(rng: np.random.Generator, n: int, rmax: float) -> np.ndarray:
    v = rng.normal(size=n) + 1j * rng.normal(size=n)
    return v / np.linalg.norm(v) * rmax * rng.uniform()


def rand_alg(rng, sp, t=3.0, x=1.0, s=(-3.0, 3.0)) -> AlgebraElement:
    return AlgebraElement(rng.uniform(-t, t), rand_vec(rng, sp.n, x), rng.uniform(*s))


def rand_grp(rng, sp, t=3.0, x=1.0, s=(-3.0, 3.0)) -> GroupElement:
    return GroupElement(rng.uniform(-t, t), rand_vec(rng, sp.n, x), rng.uniform(*s))


def rand_cvec(rng, sp, r=1.0) -> CVector:
    return CVector(rand_vec(rng, sp.n, r), rand_vec(rng, sp.n, r))


def rand_complex_alg(rng, sp, smax=3.0) -> ComplexAlgebraElement:
    s = smax * rng.uniform() * np.exp(2j * np.pi * rng.uniform())
    return ComplexAlgebraElement(complex(rng.uniform(-1, 1), rng.uniform(-1, 1)), rand_cvec(rng, sp), s)


def rand_in_cone(rng, sp, c: ConeParameter, x=1.0, s=(0.1, 3.0)) -> AlgebraElement:
    """A point of ``W_d`` with margin in ``(0, 3]`` (``t`` uniform in ``[-3, 3]`` for ``W_inf``)."""
    xs = rand_vec(rng, sp.n, x)
    ss = rng.uniform(*s)
    if c.finite:
        t = float(np.vdot(xs, xs).real) / (2 * ss) - c.d * ss + rng.uniform(1e-3, 3.0)
    else:
        t = rng.uniform(-3, 3)
    return AlgebraElement(t, xs, ss)


def rand_semigroup(rng, sp):
    """Raw ``S_A`` element in the polar sampling box, not built from a polar pair."""
    r = complex(rng.uniform(-3, 3), rng.uniform(0.1, 3))
    return ComplexGroupElement(complex(rng.uniform(-3, 3), rng.uniform(-3, 3)), rand_cvec(rng, sp, 3.0), r)


def rel_distance(a, b) -> float:
    scale = max(1.0, maxabs(b))
    return a.distance(b) / scale


def maxabs(e) -> float:
    if hasattr(e, "maxabs"):
        return e.maxabs()
    return max(abs(e.t), float(np.max(np.abs(e.x), initial=0.0)), abs(e.s))


def js(e):
    return jsonio.element_to_json(e)


# -- exp -----------------------------------------------------------------

def _exp_quadrature(ctx, rng, n):
    for _ in range(n):
        X = rand_alg(rng, ctx.sp)
        a, b = ctx.R.exp(X), ctx.R.exp_quadrature(X, steps=400)
        yield Case(a.distance(b), js(b), js(a), ctx.replay("exp", X))


def _exp_one_parameter(ctx, rng, n):
    for _ in range(n):
        X = rand_alg(rng, ctx.sp)
        k1, k2 = rng.uniform(-1, 1, size=2)
        got = ctx.R.mul(ctx.R.exp(k1 * X), ctx.R.exp(k2 * X))
        want = ctx.R.exp((k1 + k2) * X)
        yield Case(rel_distance(got, want), js(want), js(got), ctx.replay("exp", (k1 + k2) * X))


# -- group ---------------------------------------------------------------

def _ad_fd(ctx, rng, n):
    R, h = ctx.R, 1e-5
    for _ in range(n):
        g, X = rand_grp(rng, ctx.sp), rand_alg(rng, ctx.sp)
        ginv = R.inv(g)
        plus = R.mul(R.mul(g, R.exp(h * X)), ginv)
        minus = R.mul(R.mul(g, R.exp(-h * X)), ginv)
        fd = AlgebraElement((plus.t - minus.t) / (2 * h), (plus.x - minus.x) / (2 * h), (plus.s - minus.s) / (2 * h))
        got = R.Ad(g, X)
        yield Case(got.distance(fd), js(fd), js(got), ctx.replay("ad", g, X))


def _coad_duality(ctx, rng, n):
    R = ctx.R
    for _ in range(n):
        g, X = rand_grp(rng, ctx.sp), rand_alg(rng, ctx.sp)
        lam = CoAlgebraElement(rng.uniform(-1, 1), rand_vec(rng, ctx.sp.n, 1.0), rng.uniform(-1, 1))
        got, want = R.coAd(g, lam)(X), lam(R.Ad(R.inv(g), X))
        yield Case(abs(got - want), want, got, ctx.replay("coad", g, lam))


def _associativity(ctx, rng, n):
    R = ctx.R
    for _ in range(n):
        g, h, k = (rand_grp(rng, ctx.sp) for _ in range(3))
        a, b = R.mul(R.mul(g, h), k), R.mul(g, R.mul(h, k))
        yield Case(a.distance(b), js(b), js(a), ctx.replay("mul", g, h, k))


def _inverse(ctx, rng, n):
    R = ctx.R
    for _ in range(n):
        g = rand_grp(rng, ctx.sp)
        a = R.mul(g, R.inv(g))
        yield Case(a.distance(R.identity), js(R.identity), js(a), ctx.replay("mul", g, R.inv(g)))


def _ad_homomorphism(ctx, rng, n):
    R = ctx.R
    for _ in range(n):
        g, h, X = rand_grp(rng, ctx.sp), rand_grp(rng, ctx.sp), rand_alg(rng, ctx.sp)
        a, b = R.Ad(R.mul(g, h), X), R.Ad(g, R.Ad(h, X))
        yield Case(a.distance(b), js(b), js(a), ctx.replay("ad", R.mul(g, h), X))


def _jacobi(ctx, rng, n):
    R = ctx.R
    for _ in range(n):
        X, Y, Z = (rand_alg(rng, ctx.sp) for _ in range(3))
        b = R.bracket
        total = b(X, b(Y, Z)) + b(Y, b(Z, X)) + b(Z, b(X, Y))
        zero = AlgebraElement(0.0, ctx.sp.zeros(), 0.0)
        yield Case(total.distance(zero), 0.0, js(total), {"X": js(X), "Y": js(Y), "Z": js(Z)})


def _omega_invariance(ctx, rng, n):
    sp = ctx.sp
    for _ in range(n):
        x, y, t = rand_vec(rng, sp.n, 1.0), rand_vec(rng, sp.n, 1.0), rng.uniform(-10, 10)
        a, b = ctx.R.omega(sp.apply_gamma(t, x), sp.apply_gamma(t, y)), ctx.R.omega(x, y)
        yield Case(abs(a - b), b, a, {"x": jsonio.vector_to_json(x), "y": jsonio.vector_to_json(y), "t": t})


# -- complex -------------------------------------------------------------

def _expc_quadrature(ctx, rng, n):
    for _ in range(n):
        X = rand_complex_alg(rng, ctx.sp)
        a, b = ctx.G.exp(X), ctx.G.exp_quadrature(X, steps=400)
        yield Case(rel_distance(a, b), js(b), js(a), ctx.replay("exp", X))


def _kernel_identity(ctx, rng, n):
    sp = ctx.sp
    for _ in range(n):
        s = rng.uniform(-3, 3)
        x = rand_vec(rng, sp.n, 1.0)
        got = ctx.G.B(1j * s, CVector.imag(x))
        finv = sp.apply_fA_inverse(s, x)
        want = CVector(sp.apply_gA(s, finv), finv)
        yield Case(got.distance(want), jsonio.cvector_to_json(want), jsonio.cvector_to_json(got),
                   {"s": s, "x": jsonio.vector_to_json(x)})


def _skew(ctx, rng, n):
    sp = ctx.sp
    for _ in range(n):
        s = rng.uniform(-3, 3)
        x, y = rand_vec(rng, sp.n, 1.0), rand_vec(rng, sp.n, 1.0)
        T = lambda v: sp.apply_gA(s, sp.apply_fA_inverse(s, v))  # noqa: E731
        lhs, rhs = float(np.vdot(y, T(x)).real), -float(np.vdot(T(y), x).real)
        yield Case(abs(lhs - rhs), rhs, lhs, {"s": s, "x": jsonio.vector_to_json(x), "y": jsonio.vector_to_json(y)})


def _gamma_action(ctx, rng, n):
    G = ctx.G
    for _ in range(n):
        z1, z2 = (complex(*rng.uniform(-1, 1, size=2)) for _ in range(2))
        v = rand_cvec(rng, ctx.sp)
        a, b = G.gamma_C(z1, G.gamma_C(z2, v)), G.gamma_C(z1 + z2, v)
        yield Case(a.distance(b) / max(1.0, b.maxabs()), jsonio.cvector_to_json(b), jsonio.cvector_to_json(a),
                   {"z1": jsonio.complex_to_json(z1), "z2": jsonio.complex_to_json(z2), "v": jsonio.cvector_to_json(v)})


def _gamma_invariance(ctx, rng, n):
    G = ctx.G
    for _ in range(n):
        z = complex(*rng.uniform(-1, 1, size=2))
        x = rand_cvec(rng, ctx.sp)
        gx = G.gamma_C(z, x)
        a, b = G.inner_C(gx, G.sigma(gx)), G.inner_C(x, G.sigma(x))
        yield Case(abs(a - b) / max(1.0, abs(b)), jsonio.complex_to_json(b), jsonio.complex_to_json(a),
                   {"z": jsonio.complex_to_json(z), "x": jsonio.cvector_to_json(x)})


def _omega_identity(ctx, rng, n):
    G = ctx.G
    for _ in range(n):
        x, y = rand_cvec(rng, ctx.sp), rand_cvec(rng, ctx.sp)
        a, b = G.omega_C(x, y), -G.inner_C(G.D_C(x), G.sigma(y))
        yield Case(abs(a - b), jsonio.complex_to_json(b), jsonio.complex_to_json(a),
                   {"x": jsonio.cvector_to_json(x), "y": jsonio.cvector_to_json(y)})


def _real_restriction(ctx, rng, n):
    G, R = ctx.G, ctx.R
    for _ in range(n):
        g, h = rand_grp(rng, ctx.sp), rand_grp(rng, ctx.sp)
        a, b = G.mul(G.embed(g), G.embed(h)), G.embed(R.mul(g, h))
        yield Case(a.distance(b), js(b), js(a), ctx.replay("mul", G.embed(g), G.embed(h)))


def _complex_associativity(ctx, rng, n):
    G = ctx.G
    for _ in range(n):
        g, h, k = (G.exp(rand_complex_alg(rng, ctx.sp, smax=1.0)) for _ in range(3))
        a, b = G.mul(G.mul(g, h), k), G.mul(g, G.mul(h, k))
        yield Case(rel_distance(a, b), js(b), js(a), ctx.replay("mul", g, h, k))


def _log_derivative(ctx, rng, n):
    G, h = ctx.G, 1e-5
    for _ in range(n):
        X = ComplexAlgebraElement(1j * rng.uniform(-2, 2), CVector.real(ctx.sp.zeros()), 1j * rng.uniform(-2, 2))
        Y = rand_complex_alg(rng, ctx.sp, smax=1.0)
        base = G.inv(G.exp(X))
        plus, minus = G.mul(base, G.exp(X + h * Y)), G.mul(base, G.exp(X - h * Y))
        fd = ComplexAlgebraElement((plus.z - minus.z) / (2 * h), (plus.v - minus.v) * (1 / (2 * h)),
                                   (plus.s - minus.s) / (2 * h))
        got = G.log_derivative(X, Y)
        yield Case(got.distance(fd), js(fd), js(got), {"X": js(X), "Y": js(Y)})


def _qn_growth(ctx, rng, n):
    sp, G = ctx.sp, ctx.G
    for _ in range(n):
        m = int(rng.integers(1, 4))
        z = 2.0 * rng.uniform() * np.exp(2j * np.pi * rng.uniform())
        v = rand_cvec(rng, sp)
        lhs = sp.qn_seminorm(G.gamma_C(z, v), m)
        rhs = sp.qn_seminorm(v, m + math.ceil(abs(z)))
        yield Case(max(0.0, lhs / rhs - 1.0) if rhs > 0 else 0.0, rhs, lhs,
                   {"m": m, "z": jsonio.complex_to_json(z), "v": jsonio.cvector_to_json(v)})


# -- cones ---------------------------------------------------------------

def _per_cone(ctx, n, finite_only=False):
    cs = [c for c in ctx.config.cones if c.finite or not finite_only]
    per = max(1, math.ceil(n / max(1, len(cs))))
    for c in cs:
        for _ in range(per):
            yield c


def _cone_input(c, **elems):
    out = {"d": jsonio.d_to_json(c.d), "sign": c.sign}
    out.update({k: js(v) for k, v in elems.items()})
    return out


def _superadditivity(ctx, rng, n):
    for c in _per_cone(ctx, n, finite_only=True):
        a, b = rand_in_cone(rng, ctx.sp, c, x=3.0), rand_in_cone(rng, ctx.sp, c, x=3.0)
        defect = cones.f_d(a + b, c.d) - cones.f_d(a, c.d) - cones.f_d(b, c.d)
        yield Case(max(0.0, -defect), ">= 0", defect, _cone_input(c, a=a, b=b))


def _membership_invariance(ctx, rng, n):
    for c in _per_cone(ctx, n):
        while True:
            X = rand_alg(rng, ctx.sp, x=2.0)
            if abs(cones.margin(X, c)) > 1e-6:
                break
        g = rand_grp(rng, ctx.sp)
        a, b = cones.in_cone(ctx.R.Ad(g, X), c), cones.in_cone(X, c)
        yield Case(float(a != b), b, a, _cone_input(c, g=g, X=X))


def _F_invariance(ctx, rng, n):
    for _ in range(n):
        X = rand_alg(rng, ctx.sp, s=(0.1, 3.0)) * float(rng.choice([-1.0, 1.0]))
        g = rand_grp(rng, ctx.sp)
        a, b = cones.F_project(ctx.R.Ad(g, X)), cones.F_project(X)
        yield Case(a.distance(b), js(b), js(a), {"g": js(g), "X": js(X)})


def _h_invariance(ctx, rng, n):
    for c in _per_cone(ctx, n):
        w, g = rand_in_cone(rng, ctx.sp, c), rand_grp(rng, ctx.sp)
        a, b = cones.h_d(ctx.R.Ad(g, w), c), cones.h_d(w, c)
        yield Case(abs(a - b), b, a, _cone_input(c, g=g, w=w))


def _h_subadditive(ctx, rng, n):
    for c in _per_cone(ctx, n):
        w, w2 = rand_in_cone(rng, ctx.sp, c), rand_in_cone(rng, ctx.sp, c)
        a, b = cones.h_d(w + w2, c), cones.h_d(w, c)
        yield Case(max(0.0, a - b), f"<= {b!r}", a, _cone_input(c, w=w, w2=w2))


def _boundary_blowup(ctx, rng, n):
    lam = 1.0 - 1e-7
    for c in _per_cone(ctx, n):
        x = rand_vec(rng, ctx.sp.n, 1.0)
        if c.finite:
            s = rng.uniform(0.5, 3.0)
            Q = AlgebraElement(float(np.vdot(x, x).real) / (2 * s) - c.d * s, x, s)
        else:
            Q = AlgebraElement(rng.uniform(-3, 3), x, 0.0)
        while True:
            delta = AlgebraElement(rng.uniform(-0.5, 0.5), rand_vec(rng, ctx.sp.n, 0.5), rng.uniform(0.0, 0.5))
            P = Q + delta
            if cones.margin(P, c) > 1e-3 and P.s > 0:
                break
        h = cones.h_d(P + lam * (Q - P), c)
        yield Case(0.0 if h > 1e6 else 1.0, "> 1e6", h, _cone_input(c, P=P, Q=Q))


def _F_compatibility(ctx, rng, n):
    for c in _per_cone(ctx, n):
        X = rand_alg(rng, ctx.sp, x=2.0, s=(0.05, 3.0)) * float(rng.choice([-1.0, 1.0]))
        if abs(cones.margin(X, c)) <= cones.BOUNDARY_BAND:
            continue
        a, b = cones.in_cone(cones.F_project(X), c), cones.in_cone(X, c)
        yield Case(float(a != b), b, a, _cone_input(c, X=X))


def _cone_property(ctx, rng, n):
    for c in _per_cone(ctx, n):
        w, w2 = rand_in_cone(rng, ctx.sp, c), rand_in_cone(rng, ctx.sp, c)
        k, lam = rng.uniform(0.01, 100.0), rng.uniform()
        ok = cones.in_cone(k * w, c) and cones.in_cone(lam * w + (1 - lam) * w2, c)
        yield Case(0.0 if ok else 1.0, True, ok, _cone_input(c, w=w, w2=w2))


# -- polar ---------------------------------------------------------------

def _polar_pair(ctx, rng):
    return rand_grp(rng, ctx.sp, x=3.0), rand_alg(rng, ctx.sp, x=3.0, s=(0.1, 3.0))


def _polar_roundtrip_factors(ctx, rng, n):
    S = ctx.S
    for _ in range(n):
        g, w = _polar_pair(ctx, rng)
        pf = S.decompose(S.compose(g, w))
        err = max(pf.g.distance(g), pf.w.distance(w))
        yield Case(err, {"g": js(g), "w": js(w)}, {"g": js(pf.g), "w": js(pf.w)},
                   ctx.replay("polar", S.compose(g, w), decompose=True))


def _polar_roundtrip_element(ctx, rng, n):
    S = ctx.S
    for _ in range(n):
        e = rand_semigroup(rng, ctx.sp)
        pf = S.decompose(e)
        back = S.compose(pf.g, pf.w)
        yield Case(rel_distance(back, e), js(e), js(back), ctx.replay("polar", e, decompose=True))


def _theta_identity(ctx, rng, n):
    sp, G, S = ctx.sp, ctx.G, ctx.S
    zero = CVector.real(sp.zeros())
    for _ in range(n):
        x = rand_vec(rng, sp.n, 3.0)
        s = rng.uniform(0.1, 3.0) * float(rng.choice([-1.0, 1.0]))
        lhs = G.mul(G.exp(ComplexAlgebraElement(0.0, CVector.imag(x), 1j * s)),
                    G.exp(ComplexAlgebraElement(0.0, zero, -1j * s)))
        rhs = G.inv(S.theta(sp.apply_fA_inverse(s, x), s))
        yield Case(lhs.distance(rhs), js(rhs), js(lhs), {"x": jsonio.vector_to_json(x), "s": s})


def _polar_residual(ctx, rng, n):
    for _ in range(n):
        e = rand_semigroup(rng, ctx.sp)
        pf = ctx.S.decompose(e)
        yield Case(pf.residual, 0.0, pf.residual, ctx.replay("polar", e, decompose=True))


def _star_agrees(ctx, rng, n):
    for _ in range(n):
        e = rand_semigroup(rng, ctx.sp)
        a, b = ctx.S.star(e), ctx.G.star(e)
        yield Case(rel_distance(a, b), js(b), js(a), {"e": js(e)})


def _star_antiautomorphism(ctx, rng, n):
    S, G = ctx.S, ctx.G
    for _ in range(n):
        e1, e2 = rand_semigroup(rng, ctx.sp), rand_semigroup(rng, ctx.sp)
        a, b = S.star(G.mul(e1, e2)), G.mul(S.star(e2), S.star(e1))
        yield Case(rel_distance(a, b), js(b), js(a), {"e1": js(e1), "e2": js(e2)})


def _star_involutive(ctx, rng, n):
    for _ in range(n):
        e = rand_semigroup(rng, ctx.sp)
        mid = ctx.S.star(e)
        back = ctx.S.star(mid)
        # the round trip passes through e*, whose entries can be ~1e3 times larger than e's
        scale = max(1.0, maxabs(e), maxabs(mid))
        yield Case(back.distance(e) / scale, js(e), js(back), {"e": js(e)})


def _star_identity(ctx, rng, n):
    S, G, R = ctx.S, ctx.G, ctx.R
    for _ in range(n):
        g, w = _polar_pair(ctx, rng)
        a = S.star(S.compose(g, w))
        b = G.mul(S.exp_i(w), G.embed(R.inv(g)))
        yield Case(rel_distance(a, b), js(b), js(a), {"g": js(g), "w": js(w)})


def _star_polar_part(ctx, rng, n):
    S, R = ctx.S, ctx.R
    for _ in range(n):
        g, w = _polar_pair(ctx, rng)
        got = S.decompose(S.star(S.compose(g, w))).w
        want = R.Ad(g, w)
        yield Case(rel_distance(got, want), js(want), js(got), {"g": js(g), "w": js(w)})


# -- semigroup -------------------------------------------------------------

def _sd_element(ctx, rng, c):
    return ctx.S.compose(rand_grp(rng, ctx.sp), rand_in_cone(rng, ctx.sp, c))


def _closure(ctx, rng, n):
    for c in _per_cone(ctx, n):
        e1, e2 = _sd_element(ctx, rng, c), _sd_element(ctx, rng, c)
        m = ctx.S.margin(ctx.G.mul(e1, e2), c)
        yield Case(max(0.0, -m), "> 0", m, {"d": jsonio.d_to_json(c.d), "e1": js(e1), "e2": js(e2)})


def _curve_monotone(ctx, rng, n):
    for c in _per_cone(ctx, n):
        x, y = rand_in_cone(rng, ctx.sp, c), rand_in_cone(rng, ctx.sp, c)
        values, _ = ctx.S.curve_monotone_check(x, y, c, steps=20)
        rise = max(0.0, max(b - a for a, b in zip(values, values[1:])))
        yield Case(rise, "nonincreasing", rise, _cone_input(c, x=x, y=y))


def _alpha_submultiplicative(ctx, rng, n):
    S, G = ctx.S, ctx.G
    for _ in range(n):
        e1 = S.compose(rand_grp(rng, ctx.sp), rand_alg(rng, ctx.sp, s=(0.1, 3.0)))
        e2 = S.compose(rand_grp(rng, ctx.sp), rand_alg(rng, ctx.sp, s=(0.1, 3.0)))
        lhs, rhs = S.alpha(G.mul(e1, e2)), S.alpha(e1) * S.alpha(e2)
        yield Case(max(0.0, lhs / rhs - 1.0), f"<= {rhs!r}", lhs, {"e1": js(e1), "e2": js(e2)})


def _alpha_star(ctx, rng, n):
    S = ctx.S
    for _ in range(n):
        e = S.compose(rand_grp(rng, ctx.sp), rand_alg(rng, ctx.sp, s=(0.1, 3.0)))
        star = S.star(e)
        a, b = S.alpha(star), S.alpha(e)
        # e* can be ~1e3 times larger than e; its polar part inherits that conditioning
        growth = max(1.0, maxabs(star)) / max(1.0, maxabs(e))
        yield Case(abs(a - b) / b / max(1.0, growth), b, a, {"e": js(e)})


# -- fock ----------------------------------------------------------------

def _fock_polar(ctx, rng):
    g = rand_grp(rng, ctx.sp)
    w = AlgebraElement(rng.uniform(0.0, 1.0), rand_vec(rng, ctx.sp.n, 1.0), rng.uniform(0.5, 3.0))
    return g, w


def _ccr(ctx, rng, n):
    F = ctx.fock()
    d = F.low_dim(F.cutoff - 2)
    for _ in range(n):
        x, y = rand_vec(rng, ctx.sp.n, 1.0), rand_vec(rng, ctx.sp.n, 1.0)
        px, py = F.field_phi(x), F.field_phi(y)
        C = (px @ py - py @ px)[:d, :d]
        C[np.diag_indices(d)] += 1j * ctx.R.omega(x, y)
        err = float(np.abs(C).max())
        yield Case(err, 0.0, err, {"x": jsonio.vector_to_json(x), "y": jsonio.vector_to_json(y)})


def _homomorphism(ctx, rng, n):
    F, R = ctx.fock(), ctx.R
    for _ in range(n):
        g, h = rand_grp(rng, ctx.sp), rand_grp(rng, ctx.sp)
        err = F.compressed_error(F.pi(g) @ F.pi(h) - F.pi(R.mul(g, h)))
        yield Case(err, 0.0, err, {"g": js(g), "h": js(h), "truncation": F.cutoff})


def _covariance(ctx, rng, n):
    F, sp = ctx.fock(), ctx.sp
    for _ in range(n):
        x, s = rand_vec(rng, sp.n, 1.0), rng.uniform(-3, 3)
        U, Uinv = F.pi(GroupElement(0.0, sp.zeros(), s)), F.pi(GroupElement(0.0, sp.zeros(), -s))
        err = F.compressed_error(U @ F.field_phi(x) @ Uinv - F.field_phi(sp.apply_gamma(s, x)))
        yield Case(err, 0.0, err, {"x": jsonio.vector_to_json(x), "s": s, "truncation": F.cutoff})


def _positivity(ctx, rng, n):
    F = ctx.fock()
    M = -1j * F.dpi(AlgebraElement(0.0, ctx.sp.zeros(), 1.0))
    diag = np.diag(M)
    off = float(np.abs(M - np.diag(diag)).max())
    err = max(off, float(np.max(np.abs(diag.imag))), max(0.0, -float(diag.real.min())), abs(diag[0]))
    yield Case(err, 0.0, err, {"truncation": F.cutoff})


def _norm_law(ctx, rng, n):
    F, S = ctx.fock(), ctx.S
    for _ in range(n):
        g, w = _fock_polar(ctx, rng)
        e = S.compose(g, w)
        got, want = F.norm(F.pi_hat(e)), math.exp(F.support_function(w))
        yield Case(abs(got - want) / want, want, got, ctx.replay("rep-norm", e, truncation=F.cutoff))


def _pi_hat_semigroup(ctx, rng, n):
    F, S, G = ctx.fock(), ctx.S, ctx.G
    for _ in range(n):
        e1, e2 = S.compose(*_fock_polar(ctx, rng)), S.compose(*_fock_polar(ctx, rng))
        P = F.pi_hat(G.mul(e1, e2))
        err = F.compressed_error(F.pi_hat(e1) @ F.pi_hat(e2) - P) / max(1.0, F.norm(P))
        yield Case(err, 0.0, err, {"e1": js(e1), "e2": js(e2), "truncation": F.cutoff})


def _pi_hat_star(ctx, rng, n):
    F, S = ctx.fock(), ctx.S
    for _ in range(n):
        e = S.compose(*_fock_polar(ctx, rng))
        err = F.compressed_error(F.pi_hat(S.star(e)) - F.pi_hat(e).conj().T)
        yield Case(err, 0.0, err, {"e": js(e), "truncation": F.cutoff})


def _alpha_bound(ctx, rng, n):
    F, S = ctx.fock(), ctx.S
    for _ in range(n):
        e = S.compose(*_fock_polar(ctx, rng))
        norm, alpha = F.norm(F.pi_hat(e)), S.alpha(e, 0.0)
        yield Case(max(0.0, norm / alpha - 1.0), f"<= {alpha!r}", norm,
                   ctx.replay("rep-norm", e, truncation=F.cutoff))


def _truncation_convergence(ctx, rng, n):
    N0 = max(25, ctx.config.truncation - 5)
    F0, F1, S = ctx.fock(N0), ctx.fock(N0 + 5), ctx.S
    for _ in range(n):
        e = S.compose(*_fock_polar(ctx, rng))
        a, b = F0.norm(F0.pi_hat(e)), F1.norm(F1.pi_hat(e))
        yield Case(abs(a - b), b, a, {"e": js(e), "truncations": [N0, N0 + 5]})


def _momentum_bound(ctx, rng, n):
    F = ctx.fock()
    d = F.low_dim(F.cutoff // 2)
    for _ in range(n):
        v = np.zeros(F.dim, dtype=complex)
        v[:d] = rng.normal(size=d) + 1j * rng.normal(size=d)
        v /= np.linalg.norm(v)
        w = AlgebraElement(rng.uniform(-1, 1), rand_vec(rng, ctx.sp.n, 1.0), rng.uniform(0.5, 3.0))
        phi, bound = F.momentum(v, w), -F.support_function(w)
        yield Case(max(0.0, bound - phi) / max(1.0, abs(bound)), f">= {bound!r}", phi,
                   {"w": js(w), "state_seed_note": "random unit vector on occupation <= N/2"})


def _vacuum_momentum(ctx, rng, n):
    F = ctx.fock()
    for _ in range(n):
        X = rand_alg(rng, ctx.sp)
        got = F.momentum(F.vacuum(), X)
        yield Case(abs(got - X.t), X.t, got, ctx.replay("momentum", X, state='{"amplitudes": [[1, 0]]}',
                                                        truncation=F.cutoff))


def _dpi_finite_difference(ctx, rng, n):
    F, R = ctx.fock(), ctx.R
    d = F.low_dim(F.cutoff - 4)
    for _ in range(n):
        v = np.zeros(F.dim, dtype=complex)
        v[:d] = rng.normal(size=d) + 1j * rng.normal(size=d)
        v /= np.linalg.norm(v)
        X = rand_alg(rng, ctx.sp, t=1.0, s=(-1.0, 1.0))
        dv = F.dpi(X) @ v
        errs = [float(np.linalg.norm((F.pi(R.exp(tau * X)) @ v - v) / tau - dv)) for tau in (1e-3, 1e-4)]
        order = math.log10(errs[0] / errs[1])
        yield Case(abs(order - 1.0), 1.0, order, {"X": js(X), "errors": errs})


# -- fourier / kernels -------------------------------------------------------

def _fourier(ctx, rng, n):
    for x in range(-3, 4):
        quad, exact = fourier_fhat_check(float(x), T=40.0, steps=8000)
        yield Case(abs(quad - exact), exact, quad, {"x": x, "T": 40.0, "steps": 8000})


def _kernel_parity(ctx, rng, n):
    for _ in range(n):
        z = complex(rng.uniform(1e-3, 3) * rng.choice([-1, 1]), rng.uniform(-3, 3))
        err = max(abs(kernel_f(-z) - kernel_f(z)), abs(kernel_g(-z) + kernel_g(z)))
        yield Case(err, 0.0, err, {"z": jsonio.complex_to_json(z)})


def _kernel_quotients(ctx, rng, n):
    for _ in range(n):
        z = complex(rng.uniform(-3, 3), rng.uniform(-3, 3))
        ez, emz = np.exp(z), np.exp(-z)
        err = abs(1j * kernel_g(z) * (ez - emz) - (ez + emz - 2))
        yield Case(err, 0.0, err, {"z": jsonio.complex_to_json(z)})


def _kernel_straddle(ctx, rng, n):
    for _ in range(n):
        phase = np.exp(2j * np.pi * rng.uniform())
        lo, hi = SERIES_RADIUS * (1 - 1e-12) * phase, SERIES_RADIUS * (1 + 1e-12) * phase
        err = max(abs(k(lo) - k(hi)) for k in (kernel_f, kernel_g, kernel_b))
        yield Case(err, 0.0, err, {"phase": jsonio.complex_to_json(phase)})


def _f_inverse(ctx, rng, n):
    sp = ctx.sp
    for _ in range(n):
        s, v = rng.uniform(-5, 5), rand_vec(rng, sp.n, 1.0)
        back = sp.apply_fA(s, sp.apply_fA_inverse(s, v))
        err = float(np.max(np.abs(back - v)))
        yield Case(err, 0.0, err, {"s": s, "v": jsonio.vector_to_json(v)})


CHECKS: dict[str, list[Check]] = {
    "exp": [
        Check("exp.closed_vs_quadrature", 1e-9, 100, _exp_quadrature),
        Check("exp.one_parameter", 1e-8, 100, _exp_one_parameter),
    ],
    "group": [
        Check("group.ad_finite_difference", 1e-6, 200, _ad_fd),
        Check("group.coad_duality", 1e-11, 200, _coad_duality),
        Check("group.associativity", 1e-12, 100, _associativity),
        Check("group.inverse", 1e-13, 100, _inverse),
        Check("group.ad_homomorphism", 1e-11, 100, _ad_homomorphism),
        Check("group.jacobi", 1e-12, 100, _jacobi),
        Check("group.omega_invariance", 1e-12, 100, _omega_invariance),
    ],
    "complex": [
        Check("complex.expC_vs_quadrature", 1e-8, 100, _expc_quadrature),
        Check("complex.kernel_identity", 1e-11, 200, _kernel_identity),
        Check("complex.skew_symmetry", 1e-12, 200, _skew),
        Check("complex.gamma_action", 1e-12, 100, _gamma_action),
        Check("complex.gamma_invariance", 1e-11, 100, _gamma_invariance),
        Check("complex.omega_identity", 1e-12, 100, _omega_identity),
        Check("complex.real_restriction", 1e-12, 100, _real_restriction),
        Check("complex.associativity", 1e-11, 100, _complex_associativity),
        Check("complex.log_derivative", 1e-6, 100, _log_derivative),
        Check("complex.qn_growth", 1e-12, 1000, _qn_growth),
    ],
    "cones": [
        Check("cones.superadditivity", 1e-12, 1000, _superadditivity),
        Check("cones.membership_invariance", 0.0, 1000, _membership_invariance),
        Check("cones.F_invariance", 1e-11, 200, _F_invariance),
        Check("cones.h_invariance", 1e-11, 200, _h_invariance),
        Check("cones.h_subadditive", 1e-12, 1000, _h_subadditive),
        Check("cones.boundary_blowup", 0.0, 40, _boundary_blowup),
        Check("cones.F_compatibility", 0.0, 400, _F_compatibility),
        Check("cones.cone_property", 0.0, 400, _cone_property),
    ],
    "polar": [
        Check("polar.roundtrip_factors", 1e-8, 200, _polar_roundtrip_factors),
        Check("polar.roundtrip_element", 1e-8, 200, _polar_roundtrip_element),
        Check("polar.theta_identity", 1e-10, 200, _theta_identity),
        Check("polar.realness_residual", 1e-9, 200, _polar_residual),
        Check("polar.star_agrees", 1e-10, 200, _star_agrees),
        Check("polar.star_antiautomorphism", 1e-10, 200, _star_antiautomorphism),
        Check("polar.star_involutive", 1e-10, 200, _star_involutive),
        Check("polar.star_identity", 1e-10, 200, _star_identity),
        Check("polar.star_polar_part", 1e-8, 200, _star_polar_part),
    ],
    "semigroup": [
        Check("semigroup.closure", 1e-12, 800, _closure),
        Check("semigroup.curve_monotone", 1e-9, 100, _curve_monotone),
        Check("semigroup.alpha_submultiplicative", 1e-9, 200, _alpha_submultiplicative),
        Check("semigroup.alpha_star", 1e-10, 200, _alpha_star),
    ],
    "fock": [
        Check("fock.ccr", 1e-11, 10, _ccr),
        Check("fock.homomorphism", 1e-6, 10, _homomorphism),
        Check("fock.covariance", 1e-9, 10, _covariance),
        Check("fock.positivity", 0.0, 1, _positivity),
        Check("fock.norm_law", 1e-6, 10, _norm_law),
        Check("fock.pi_hat_semigroup", 1e-6, 10, _pi_hat_semigroup),
        Check("fock.pi_hat_star", 1e-7, 10, _pi_hat_star),
        Check("fock.alpha_bound", 1e-6, 10, _alpha_bound),
        Check("fock.truncation_convergence", 1e-8, 5, _truncation_convergence),
        Check("fock.momentum_bound", 1e-9, 20, _momentum_bound),
        Check("fock.vacuum_momentum", 1e-12, 20, _vacuum_momentum),
        Check("fock.dpi_first_order", 0.05, 3, _dpi_finite_difference),
    ],
    "fourier": [
        Check("fourier.identity_grid", 1e-8, 7, _fourier),
        Check("fourier.kernel_parity", 1e-13, 1000, _kernel_parity),
        Check("fourier.g_quotient", 1e-12, 200, _kernel_quotients),
        Check("fourier.series_straddle", 1e-12, 200, _kernel_straddle),
        Check("fourier.f_inverse", 1e-12, 200, _f_inverse),
    ],
}


# -- report ----------------------------------------------------------------

def _json_number(x):
    if isinstance(x, (bool, str)) or x is None:
        return x
    if isinstance(x, (int, np.integer)):
        return int(x)
    if isinstance(x, (float, np.floating)):
        x = float(x)
        return x if math.isfinite(x) else ("inf" if x > 0 else "-inf" if x < 0 else "nan")
    return x


def _sanitize(obj):
    if isinstance(obj, dict):
        return {k: _sanitize(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_sanitize(v) for v in obj]
    if isinstance(obj, (np.bool_,)):
        return bool(obj)
    return _json_number(obj)


def run_checks(checks: list[Check], suite: str, config: Config) -> dict:
    ctx = Context(config)
    start = time.perf_counter()
    failures, summaries = [], []
    for check in checks:
        tol = check.tolerance if config.tol is None else config.tol
        rng = np.random.default_rng([config.seed, zlib.crc32(check.name.encode())])
        worst, count = 0.0, 0
        for k, case in enumerate(check.body(ctx, rng, config.count(check.base))):
            count += 1
            err = float(case.err)
            bad = not (err <= tol)
            worst = err if (bad and not math.isfinite(err)) else max(worst, err)
            if bad:
                failures.append({
                    "case_id": f"{check.name}.{k:05d}",
                    "input": case.input,
                    "expected": case.expected,
                    "got": case.got,
                    "abs_err": err,
                    "replay": case.input.get("argv") if isinstance(case.input, dict) else None,
                })
        summaries.append({"name": check.name, "trials": count, "tolerance": tol,
                          "max_abs_err": worst, "passed": all(not f["case_id"].startswith(check.name + ".")
                                                              for f in failures)})
    failures.sort(key=lambda f: f["case_id"])
    wall_ms = 0 if config.omit_timing else int(round((time.perf_counter() - start) * 1000))
    report = {
        "suite": suite,
        "trials": sum(c["trials"] for c in summaries),
        "tolerance": max((c["tolerance"] for c in summaries), default=0.0),
        "max_abs_err": max((c["max_abs_err"] for c in summaries), default=0.0),
        "failures": failures,
        "passed": not failures,
        "seed": int(config.seed),
        "spectrum": config.spectrum.eigs.tolist(),
        "truncation": config.truncation if any(c["name"].startswith("fock.") for c in summaries) else None,
        "wall_ms": wall_ms,
        "checks": summaries,
    }
    return _sanitize(report)


def run_suite(name: str, config: Config | None = None) -> dict:
    """Run one named suite (or ``"all"``) and return its report as a JSON-ready dict."""
    config = config or Config()
    if name == "all":
        checks = [c for s in SUITES for c in CHECKS[s]]
    elif name in CHECKS:
        checks = CHECKS[name]
    else:
        raise UnknownSuiteError(f"unknown suite {name!r}; expected one of {', '.join(SUITES + ('all',))}")
    return run_checks(checks, name, config)


def semigroup_report(config: Config) -> dict:
    """Closure and monotonicity evidence: ``config.trials`` samples per cone in ``config.cones``."""
    names = ("semigroup.closure", "semigroup.curve_monotone", "cones.h_subadditive")
    per_cone = 100 * len(config.cones)
    checks = [Check(c.name, c.tolerance, per_cone, c.body)
              for suite in ("semigroup", "cones") for c in CHECKS[suite] if c.name in names]
    return run_checks(checks, "semigroup-verify", config)
