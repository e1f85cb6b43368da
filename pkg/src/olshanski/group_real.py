"""The standard oscillator group ``G_A = Heis(V, omega_A) x| R`` and its Lie algebra.

Elements are triples ``(t, x, s)``: a real central coordinate, a mode vector
and a real time coordinate.  The product is

    (t, x, s)(t', x', s') = (t + t' + omega(x, gamma(s) x')/2, x + gamma(s) x', s + s')

with ``omega(x, y) = Im <Ax, y>`` and ``gamma(s) = e^{isA}``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .spectral import Spectrum, kernel_b, kernel_b2, simpson


@dataclass(frozen=True, eq=False)
class _Triple:
    t: float
    x: np.ndarray
    s: float

    def __post_init__(self):
        object.__setattr__(self, "t", float(self.t))
        object.__setattr__(self, "x", np.asarray(self.x, dtype=complex).reshape(-1))
        object.__setattr__(self, "s", float(self.s))

    def as_tuple(self):
        return self.t, self.x, self.s

    def distance(self, other: "_Triple") -> float:
        """Component-wise max-abs distance."""
        return max(abs(self.t - other.t), float(np.max(np.abs(self.x - other.x), initial=0.0)),
                   abs(self.s - other.s))

    def maxabs(self) -> float:
        return max(abs(self.t), float(np.max(np.abs(self.x), initial=0.0)), abs(self.s))

    def __repr__(self) -> str:
        return f"{type(self).__name__}(t={self.t!r}, x={self.x.tolist()!r}, s={self.s!r})"


class GroupElement(_Triple):
    pass


class AlgebraElement(_Triple):
    def __add__(self, other: "AlgebraElement") -> "AlgebraElement":
        return AlgebraElement(self.t + other.t, self.x + other.x, self.s + other.s)

    def __sub__(self, other: "AlgebraElement") -> "AlgebraElement":
        return AlgebraElement(self.t - other.t, self.x - other.x, self.s - other.s)

    def __neg__(self) -> "AlgebraElement":
        return AlgebraElement(-self.t, -self.x, -self.s)

    def __mul__(self, c: float) -> "AlgebraElement":
        return AlgebraElement(c * self.t, c * self.x, c * self.s)

    __rmul__ = __mul__


@dataclass(frozen=True, eq=False)
class CoAlgebraElement:
    """Linear form ``(t, x, s) -> tstar*t + Re<a, x> + sstar*s``."""

    tstar: float
    a: np.ndarray
    sstar: float

    def __post_init__(self):
        object.__setattr__(self, "tstar", float(self.tstar))
        object.__setattr__(self, "a", np.asarray(self.a, dtype=complex).reshape(-1))
        object.__setattr__(self, "sstar", float(self.sstar))

    def __call__(self, X: AlgebraElement) -> float:
        return self.tstar * X.t + float(np.vdot(X.x, self.a).real) + self.sstar * X.s

    def distance(self, other: "CoAlgebraElement") -> float:
        return max(abs(self.tstar - other.tstar), float(np.max(np.abs(self.a - other.a), initial=0.0)),
                   abs(self.sstar - other.sstar))


class OscillatorGroup:
    """Group and algebra operations of ``G_A`` for a fixed spectrum."""

    def __init__(self, spectrum: Spectrum):
        self.spectrum = spectrum

    @property
    def identity(self) -> GroupElement:
        return GroupElement(0.0, self.spectrum.zeros(), 0.0)

    def omega(self, x: np.ndarray, y: np.ndarray) -> float:
        """``Im <Ax, y>``, written so that ``omega(x, x)`` is exactly zero."""
        x, y = np.asarray(x), np.asarray(y)
        return float(np.sum(self.spectrum.eigs * (x.imag * y.real - x.real * y.imag)))

    def mul(self, g: GroupElement, h: GroupElement) -> GroupElement:
        gx = self.spectrum.apply_gamma(g.s, h.x)
        return GroupElement(g.t + h.t + 0.5 * self.omega(g.x, gx), g.x + gx, g.s + h.s)

    def inv(self, g: GroupElement) -> GroupElement:
        return GroupElement(-g.t, -self.spectrum.apply_gamma(-g.s, g.x), -g.s)

    def exp(self, X: AlgebraElement) -> GroupElement:
        t, x, s = X.as_tuple()
        if s == 0.0:
            return GroupElement(t, x, 0.0)
        ia = 1j * self.spectrum.eigs
        bx = kernel_b(s * ia) * x
        # (1/2s) b(x, B_s x - x) with b = Re<.,.>, and (B_s - 1) / s = iA b2(s iA)
        central = 0.5 * float(np.vdot(ia * kernel_b2(s * ia) * x, x).real)
        return GroupElement(t + central, bx, s)

    def exp_quadrature(self, X: AlgebraElement, steps: int = 400) -> GroupElement:
        """Exponential from its defining integrals, by nested composite Simpson.

        central: t + 1/2 int_0^1 int_0^1 omega(gamma(s t t') x, gamma(s t) x) t dt' dt
        vector:  int_0^1 gamma(s t) x dt
        """
        if steps < 200:
            raise ValueError("exp_quadrature needs steps >= 200")
        steps += steps % 2
        t, x, s = X.as_tuple()
        grid = np.linspace(0.0, 1.0, steps + 1)
        h = 1.0 / steps
        eigs = self.spectrum.eigs
        outer = np.exp(1j * s * np.multiply.outer(grid, eigs)) * x            # gamma(s t) x
        inner = np.exp(1j * s * np.multiply.outer(np.outer(grid, grid), eigs)) * x  # gamma(s t t') x
        # omega(u, w) = Im sum_j a_j u_j conj(w_j), evaluated on the (t, t') grid
        om = np.einsum("j,abj,aj->ab", eigs, inner, np.conj(outer)).imag
        double = simpson(simpson(om, h, axis=1) * grid, h)
        vec = simpson(outer, h, axis=0)
        return GroupElement(t + 0.5 * float(double), vec, s)

    def Ad(self, g: GroupElement, X: AlgebraElement) -> AlgebraElement:
        tp, xp, sp = g.as_tuple()
        t, x, s = X.as_tuple()
        dxp = self.spectrum.apply_D(xp)
        gx = self.spectrum.apply_gamma(sp, x)
        return AlgebraElement(
            t - float(np.vdot(gx, dxp).real) + 0.5 * float(np.vdot(dxp, dxp).real) * s,
            gx - s * dxp,
            s,
        )

    def coAd(self, g: GroupElement, lam: CoAlgebraElement) -> CoAlgebraElement:
        tp, xp, sp = g.as_tuple()
        dxp = self.spectrum.apply_D(xp)
        d_back = self.spectrum.apply_D(self.spectrum.apply_gamma(-sp, xp))
        return CoAlgebraElement(
            lam.tstar,
            self.spectrum.apply_gamma(sp, lam.a) + lam.tstar * dxp,
            0.5 * lam.tstar * float(np.vdot(dxp, dxp).real) + float(np.vdot(d_back, lam.a).real) + lam.sstar,
        )

    def bracket(self, X: AlgebraElement, Y: AlgebraElement) -> AlgebraElement:
        D = self.spectrum.apply_D
        return AlgebraElement(self.omega(X.x, Y.x), X.s * D(Y.x) - Y.s * D(X.x), 0.0)
