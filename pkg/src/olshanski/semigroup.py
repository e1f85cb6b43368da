"""The complex semigroups ``S_A`` and ``S_d`` and their polar decomposition.

Every element of ``S_A = {Im s > 0}`` factors uniquely as ``g * exp_C(eps*w)``
with ``g`` in the real group and ``w`` in ``W_inf``.  The inverse factorisation
goes through the map ``theta`` built from ``f_s(A)`` and ``g_s(A)``.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field

import numpy as np

from . import cones
from .exceptions import DecompositionResidualError, DomainError, NotInSemigroupError
from .group_complex import ComplexAlgebraElement, ComplexGroupElement, ComplexOscillatorGroup, CVector
from .group_real import AlgebraElement, GroupElement
from .spectral import Spectrum

log = logging.getLogger(__name__)

MIN_IMAG_TIME = 1e-14
RESIDUAL_SOFT = 1e-9
RESIDUAL_HARD = 1e-7


class SemigroupElement(ComplexGroupElement):
    """A complex group element with ``Im(s) > 0``."""

    def __post_init__(self):
        super().__post_init__()
        if not self.s.imag > 0:
            raise NotInSemigroupError(f"Im(s) must be > 0, got s = {self.s}")

    @classmethod
    def of(cls, e: ComplexGroupElement) -> "SemigroupElement":
        return e if isinstance(e, cls) else cls(e.z, e.v, e.s)


@dataclass(frozen=True, eq=False)
class PolarForm:
    g: GroupElement
    w: AlgebraElement
    residual: float = field(default=0.0, compare=False)

    def __post_init__(self):
        if not self.w.s > 0:
            raise DomainError(f"polar part must have s > 0, got {self.w.s}")


class Semigroup:
    """Polar calculus on ``S_A`` for a fixed spectrum."""

    def __init__(self, spectrum: Spectrum):
        self.spectrum = spectrum
        self.G = ComplexOscillatorGroup(spectrum)

    def theta(self, v: np.ndarray, s: float) -> ComplexGroupElement:
        sp = self.spectrum
        v = np.asarray(v, dtype=complex)
        if s == 0:
            return ComplexGroupElement(0.0, CVector.imag(-v), 0.0)
        fv = sp.apply_fA(s, v)
        central = (float(np.vdot(fv, fv).real) - float(np.vdot(v, fv).real)) / (2.0 * s)
        return ComplexGroupElement(1j * central, CVector(-sp.apply_gA(s, v), -v), 0.0)

    def exp_i(self, w: AlgebraElement) -> ComplexGroupElement:
        return self.G.exp(ComplexAlgebraElement.imag(w))

    def compose(self, g: GroupElement, w: AlgebraElement) -> SemigroupElement:
        if not w.s > 0:
            raise DomainError(f"polar part must have s > 0, got {w.s}")
        return SemigroupElement.of(self.G.mul(self.G.embed(g), self.exp_i(w)))

    def decompose(self, e: ComplexGroupElement) -> PolarForm:
        z, y, r = e.as_tuple()
        s = r.imag
        if s <= MIN_IMAG_TIME:
            raise NotInSemigroupError(f"Im(s) must be > {MIN_IMAG_TIME:g}, got s = {r}")
        sp, G = self.spectrum, self.G
        x = sp.apply_gamma(-r.real, sp.apply_fA(s, y.q))
        rhs = G.mul(G.mul(ComplexGroupElement(z, y, 0.0), self.theta(y.q, s)),
                    ComplexGroupElement(0.0, CVector(sp.zeros(), sp.zeros()), r.real))
        c, v, rho = rhs.as_tuple()
        scale = max(1.0, y.maxabs())
        residual = max(float(np.max(np.abs(v.q), initial=0.0)), abs(rho.imag)) / scale
        if residual > RESIDUAL_HARD:
            raise DecompositionResidualError(f"group factor is not real: residual {residual:.3e}")
        if residual > RESIDUAL_SOFT:
            log.warning("polar decomposition residual %.3e above %.1e", residual, RESIDUAL_SOFT)
        return PolarForm(GroupElement(c.real, v.p, rho.real), AlgebraElement(c.imag, x, s), residual)

    def star(self, e: ComplexGroupElement) -> SemigroupElement:
        """``g exp(eps w) -> g^{-1} exp(eps Ad(g) w)``, computed through the polar form."""
        pf = self.decompose(e)
        R = self.G.real_group
        return self.compose(R.inv(pf.g), R.Ad(pf.g, pf.w))

    def in_Sd(self, e: ComplexGroupElement, c) -> bool:
        return cones.in_cone(self.decompose(e).w, c)

    def margin(self, e: ComplexGroupElement, c) -> float:
        return cones.margin(self.decompose(e).w, c)

    def alpha(self, e: ComplexGroupElement, a: float = 0.0) -> float:
        """Absolute value ``exp(||x||^2/(2s) - t - s a)`` of the polar part ``(t, x, s)``."""
        w = self.decompose(e).w
        return math.exp(float(np.vdot(w.x, w.x).real) / (2.0 * w.s) - w.t - w.s * a)

    def curve_monotone_check(self, x: AlgebraElement, y: AlgebraElement, c,
                             steps: int = 50, slack: float = 1e-9) -> tuple[list[float], bool]:
        """Barrier values along ``exp(eps x) exp(tau eps y)``, ``tau`` uniform in ``[0, 1]``.

        Returns the list of ``h_d`` values and whether it is nonincreasing up
        to ``slack`` per step.  ``y = 0`` is accepted and gives a constant list.
        """
        zero_direction = y.t == 0 and y.s == 0 and not np.any(y.x)
        for w in (x,) if zero_direction else (x, y):
            if not cones.in_cone(w, c):
                raise DomainError(f"{w!r} is not strictly inside the cone {c}")
        head = self.exp_i(x)
        values = []
        for tau in np.linspace(0.0, 1.0, steps + 1):
            point = self.G.mul(head, self.exp_i(tau * y))
            values.append(cones.h_d(self.decompose(point).w, c))
        ok = all(b <= a + slack for a, b in zip(values, values[1:]))
        return values, ok
