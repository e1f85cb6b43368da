"""The complexification ``G_{A,C}`` of the oscillator group.

Two imaginary units are in play and they must not be confused:

* the *internal* unit ``i`` is the complex structure of the Hilbert space and
  lives inside the numpy entries of every mode vector;
* the *external* unit ``eps`` comes from complexifying the real Lie algebra.
  A vector of ``V_C`` is a pair ``(p, q)`` standing for ``p + eps*q``, and the
  complex scalars of the central and time slots are Python complex numbers
  whose ``j`` means ``eps``.

``i`` and ``eps`` commute and ``J = i*eps`` squares to one.  On the ``J = +1``
part (coordinate ``h+ = p - i q``) ``eps`` acts as ``-i``; on the ``J = -1``
part (``h- = p + i q``) it acts as ``+i``.  That splitting turns any real
power series in ``z*D_C`` into two ordinary scalar multiplications per mode.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np

from .exceptions import UnsupportedDirectionError
from .group_real import AlgebraElement, GroupElement, OscillatorGroup
from .spectral import Spectrum, kernel_b, kernel_b2, simpson


@dataclass(frozen=True, eq=False)
class CVector:
    """``p + eps*q`` in the complexified mode space."""

    p: np.ndarray
    q: np.ndarray

    def __post_init__(self):
        p = np.asarray(self.p, dtype=complex).reshape(-1)
        q = np.asarray(self.q, dtype=complex).reshape(-1)
        if p.shape != q.shape:
            raise ValueError("p and q must have the same length")
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "q", q)

    @classmethod
    def real(cls, x: np.ndarray) -> "CVector":
        x = np.asarray(x, dtype=complex)
        return cls(x, np.zeros_like(x))

    @classmethod
    def imag(cls, x: np.ndarray) -> "CVector":
        """``eps * x`` for a mode vector ``x``."""
        x = np.asarray(x, dtype=complex)
        return cls(np.zeros_like(x), x)

    def __add__(self, other: "CVector") -> "CVector":
        return CVector(self.p + other.p, self.q + other.q)

    def __sub__(self, other: "CVector") -> "CVector":
        return CVector(self.p - other.p, self.q - other.q)

    def __neg__(self) -> "CVector":
        return CVector(-self.p, -self.q)

    def __mul__(self, c: complex) -> "CVector":
        """Multiplication by an external complex scalar."""
        c = complex(c)
        return CVector(c.real * self.p - c.imag * self.q, c.real * self.q + c.imag * self.p)

    __rmul__ = __mul__

    def distance(self, other: "CVector") -> float:
        return float(max(np.max(np.abs(self.p - other.p), initial=0.0),
                         np.max(np.abs(self.q - other.q), initial=0.0)))

    def maxabs(self) -> float:
        return float(max(np.max(np.abs(self.p), initial=0.0), np.max(np.abs(self.q), initial=0.0)))

    def __repr__(self) -> str:
        return f"CVector(p={self.p.tolist()!r}, q={self.q.tolist()!r})"


@dataclass(frozen=True, eq=False)
class _CTriple:
    z: complex
    v: CVector
    s: complex

    def __post_init__(self):
        object.__setattr__(self, "z", complex(self.z))
        object.__setattr__(self, "s", complex(self.s))
        if not isinstance(self.v, CVector):
            raise TypeError("vector slot must be a CVector")

    def as_tuple(self):
        return self.z, self.v, self.s

    def distance(self, other: "_CTriple") -> float:
        return max(abs(self.z - other.z), self.v.distance(other.v), abs(self.s - other.s))

    def maxabs(self) -> float:
        return max(abs(self.z), self.v.maxabs(), abs(self.s))

    def __repr__(self) -> str:
        return f"{type(self).__name__}(z={self.z!r}, v={self.v!r}, s={self.s!r})"


class ComplexGroupElement(_CTriple):
    pass


class ComplexAlgebraElement(_CTriple):
    @classmethod
    def from_real(cls, X: AlgebraElement) -> "ComplexAlgebraElement":
        return cls(X.t, CVector.real(X.x), X.s)

    @classmethod
    def imag(cls, X: AlgebraElement) -> "ComplexAlgebraElement":
        """``eps * X`` for a real algebra element ``X``."""
        return cls(1j * X.t, CVector.imag(X.x), 1j * X.s)

    def __add__(self, other: "ComplexAlgebraElement") -> "ComplexAlgebraElement":
        return ComplexAlgebraElement(self.z + other.z, self.v + other.v, self.s + other.s)

    def __sub__(self, other: "ComplexAlgebraElement") -> "ComplexAlgebraElement":
        return ComplexAlgebraElement(self.z - other.z, self.v - other.v, self.s - other.s)

    def __mul__(self, c: complex) -> "ComplexAlgebraElement":
        return ComplexAlgebraElement(c * self.z, self.v * c, c * self.s)

    __rmul__ = __mul__


class ComplexOscillatorGroup:
    """Arithmetic of ``G_{A,C}`` for a fixed spectrum."""

    def __init__(self, spectrum: Spectrum):
        self.spectrum = spectrum
        self.real_group = OscillatorGroup(spectrum)

    @property
    def identity(self) -> ComplexGroupElement:
        zero = self.spectrum.zeros()
        return ComplexGroupElement(0.0, CVector(zero, zero), 0.0)

    def embed(self, g: GroupElement) -> ComplexGroupElement:
        return ComplexGroupElement(g.t, CVector.real(g.x), g.s)

    # -- vector-level maps ---------------------------------------------------

    @staticmethod
    def sigma(v: CVector) -> CVector:
        """Conjugation ``p + eps q -> p - eps q``; internal entries untouched."""
        return CVector(v.p, -v.q)

    def D_C(self, v: CVector) -> CVector:
        return CVector(self.spectrum.apply_D(v.p), self.spectrum.apply_D(v.q))

    def gamma_C(self, z: complex, v: CVector) -> CVector:
        """``exp(z D_C) v``: real part rotates each mode, the eps part is a hyperbolic 2x2 block."""
        z = complex(z)
        a = self.spectrum.eigs
        rot = np.exp(1j * z.real * a)
        p, q = rot * v.p, rot * v.q
        ch, sh = np.cosh(z.imag * a), np.sinh(z.imag * a)
        return CVector(ch * p - 1j * sh * q, 1j * sh * p + ch * q)

    def apply_series(self, func: Callable, z: complex, v: CVector) -> CVector:
        """Apply ``func(z D_C)`` for ``func`` a power series with real coefficients."""
        z = complex(z)
        ia = 1j * self.spectrum.eigs
        hp = (v.p - 1j * v.q) * func(np.conj(z) * ia)
        hm = (v.p + 1j * v.q) * func(z * ia)
        return CVector((hp + hm) / 2.0, 1j * (hp - hm) / 2.0)

    def B(self, z: complex, v: CVector) -> CVector:
        """``B_z = (gamma_C(z) - 1) / (z D_C)``, with ``B_0 = Id``."""
        return self.apply_series(kernel_b, z, v)

    @staticmethod
    def _b(x: np.ndarray, y: np.ndarray) -> float:
        return float(np.vdot(y, x).real)

    def bilinear_C(self, v: CVector, w: CVector) -> complex:
        """eps-bilinear extension of ``b(x, y) = Re<x, y>``."""
        b = self._b
        return complex(b(v.p, w.p) - b(v.q, w.q), b(v.p, w.q) + b(v.q, w.p))

    def inner_C(self, v: CVector, w: CVector) -> complex:
        """Hermitian inner product of the complexification, ``bilinear_C(v, sigma(w))``.

        Linear in the first argument and eps-antilinear in the second, so
        ``inner_C(v, v) = ||p||^2 + ||q||^2``.
        """
        return self.bilinear_C(v, self.sigma(w))

    def omega_C(self, v: CVector, w: CVector) -> complex:
        om = self.real_group.omega
        return complex(om(v.p, w.p) - om(v.q, w.q), om(v.p, w.q) + om(v.q, w.p))

    # -- group law -----------------------------------------------------------

    def mul(self, g: ComplexGroupElement, h: ComplexGroupElement) -> ComplexGroupElement:
        gv = self.gamma_C(g.s, h.v)
        return ComplexGroupElement(g.z + h.z + 0.5 * self.omega_C(g.v, gv), g.v + gv, g.s + h.s)

    def inv(self, g: ComplexGroupElement) -> ComplexGroupElement:
        return ComplexGroupElement(-g.z, -self.gamma_C(-g.s, g.v), -g.s)

    def exp(self, X: ComplexAlgebraElement) -> ComplexGroupElement:
        z, x, s = X.as_tuple()
        if s == 0:
            return ComplexGroupElement(z, x, 0.0)
        bx = self.B(s, x)
        # (B_s - 1) x / s = D_C b2(s D_C) x avoids dividing a cancellation by s
        central = self.inner_C(x, self.sigma(self.D_C(self.apply_series(kernel_b2, s, x)))) / 2.0
        return ComplexGroupElement(z + central, bx, s)

    def exp_quadrature(self, X: ComplexAlgebraElement, steps: int = 400) -> ComplexGroupElement:
        """Exponential from the double-integral formula with ``omega_C`` and ``gamma_C``."""
        if steps < 200:
            raise ValueError("exp_quadrature needs steps >= 200")
        steps += steps % 2
        z, x, s = X.as_tuple()
        grid = np.linspace(0.0, 1.0, steps + 1)
        h = 1.0 / steps
        a = self.spectrum.eigs

        def gam(zs: np.ndarray):
            # gamma_C(zs) x for an array of external-complex times, shape zs.shape + (n,)
            zs = zs[..., None]
            rot = np.exp(1j * zs.real * a)
            p, q = rot * x.p, rot * x.q
            ch, sh = np.cosh(zs.imag * a), np.sinh(zs.imag * a)
            return ch * p - 1j * sh * q, 1j * sh * p + ch * q

        op, oq = gam(s * grid)
        ip, iq = gam(s * np.outer(grid, grid))

        def om(u, w):
            return np.einsum("j,abj,aj->ab", a, u, np.conj(w)).imag

        om_re = om(ip, op) - om(iq, oq)
        om_im = om(ip, oq) + om(iq, op)
        dbl = [simpson(simpson(o, h, axis=1) * grid, h) for o in (om_re, om_im)]
        vec = CVector(simpson(op, h, axis=0), simpson(oq, h, axis=0))
        return ComplexGroupElement(z + 0.5 * complex(dbl[0], dbl[1]), vec, s)

    def star(self, g: ComplexGroupElement) -> ComplexGroupElement:
        """``(z, v, s)* = (conj z, sigma v, conj s)^{-1}``."""
        return self.inv(ComplexGroupElement(np.conj(g.z), self.sigma(g.v), np.conj(g.s)))

    def log_derivative(self, X: ComplexAlgebraElement, Y: ComplexAlgebraElement) -> ComplexAlgebraElement:
        """Left logarithmic derivative ``exp(X)^{-1} d exp_X(Y)`` at a Cartan base point.

        Only base points with vanishing vector slot are supported; there
        ``e^{-ad X}`` acts on the vector slot by ``gamma_C(-X.s)`` and fixes the
        outer slots, so the derivative is ``(Y.z, B_{-X.s} Y.v, Y.s)``.
        """
        if X.v.maxabs() != 0.0:
            raise UnsupportedDirectionError("log_derivative needs a base point with zero vector slot")
        return ComplexAlgebraElement(Y.z, self.B(-X.s, Y.v), Y.s)
