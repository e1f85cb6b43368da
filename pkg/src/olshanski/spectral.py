"""Diagonal model of the positive operator ``A`` and its scalar functional calculus.

``A`` is stored by its eigenvalues ``a_1..a_n`` in its own eigenbasis, so a mode
vector is simply a length-``n`` complex array and every operator built from
``A`` acts by per-mode multiplication.  The imaginary unit of numpy arrays is
the complex structure of the Hilbert space; inner products are linear in the
first argument, ``<u, v> = sum(u_j * conj(v_j))``.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .exceptions import InvalidSpectrumError, SingularArgumentError

SERIES_RADIUS = 1e-3
POLE_GUARD = 1e-12

# z / sinh(z) = sum c_k z^(2k)
_F_SERIES = (1.0, -1.0 / 6.0, 7.0 / 360.0, -31.0 / 15120.0, 127.0 / 604800.0)
# tanh(w) = sum c_k w^(2k+1)
_TANH_SERIES = (1.0, -1.0 / 3.0, 2.0 / 15.0, -17.0 / 315.0, 62.0 / 2835.0)
# (e^w - 1) / w = sum w^k / (k+1)!
_B_SERIES = tuple(1.0 / math.factorial(k + 1) for k in range(9))
# (e^w - 1 - w) / w^2 = sum w^k / (k+2)!
_B2_SERIES = tuple(1.0 / math.factorial(k + 2) for k in range(20))
B2_SERIES_RADIUS = 0.5


def _poly(coeffs: Sequence[float], w):
    out = np.zeros_like(w)
    for c in reversed(coeffs):
        out = out * w + c
    return out


def _check_poles(z: np.ndarray) -> None:
    k = np.round(z.imag / np.pi)
    bad = (k != 0) & (np.abs(z - 1j * np.pi * k) < POLE_GUARD)
    if np.any(bad):
        raise SingularArgumentError(
            f"kernel evaluated within {POLE_GUARD:g} of a pole in pi*i*Z\\{{0}}: {z[bad][0]!r}"
        )


def _scalar_or_array(z, out):
    return complex(out) if np.ndim(z) == 0 else out


def kernel_f(z):
    """``2z / (e^z - e^-z)``, extended by 1 at the origin.

    Accepts scalars or arrays.  Raises :class:`SingularArgumentError` near the
    poles ``pi*i*k``, ``k != 0``.
    """
    z = np.asarray(z, dtype=complex)
    _check_poles(z)
    small = np.abs(z) < SERIES_RADIUS
    # even function: evaluate on Re >= 0 where e^{-2z} cannot overflow
    w = np.where(z.real < 0, -z, z)
    w_safe = np.where(small, 1.0, w)
    with np.errstate(over="ignore", under="ignore"):
        e = np.exp(-2.0 * w_safe)
        direct = 2.0 * w_safe * np.exp(-w_safe) / (1.0 - e)
    out = np.where(small, _poly(_F_SERIES, z * z), direct)
    return _scalar_or_array(z, out)


def kernel_g(z):
    """``(e^z + e^-z - 2) / (i (e^z - e^-z))``, equal to ``-i tanh(z/2)``; 0 at the origin."""
    z = np.asarray(z, dtype=complex)
    _check_poles(z)
    small = np.abs(z) < SERIES_RADIUS
    half = z / 2.0
    series = half * _poly(_TANH_SERIES, half * half)
    out = -1j * np.where(small, series, np.tanh(np.where(small, 0.0, half)))
    return _scalar_or_array(z, out)


def _expm1_complex(w: np.ndarray) -> np.ndarray:
    x, y = w.real, w.imag
    re = np.expm1(x) * np.cos(y) - 2.0 * np.sin(y / 2.0) ** 2
    im = np.exp(x) * np.sin(y)
    return re + 1j * im


def kernel_b(w):
    """``(e^w - 1) / w`` with value 1 at the origin (entire)."""
    w = np.asarray(w, dtype=complex)
    small = np.abs(w) < SERIES_RADIUS
    w_safe = np.where(small, 1.0, w)
    out = np.where(small, _poly(_B_SERIES, w), _expm1_complex(w_safe) / w_safe)
    return _scalar_or_array(w, out)


def kernel_b2(w):
    """``(e^w - 1 - w) / w^2`` with value 1/2 at the origin (entire).

    ``B(w) - 1 = w * kernel_b2(w)``, which lets callers divide ``B - 1`` by
    its argument without cancellation.  The series covers a wider disc than
    the other kernels because the direct formula cancels to second order.
    """
    w = np.asarray(w, dtype=complex)
    small = np.abs(w) < B2_SERIES_RADIUS
    w_safe = np.where(small, 1.0, w)
    direct = (_expm1_complex(w_safe) - w_safe) / (w_safe * w_safe)
    out = np.where(small, _poly(_B2_SERIES, w), direct)
    return _scalar_or_array(w, out)


def fhat(t):
    """Fourier density of ``kernel_f`` on the real line: ``pi / (e^{pi t/2} + e^{-pi t/2})^2``."""
    t = np.asarray(t, dtype=float)
    # pi / (4 cosh^2(pi t / 2)) written with a decaying exponential
    u = np.exp(-np.pi * np.abs(t))
    return np.pi * u / (1.0 + u) ** 2


def simpson(values: np.ndarray, h: float, axis: int = -1) -> np.ndarray:
    """Composite Simpson rule on an odd number of equally spaced samples."""
    values = np.moveaxis(np.asarray(values), axis, -1)
    m = values.shape[-1]
    if m < 3 or m % 2 == 0:
        raise ValueError("Simpson's rule needs an odd number (>= 3) of samples")
    w = np.ones(m)
    w[1:-1:2] = 4.0
    w[2:-1:2] = 2.0
    return (values @ w) * (h / 3.0)


def fourier_fhat_check(x: float, T: float = 40.0, steps: int = 8000) -> tuple[float, float]:
    """Integrate ``fhat(t) e^{ixt}`` over ``[-T, T]`` and compare with ``kernel_f(x)``.

    Returns ``(quadrature, exact)``.  The imaginary part of the integral
    vanishes by symmetry, so only the cosine part is returned.
    """
    if T < 30 or steps < 4000:
        raise ValueError("need T >= 30 and steps >= 4000")
    if steps % 2:
        steps += 1
    t = np.linspace(-T, T, steps + 1)
    quad = float(simpson(fhat(t) * np.cos(x * t), 2.0 * T / steps))
    return quad, float(kernel_f(x).real)


@dataclass(frozen=True, eq=False)
class Spectrum:
    """Eigenvalues of ``A``; all strictly positive."""

    eigs: np.ndarray

    def __post_init__(self):
        eigs = np.asarray(self.eigs, dtype=float).reshape(-1)
        if eigs.size == 0:
            raise InvalidSpectrumError("spectrum needs at least one eigenvalue")
        if not np.all(np.isfinite(eigs)) or np.any(eigs <= 0):
            raise InvalidSpectrumError(f"eigenvalues must be finite and > 0, got {eigs.tolist()}")
        eigs.setflags(write=False)
        object.__setattr__(self, "eigs", eigs)

    @property
    def n(self) -> int:
        return int(self.eigs.size)

    def __repr__(self) -> str:
        return f"Spectrum({self.eigs.tolist()})"

    def __eq__(self, other) -> bool:
        return isinstance(other, Spectrum) and np.array_equal(self.eigs, other.eigs)

    def __hash__(self) -> int:
        return hash(tuple(self.eigs.tolist()))

    @classmethod
    def parse(cls, text: str) -> "Spectrum":
        """Parse ``"1,2.5"`` or a JSON array ``"[1, 2.5]"``."""
        text = text.strip()
        try:
            if text.startswith("["):
                values = json.loads(text)
            else:
                values = [float(tok) for tok in text.split(",") if tok.strip()]
        except (ValueError, TypeError) as exc:
            raise InvalidSpectrumError(f"cannot parse spectrum {text!r}: {exc}") from exc
        if not isinstance(values, list) or not all(
            isinstance(v, (int, float)) and not isinstance(v, bool) for v in values
        ):
            raise InvalidSpectrumError(f"spectrum must be a list of numbers, got {text!r}")
        return cls(np.array(values, dtype=float))

    def vector(self, entries: Iterable[complex]) -> np.ndarray:
        """Validate and convert to a mode vector."""
        v = np.asarray(list(entries) if not isinstance(entries, np.ndarray) else entries,
                       dtype=complex).reshape(-1)
        if v.size != self.n:
            raise ValueError(f"mode vector has length {v.size}, spectrum has {self.n} modes")
        return v

    def zeros(self) -> np.ndarray:
        return np.zeros(self.n, dtype=complex)

    # -- functional calculus ------------------------------------------------

    def apply_A(self, v: np.ndarray, power: int = 1) -> np.ndarray:
        return self.eigs**power * v

    def apply_D(self, v: np.ndarray) -> np.ndarray:
        """Generator ``D = iA`` of the unitary group."""
        return 1j * self.eigs * v

    def apply_gamma(self, t: float, v: np.ndarray) -> np.ndarray:
        return np.exp(1j * t * self.eigs) * v

    def apply_fA(self, s, v: np.ndarray) -> np.ndarray:
        return kernel_f(s * self.eigs) * v

    def apply_fA_inverse(self, s, v: np.ndarray) -> np.ndarray:
        return v / kernel_f(s * self.eigs)

    def apply_gA(self, s, v: np.ndarray) -> np.ndarray:
        return kernel_g(s * self.eigs) * v

    def qn_seminorm(self, v, m: int) -> float:
        """``sum_k m^k/k! ||A^k v||`` summed until the terms are negligible.

        ``v`` may be a mode vector or a :class:`~olshanski.group_complex.CVector`;
        the latter uses the Hilbert norm of the complexification.
        """
        if m <= 0:
            raise ValueError("seminorm index must be a positive integer")
        comps = [np.asarray(v.p), np.asarray(v.q)] if hasattr(v, "q") else [np.asarray(v, dtype=complex)]
        amp = np.concatenate([np.abs(c) for c in comps])
        rates = np.concatenate([m * self.eigs for _ in comps])
        coef = amp.astype(float)
        total = float(np.linalg.norm(coef))
        if total == 0.0:
            return 0.0
        peak = float(rates.max())
        k = 0
        while True:
            k += 1
            coef = coef * rates / k
            term = float(np.linalg.norm(coef))
            total += term
            if k > peak and term < 1e-16 * total:
                return total
