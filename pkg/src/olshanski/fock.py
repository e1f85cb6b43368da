"""Truncated bosonic Fock representation of the oscillator group.

The ``n``-mode Fock space is cut off at total occupation ``N``; the basis is
all multi-indices ``m`` with ``|m| <= N`` in graded lexicographic order, so the
states of occupation ``<= k`` always form a prefix of the basis.  Operators
are dense complex matrices.

Conventions:

    phi(x)     = sum_j sqrt(a_j / 2) (x_j a_j^dagger + conj(x_j) a_j)
    dGamma     = sum_j a_j N_j
    pi(t,x,s)  = e^{it} exp(i phi(x)) exp(i s dGamma)
    dpi(t,x,s) = i (t + phi(x) + s dGamma)

With these, ``[phi(x), phi(y)] = -i omega(x, y)`` and ``pi`` reproduces the
group law including the phase ``omega(x, gamma(s) x') / 2``.  All operator
exponentials go through a Hermitian eigendecomposition.
"""

from __future__ import annotations

import itertools
import math
from functools import cached_property

import numpy as np

from .exceptions import DomainError
from .group_complex import ComplexGroupElement
from .group_real import AlgebraElement, GroupElement
from .semigroup import Semigroup
from .spectral import Spectrum

FockOperator = np.ndarray
FockVector = np.ndarray

MOMENTUM_IMAG_RESIDUAL = 1e-10


def _expm_real_symmetric(H: np.ndarray, coeff: complex, phase: np.ndarray) -> np.ndarray:
    """``exp(coeff * U H U^dagger)`` where ``H`` is real symmetric and ``U = diag(phase)``."""
    lam, V = np.linalg.eigh(H)
    return (phase[:, None] * (V * np.exp(coeff * lam))) @ (V.T * np.conj(phase)[None, :])


class FockSpace:
    """Fock space over ``C^n`` truncated at total occupation ``cutoff``."""

    def __init__(self, spectrum: Spectrum, cutoff: int = 30):
        if cutoff < 1:
            raise ValueError("cutoff must be at least 1")
        self.spectrum = spectrum
        self.cutoff = int(cutoff)
        self.semigroup = Semigroup(spectrum)
        n = spectrum.n
        basis = []
        for total in range(self.cutoff + 1):
            level = [m for m in itertools.product(range(total + 1), repeat=n) if sum(m) == total]
            basis.extend(sorted(level, reverse=True))
        self.basis: tuple[tuple[int, ...], ...] = tuple(basis)
        self.index = {m: k for k, m in enumerate(self.basis)}
        if len(self.basis) != math.comb(n + self.cutoff, n):
            raise AssertionError("Fock basis size mismatch")

    @property
    def dim(self) -> int:
        return len(self.basis)

    def low_dim(self, max_occupation: int) -> int:
        """Number of basis states with total occupation ``<= max_occupation``."""
        k = min(max(int(max_occupation), -1), self.cutoff)
        return math.comb(self.spectrum.n + k, self.spectrum.n) if k >= 0 else 0

    def vacuum(self) -> FockVector:
        v = np.zeros(self.dim, dtype=complex)
        v[0] = 1.0
        return v

    @cached_property
    def annihilators(self) -> tuple[np.ndarray, ...]:
        ops = []
        for j in range(self.spectrum.n):
            a = np.zeros((self.dim, self.dim))
            for col, m in enumerate(self.basis):
                if m[j] > 0:
                    lower = m[:j] + (m[j] - 1,) + m[j + 1:]
                    a[self.index[lower], col] = math.sqrt(m[j])
            ops.append(a)
        return tuple(ops)

    @cached_property
    def occupation(self) -> np.ndarray:
        return np.array(self.basis, dtype=float).reshape(self.dim, self.spectrum.n)

    @cached_property
    def _dgamma_diag(self) -> np.ndarray:
        return self.occupation @ self.spectrum.eigs

    def dGamma(self) -> FockOperator:
        return np.diag(self._dgamma_diag).astype(complex)

    def _phi_real(self, x: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
        """Split ``phi(x) = U R U^dagger`` with ``R`` real symmetric and ``U`` a diagonal phase.

        ``U = exp(i sum_j arg(x_j) N_j)`` rotates every ``x_j`` onto the
        positive axis, which lets the eigensolver work in real arithmetic.
        """
        x = self.spectrum.vector(x)
        R = np.zeros((self.dim, self.dim))
        for aj, xj, a in zip(self.spectrum.eigs, x, self.annihilators):
            R += math.sqrt(aj / 2.0) * abs(xj) * (a + a.T)
        phase = np.exp(1j * (self.occupation @ np.angle(x)))
        return R, phase

    def field_phi(self, x: np.ndarray) -> FockOperator:
        R, phase = self._phi_real(x)
        return phase[:, None] * R * np.conj(phase)[None, :]

    def _energy_real(self, X) -> tuple[np.ndarray, np.ndarray]:
        R, phase = self._phi_real(X.x)
        R[np.diag_indices(self.dim)] += X.t + X.s * self._dgamma_diag
        return R, phase

    def dpi(self, X: AlgebraElement) -> FockOperator:
        """``i (t + phi(x) + s dGamma)``."""
        R, phase = self._energy_real(X)
        return 1j * (phase[:, None] * R * np.conj(phase)[None, :])

    def pi(self, g: GroupElement) -> FockOperator:
        R, phase = self._phi_real(g.x)
        weyl = _expm_real_symmetric(R, 1j, phase)
        return np.exp(1j * g.t) * weyl * np.exp(1j * g.s * self._dgamma_diag)[None, :]

    def pi_hat_polar(self, g: GroupElement, w: AlgebraElement) -> FockOperator:
        """``pi(g) exp(i dpi(w))``; the exponent ``-(t + phi(x) + s dGamma)`` is bounded above."""
        if not w.s > 0:
            raise DomainError(f"polar part must have s > 0, got {w.s}")
        R, phase = self._energy_real(w)
        return self.pi(g) @ _expm_real_symmetric(R, -1.0, phase)

    def pi_hat(self, e: ComplexGroupElement) -> FockOperator:
        pf = self.semigroup.decompose(e)
        return self.pi_hat_polar(pf.g, pf.w)

    @staticmethod
    def support_function(w: AlgebraElement) -> float:
        """``sup Spec(i dpi(w)) = ||x||^2 / (2s) - t`` on ``W_inf``."""
        if not w.s > 0:
            raise DomainError(f"support function needs s > 0, got {w.s}")
        return float(np.vdot(w.x, w.x).real) / (2.0 * w.s) - w.t

    def momentum(self, v: FockVector, X: AlgebraElement) -> float:
        """``(1/i) <dpi(X) v, v> / <v, v>``."""
        v = np.asarray(v, dtype=complex).reshape(-1)
        if v.size != self.dim:
            raise ValueError(f"state has {v.size} amplitudes, Fock space has dimension {self.dim}")
        norm2 = float(np.vdot(v, v).real)
        if norm2 == 0.0:
            raise DomainError("momentum map is undefined at the zero vector")
        value = np.vdot(v, self.dpi(X) @ v) / 1j / norm2
        scale = max(1.0, abs(value))
        if abs(value.imag) > MOMENTUM_IMAG_RESIDUAL * scale:
            raise AssertionError(f"momentum has imaginary residual {value.imag:.3e}")
        return float(value.real)

    def compressed_error(self, M: FockOperator, max_occupation: int | None = None) -> float:
        """Spectral norm of the compression ``P M P`` onto occupation ``<= max_occupation``.

        Default is half the cutoff.  Truncation leakage lives near the cutoff,
        and the two-sided compression keeps it out of the measurement.
        """
        k = self.cutoff // 2 if max_occupation is None else max_occupation
        d = self.low_dim(k)
        return float(np.linalg.norm(M[:d, :d], 2))

    def norm(self, M: FockOperator) -> float:
        return float(np.linalg.norm(M, 2))
