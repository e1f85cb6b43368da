"""Invariant cones ``W_d`` in the oscillator algebra and the functions living on them.

``W_inf`` is the half-space ``s > 0``; for finite ``d`` the cone ``W_d`` is cut
out by ``f_d(t, x, s) = t + d s - ||x||^2 / (2s) > 0``.  Everything here
depends on ``x`` only through its Hilbert norm, so no spectrum is needed.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Union

import numpy as np

from .exceptions import DomainError
from .group_real import AlgebraElement

BOUNDARY_BAND = 1e-12


@dataclass(frozen=True)
class ConeParameter:
    """Cone ``sign * W_d``; ``d = math.inf`` selects ``W_inf``."""

    d: float
    sign: int = 1

    def __post_init__(self):
        object.__setattr__(self, "d", float(self.d))
        if self.sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")
        if math.isnan(self.d) or self.d == -math.inf:
            raise ValueError("d must be a real number or +inf")

    @property
    def finite(self) -> bool:
        return math.isfinite(self.d)

    @classmethod
    def parse(cls, value: Union[str, float, int], sign: int = 1) -> "ConeParameter":
        if isinstance(value, str):
            text = value.strip().lower()
            value = math.inf if text in ("inf", "+inf", "infinity") else float(text)
        return cls(float(value), sign)

    def __str__(self) -> str:
        prefix = "-" if self.sign < 0 else ""
        return f"{prefix}W_{'inf' if not self.finite else format(self.d, 'g')}"


def _as_cone(c) -> ConeParameter:
    return c if isinstance(c, ConeParameter) else ConeParameter.parse(c)


def _norm2(x: np.ndarray) -> float:
    return float(np.vdot(x, x).real)


def f_d(X: AlgebraElement, d: float) -> float:
    if X.s <= 0:
        raise DomainError(f"f_d is defined only for s > 0, got s = {X.s}")
    return X.t + d * X.s - _norm2(X.x) / (2.0 * X.s)


def margin(X: AlgebraElement, c) -> float:
    """Signed distance-like quantity: positive inside the open cone, negative outside.

    For finite ``d`` this is ``f_d`` (``-inf`` off ``W_inf``); for ``d = inf``
    it is ``s``.  On ``-W_d`` the input is negated first.
    """
    c = _as_cone(c)
    if c.sign < 0:
        X = -X
    if not c.finite:
        return X.s
    if X.s <= 0:
        return -math.inf if X.s < 0 else 0.0
    return f_d(X, c.d)


def classify(X: AlgebraElement, c, band: float = BOUNDARY_BAND) -> str:
    """``"inside"``, ``"boundary"`` or ``"outside"`` with a boundary band of half-width ``band``."""
    m = margin(X, c)
    if m > band:
        return "inside"
    if m < -band:
        return "outside"
    return "boundary"


def in_cone(X: AlgebraElement, c) -> bool:
    return margin(X, c) > 0


def in_cartan_cone(t: float, s: float, c) -> bool:
    """Membership of ``(t, 0, s)`` in ``C_d = W_d`` intersected with the Cartan plane."""
    return in_cone(AlgebraElement(t, np.zeros(1), s), c)


def F_project(X: AlgebraElement) -> AlgebraElement:
    """Ad-invariant projection ``(t, x, s) -> (t - ||x||^2/(2s), 0, s)``."""
    if X.s == 0:
        raise DomainError("F is defined only for s != 0")
    return AlgebraElement(X.t - _norm2(X.x) / (2.0 * X.s), np.zeros_like(X.x), X.s)


def h_tilde(t: float, s: float, c) -> float:
    """Barrier on the Cartan cone: ``1/s + 1/(t + d s)``, or ``1/s`` when ``d = inf``."""
    c = _as_cone(c)
    if s <= 0 or (c.finite and t + c.d * s <= 0):
        raise DomainError(f"({t}, 0, {s}) is not in the open Cartan cone {c}")
    out = 1.0 / s
    if c.finite:
        out += 1.0 / (t + c.d * s)
    return out


def h_d(X: AlgebraElement, c) -> float:
    """Ad-invariant barrier on ``W_d``: ``h_tilde`` evaluated at ``F(X)``."""
    c = _as_cone(c)
    if c.sign < 0:
        X = -X
        c = ConeParameter(c.d)
    if X.s <= 0:
        raise DomainError(f"{X!r} is not in the open cone {c}")
    P = F_project(X)
    return h_tilde(P.t, P.s, c)
