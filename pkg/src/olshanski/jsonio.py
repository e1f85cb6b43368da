"""JSON encoding of elements, cone parameters and Fock states.

Complex numbers are two-element arrays ``[re, im]``; a bare number is read as
a real value.  Mode vectors are lists of such pairs.  The extended real ``d``
is a number or the string ``"inf"``.
"""

from __future__ import annotations

import json
import math
import sys
from pathlib import Path
from typing import Any

import numpy as np

from .group_complex import ComplexAlgebraElement, ComplexGroupElement, CVector
from .group_real import AlgebraElement, CoAlgebraElement, GroupElement
from .spectral import Spectrum


class InputError(ValueError):
    """Malformed JSON input."""


def complex_to_json(z: complex) -> list[float]:
    z = complex(z)
    return [float(z.real), float(z.imag)]


def complex_from_json(value: Any) -> complex:
    if isinstance(value, bool):
        raise InputError(f"expected a number or [re, im], got {value!r}")
    if isinstance(value, (int, float)):
        return complex(float(value), 0.0)
    if isinstance(value, (list, tuple)) and len(value) == 2 and all(
        isinstance(c, (int, float)) and not isinstance(c, bool) for c in value
    ):
        return complex(float(value[0]), float(value[1]))
    raise InputError(f"expected a number or [re, im], got {value!r}")


def real_from_json(value: Any, name: str) -> float:
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise InputError(f"{name} must be a real number, got {value!r}")
    return float(value)


def vector_to_json(v: np.ndarray) -> list[list[float]]:
    return [complex_to_json(c) for c in np.asarray(v).reshape(-1)]


def vector_from_json(value: Any, spectrum: Spectrum | None = None, name: str = "x") -> np.ndarray:
    if not isinstance(value, list):
        raise InputError(f"{name} must be a list of [re, im] pairs")
    v = np.array([complex_from_json(c) for c in value], dtype=complex)
    if spectrum is not None and v.size != spectrum.n:
        raise InputError(f"{name} has {v.size} entries but the spectrum has {spectrum.n} modes")
    return v


def _require(obj: Any, keys: tuple[str, ...], kind: str) -> dict:
    if not isinstance(obj, dict):
        raise InputError(f"{kind} must be a JSON object")
    missing = [k for k in keys if k not in obj]
    if missing:
        raise InputError(f"{kind} is missing key(s) {missing}")
    return obj


# -- real elements ---------------------------------------------------------

def triple_to_json(e) -> dict:
    return {"t": float(e.t), "x": vector_to_json(e.x), "s": float(e.s)}


def _triple_from_json(obj, cls, spectrum):
    obj = _require(obj, ("t", "x", "s"), cls.__name__)
    return cls(real_from_json(obj["t"], "t"), vector_from_json(obj["x"], spectrum),
               real_from_json(obj["s"], "s"))


def group_from_json(obj, spectrum: Spectrum | None = None) -> GroupElement:
    return _triple_from_json(obj, GroupElement, spectrum)


def algebra_from_json(obj, spectrum: Spectrum | None = None) -> AlgebraElement:
    return _triple_from_json(obj, AlgebraElement, spectrum)


def coalgebra_to_json(lam: CoAlgebraElement) -> dict:
    return {"tstar": lam.tstar, "a": vector_to_json(lam.a), "sstar": lam.sstar}


def coalgebra_from_json(obj, spectrum: Spectrum | None = None) -> CoAlgebraElement:
    obj = _require(obj, ("tstar", "a", "sstar"), "CoAlgebraElement")
    return CoAlgebraElement(real_from_json(obj["tstar"], "tstar"), vector_from_json(obj["a"], spectrum, "a"),
                            real_from_json(obj["sstar"], "sstar"))


# -- complexified elements -------------------------------------------------

def cvector_to_json(v: CVector) -> dict:
    return {"p": vector_to_json(v.p), "q": vector_to_json(v.q)}


def cvector_from_json(obj, spectrum: Spectrum | None = None) -> CVector:
    obj = _require(obj, ("p", "q"), "CVector")
    return CVector(vector_from_json(obj["p"], spectrum, "p"), vector_from_json(obj["q"], spectrum, "q"))


def ctriple_to_json(e) -> dict:
    return {"z": complex_to_json(e.z), "v": cvector_to_json(e.v), "s": complex_to_json(e.s)}


def complex_group_from_json(obj, spectrum: Spectrum | None = None) -> ComplexGroupElement:
    obj = _require(obj, ("z", "v", "s"), "ComplexGroupElement")
    return ComplexGroupElement(complex_from_json(obj["z"]), cvector_from_json(obj["v"], spectrum),
                               complex_from_json(obj["s"]))


def complex_algebra_from_json(obj, spectrum: Spectrum | None = None) -> ComplexAlgebraElement:
    e = complex_group_from_json(obj, spectrum)
    return ComplexAlgebraElement(e.z, e.v, e.s)


def is_complex_element(obj) -> bool:
    return isinstance(obj, dict) and "z" in obj


def element_to_json(e) -> dict:
    if isinstance(e, (ComplexGroupElement, ComplexAlgebraElement)):
        return ctriple_to_json(e)
    if isinstance(e, CoAlgebraElement):
        return coalgebra_to_json(e)
    return triple_to_json(e)


# -- misc -----------------------------------------------------------------

def d_to_json(d: float):
    return "inf" if math.isinf(d) else float(d)


def state_from_json(obj, dim: int) -> np.ndarray:
    """Fock amplitudes in basis order; ``{"amplitudes": [...]}`` or a bare list.

    Shorter lists are padded with zeros, so low-occupation states can be
    written without knowing the cutoff.
    """
    if isinstance(obj, dict):
        obj = _require(obj, ("amplitudes",), "Fock state")["amplitudes"]
    v = vector_from_json(obj, name="amplitudes")
    if v.size > dim:
        raise InputError(f"state has {v.size} amplitudes, Fock space has dimension {dim}")
    out = np.zeros(dim, dtype=complex)
    out[: v.size] = v
    return out


def load_json(source: str) -> Any:
    """Read JSON from a path, from ``-`` (standard input), or from an inline ``{...}`` literal."""
    try:
        if source == "-":
            return json.load(sys.stdin)
        if source.lstrip().startswith(("{", "[")):
            return json.loads(source)
        return json.loads(Path(source).read_text())
    except json.JSONDecodeError as exc:
        raise InputError(f"invalid JSON in {source!r}: {exc}") from exc
    except OSError as exc:
        raise InputError(f"cannot read {source!r}: {exc}") from exc


def dumps(obj: Any) -> str:
    return json.dumps(obj, indent=2, sort_keys=True, allow_nan=False)
