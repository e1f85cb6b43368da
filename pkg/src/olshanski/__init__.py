"""Finite-rank oscillator groups, their Olshanski semigroups and Fock representations."""

from .cones import ConeParameter
from .exceptions import (
    DecompositionResidualError,
    DomainError,
    InvalidSpectrumError,
    NotInSemigroupError,
    OlshanskiError,
    SingularArgumentError,
    UnsupportedDirectionError,
)
from .fock import FockSpace
from .group_complex import ComplexAlgebraElement, ComplexGroupElement, ComplexOscillatorGroup, CVector
from .group_real import AlgebraElement, CoAlgebraElement, GroupElement, OscillatorGroup
from .semigroup import PolarForm, Semigroup, SemigroupElement
from .spectral import Spectrum, kernel_b, kernel_b2, kernel_f, kernel_g

__version__ = "0.1.0"

__all__ = [
    "AlgebraElement", "CoAlgebraElement", "ComplexAlgebraElement", "ComplexGroupElement",
    "ComplexOscillatorGroup", "ConeParameter", "CVector", "DecompositionResidualError", "DomainError",
    "FockSpace", "GroupElement", "InvalidSpectrumError", "NotInSemigroupError", "OlshanskiError",
    "OscillatorGroup", "PolarForm", "Semigroup", "SemigroupElement", "SingularArgumentError", "Spectrum",
    "UnsupportedDirectionError", "kernel_b", "kernel_b2", "kernel_f", "kernel_g",
]
