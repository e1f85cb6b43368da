"""Exception types raised across the package."""


class OlshanskiError(ValueError):
    """Base class for all errors raised by this package."""


class InvalidSpectrumError(OlshanskiError):
    pass


class SingularArgumentError(OlshanskiError):
    """A kernel was evaluated at one of its poles."""


class DomainError(OlshanskiError):
    """An argument lies outside the domain of a map (e.g. s <= 0 for f_d)."""


class NotInSemigroupError(OlshanskiError):
    pass


class DecompositionResidualError(OlshanskiError):
    """The polar factor read off the group product is not real to tolerance."""


class UnsupportedDirectionError(OlshanskiError):
    pass
