"""Exception hierarchy.

Errors split into two families: configuration problems (bad CLI flags,
unknown figure ids, malformed config files) and numerical-domain problems
(invalid states, out-of-range parameters, failed brackets).  The CLI maps
them to exit codes 2 and 3 respectively.
"""


class SpinTeleportError(Exception):
    """Base class for all package errors."""


class NumericalDomainError(SpinTeleportError, ValueError):
    """An input lies outside the mathematical domain of an operation."""


class DomainError(NumericalDomainError):
    pass


class InvalidDimensionError(NumericalDomainError):
    pass


class HermiticityError(NumericalDomainError):
    def __init__(self, asymmetry: float):
        self.asymmetry = asymmetry
        super().__init__(f"matrix is not Hermitian: max |M - M^H| = {asymmetry:.3e}")


class InvalidStateError(NumericalDomainError):
    pass


class BracketError(NumericalDomainError):
    pass


class ConfigurationError(SpinTeleportError, ValueError):
    def __init__(self, field: str, message: str):
        self.field = field
        super().__init__(f"{field}: {message}")


class DatasetFileError(SpinTeleportError, OSError):
    def __init__(self, path, reason):
        self.path = str(path)
        super().__init__(f"cannot write {self.path}: {reason}")
