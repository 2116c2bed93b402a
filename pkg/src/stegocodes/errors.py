"""Exception types shared across the library."""


class StegoCodesError(Exception):
    """Base class for all library errors."""


class DimensionMismatchError(StegoCodesError, ValueError):
    """Operands have incompatible lengths or live over different fields."""


class BudgetExceededError(StegoCodesError):
    """An enumeration would exceed the configured cap."""

    def __init__(self, message, required=None, cap=None):
        super().__init__(message)
        self.required = required
        self.cap = cap


class NotStegoMatrixError(StegoCodesError):
    """A matrix failed stego verification where a verified one was required."""

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report


class MalformedPartitionError(StegoCodesError):
    """A claimed partition violates disjointness, coverage, or non-emptiness."""

    def __init__(self, message, offenders=None):
        super().__init__(message)
        self.offenders = offenders


class NotPerfectError(StegoCodesError):
    """A code failed the sphere-packing equality or distance consistency check."""

    def __init__(self, message, certificate=None):
        super().__init__(message)
        self.certificate = certificate


class NotMleError(StegoCodesError):
    """A partition is a stego-code but does not meet the sphere-size equality."""


class PartCertificateError(StegoCodesError):
    """A class of a claimed MLE partition failed its perfectness certificate."""

    def __init__(self, message, part_index=None, certificate=None):
        super().__init__(message)
        self.part_index = part_index
        self.certificate = certificate


class ConstructionError(StegoCodesError):
    """A built object failed its own self-verification."""


class FormatError(StegoCodesError, ValueError):
    """A file or word literal could not be parsed."""
