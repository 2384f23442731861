"""Exception hierarchy shared by all modules."""


class WZError(Exception):
    """Base class for library errors."""


class InputError(WZError):
    """Malformed input (bad index, wrong arity, inconsistent lengths)."""


class BadIndex(InputError):
    pass


class ZeroDenominator(InputError):
    pass


class ZeroInput(InputError):
    pass


class ZeroRationalPart(InputError):
    pass


class NotCompatible(WZError):
    """The certificates violate the integrability conditions."""

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report


class Unsupported(WZError):
    """A computation that is valid in principle but outside what we can do over Q."""


class UnsupportedResidue(Unsupported):
    pass


class UnrefinedFactor(Unsupported):
    def __init__(self, message, factor=None):
        super().__init__(message)
        self.factor = factor


class StructureGap(Unsupported):
    def __init__(self, message, factor=None):
        super().__init__(message)
        self.factor = factor


class PoleInRange(WZError):
    pass
