from __future__ import annotations


class GenStirlingError(ValueError):
    """Base class for input errors raised by the library."""


class MissingAssignment(GenStirlingError):
    pass


class NotDivisible(GenStirlingError):
    pass


class DivisorZero(GenStirlingError):
    pass


class PartsMismatch(GenStirlingError):
    pass


class BetaZero(GenStirlingError):
    pass


class TableTooSmall(GenStirlingError):
    pass


class UnknownProfile(GenStirlingError):
    pass


class CapExceeded(GenStirlingError):
    pass


class BadRange(GenStirlingError):
    pass


class LimitExceeded(GenStirlingError):
    pass


class ParseError(GenStirlingError):
    pass


class InternalNotDivisible(RuntimeError):
    """An exact division that must succeed did not: a bug, never bad input."""


class UnknownIdentity(GenStirlingError):
    pass
