"""Exception hierarchy.

Every error raised on bad input derives from :class:`MultLatError`, so the
CLI can map the whole family to exit status 2.
"""


class MultLatError(Exception):
    """Base class. ``witness`` holds the offending labels or indices, if any."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


# lattice construction
class NotAPoset(MultLatError):
    pass


class NotALattice(MultLatError):
    pass


class NoBounds(MultLatError):
    pass


# multiplication
class DimensionMismatch(MultLatError):
    pass


class UnsupportedClass(MultLatError):
    pass


# multiplicatively closed sets
class MissingOne(MultLatError):
    pass


class ContainsZero(MultLatError):
    pass


class NotClosed(MultLatError):
    pass


class PreconditionViolated(MultLatError):
    pass


# families
class MissingTop(MultLatError):
    pass


class SNotContained(MultLatError):
    pass


class PrNotContained(MultLatError):
    pass


class NotRLattice(MultLatError):
    pass


class BadParams(MultLatError):
    pass


# audits and search
class LimitExceeded(MultLatError):
    pass


# ring side
class BadModulus(MultLatError):
    pass


class SNotClosed(MultLatError):
    pass


class OracleMismatch(MultLatError):
    """Two independent computations of the same quantity disagree."""


# catalog / io
class UnknownName(MultLatError):
    pass


class FormatError(MultLatError):
    pass
