"""Exception hierarchy shared by every module."""


class OOCError(ValueError):
    """Base class for all errors raised by ooc2d."""


class ParameterError(OOCError):
    """Code parameters (L, N, w, thresholds) are out of range or inconsistent."""


class MalformedCodeError(OOCError):
    """A code representation violates its structural invariants."""


class DegeneratePairError(OOCError):
    """Two codes that should be distinct are the same code up to column shift."""
