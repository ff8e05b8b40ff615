"""Exceptions raised by nvdd.

Every error derives from NvddError and from the builtin it specialises, so
``except ValueError`` keeps catching bad input and ``except RuntimeError``
keeps catching failed computations.
"""


class NvddError(Exception):
    """Base class for all nvdd errors"""


# geometry

class InvalidPoint(NvddError, ValueError):
    pass


class DegenerateSegment(NvddError, ValueError):
    pass


class DegenerateLine(NvddError, ValueError):
    pass


class InvalidPolygon(NvddError, ValueError):
    pass


class NonPositiveScale(NvddError, ValueError):
    pass


# vdd

class InvalidN(NvddError, ValueError):
    pass


class InvalidFrame(NvddError, ValueError):
    pass


class NotDelaunay(NvddError, ValueError):
    pass


class ParallelBisectors(NvddError, ValueError):
    pass


class SeedOutside(NvddError, ValueError):
    pass


class EmptyZone(NvddError, RuntimeError):
    """The anonymity zone came out empty; valid VDD input never does this"""


# models

class InvalidParams(NvddError, ValueError):
    pass


class RangeEmpty(NvddError, RuntimeError):
    pass


class ShiftFailed(NvddError, RuntimeError):
    pass


class ModelNotApplicable(NvddError, ValueError):
    pass


# attacks

class PointOutsideZone(NvddError, ValueError):
    pass


class DegenerateConfiguration(NvddError, RuntimeError):
    pass


# n-CD baseline

class ApproximationUnstable(NvddError, RuntimeError):
    pass


# wire

class WireError(NvddError, ValueError):
    pass


class BadMagic(WireError):
    pass


class BadVersion(WireError):
    pass


class LengthMismatch(WireError):
    pass


class TooManyVertices(WireError):
    pass


class TooManyPois(WireError):
    pass
