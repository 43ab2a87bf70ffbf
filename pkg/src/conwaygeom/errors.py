"""Exception hierarchy shared by every module.

Each concrete class name doubles as the error identifier reported by the CLI.
"""


class GeometryError(Exception):
    """Base class for domain errors (CLI exit status 3)."""

    @property
    def name(self):
        return type(self).__name__


# numerics
class MismatchedDiscriminant(GeometryError):
    pass


class DivisionByZero(GeometryError, ZeroDivisionError):
    pass


class NegativeDiscriminant(GeometryError):
    pass


# triangle
class NonPositiveSide(GeometryError):
    pass


class TriangleInequalityViolated(GeometryError):
    pass


class NonRationalSide(GeometryError):
    pass


# configuration / predicates
class DegenerateBarycentric(GeometryError):
    pass


class PointAtInfinity(GeometryError):
    pass


class IdenticalPoints(GeometryError):
    pass


class ParallelLines(GeometryError):
    pass


class DuplicatePoint(GeometryError):
    pass


class CollinearPoints(GeometryError):
    pass


class PreconditionViolated(GeometryError):
    pass


# theorems
class CoincidentDefiningPoints(GeometryError):
    pass


class NotScalene(GeometryError):
    pass


# oracle
class ExhaustedRejections(GeometryError):
    pass


class CollinearSeed(GeometryError):
    pass
