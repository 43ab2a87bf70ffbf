"""Triangle data model: validation, metrics, shape, embedding and classical centers."""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import (DegenerateBarycentric, NonPositiveSide, NonRationalSide,
                     PointAtInfinity, TriangleInequalityViolated)
from .numerics import QuadExt, as_rational, format_rational, rational_sqrt


class Shape(enum.Enum):
    SCALENE = "Scalene"
    ISOSCELES_APEX_A = "IsoscelesApexA"
    ISOSCELES_APEX_B = "IsoscelesApexB"
    ISOSCELES_APEX_C = "IsoscelesApexC"
    EQUILATERAL = "Equilateral"

    def apexes(self) -> tuple[str, ...]:
        """Vertices at which the triangle is isosceles (all three if equilateral)."""
        return {
            Shape.SCALENE: (),
            Shape.ISOSCELES_APEX_A: ("A",),
            Shape.ISOSCELES_APEX_B: ("B",),
            Shape.ISOSCELES_APEX_C: ("C",),
            Shape.EQUILATERAL: ("A", "B", "C"),
        }[self]


@dataclass(frozen=True)
class Triangle:
    """A triangle given by its side lengths a = BC, b = CA, c = AB."""

    a: Fraction
    b: Fraction
    c: Fraction
    p: Fraction = field(init=False, repr=False, compare=False)
    area_sq16: Fraction = field(init=False, repr=False, compare=False)
    r_sq: Fraction = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        a, b, c = (as_rational(s) for s in (self.a, self.b, self.c))
        if min(a, b, c) <= 0:
            raise NonPositiveSide(f"sides must be positive, got ({a}, {b}, {c})")
        if not (a < b + c and b < a + c and c < a + b):
            raise TriangleInequalityViolated(f"({a}, {b}, {c}) is degenerate or impossible")
        p = (a + b + c) / 2
        prod = (p - a) * (p - b) * (p - c)
        for name, value in (("a", a), ("b", b), ("c", c), ("p", p),
                            ("area_sq16", 16 * p * prod), ("r_sq", prod / p)):
            object.__setattr__(self, name, value)

    @property
    def sides(self) -> tuple[Fraction, Fraction, Fraction]:
        return self.a, self.b, self.c

    @classmethod
    def from_vertices(cls, A, B, C) -> "Triangle":
        """Build from Cartesian vertices (pairs of rationals or QuadExt).

        The squared side lengths must be rational squares of rationals.
        """
        def side(P, Q):
            dx, dy = _sub(P[0], Q[0]), _sub(P[1], Q[1])
            sq = dx * dx + dy * dy
            if isinstance(sq, QuadExt):
                if not sq.is_rational():
                    raise NonRationalSide(f"squared side {sq!r} is irrational")
                sq = sq.u
            root = rational_sqrt(sq)
            if root is None:
                raise NonRationalSide(f"side length sqrt({sq}) is irrational")
            return root

        return cls(side(B, C), side(A, C), side(A, B))

    def to_json(self) -> dict:
        return {
            "sides": [format_rational(s) for s in self.sides],
            "p": format_rational(self.p),
            "r_sq": format_rational(self.r_sq),
            "shape": classify(self).value,
            "nagel": [format_rational(v) for v in nagel(self).normalized()],
        }


def _sub(x, y):
    if isinstance(x, QuadExt) or isinstance(y, QuadExt):
        return x - y if isinstance(x, QuadExt) else -(y - x)
    return as_rational(x) - as_rational(y)


def triangle_from_sides(a, b, c) -> Triangle:
    return Triangle(a, b, c)


def classify(T: Triangle) -> Shape:
    a, b, c = T.sides
    if a == b == c:
        return Shape.EQUILATERAL
    if a == b:
        return Shape.ISOSCELES_APEX_C
    if b == c:
        return Shape.ISOSCELES_APEX_A
    if a == c:
        return Shape.ISOSCELES_APEX_B
    return Shape.SCALENE


class _Homogeneous:
    """Shared behaviour of homogeneous triples: equality is up to scale."""

    __slots__ = ()

    def coords(self) -> tuple[Fraction, Fraction, Fraction]:
        raise NotImplementedError

    def _canonical(self):
        x, y, z = self.coords()
        s = x + y + z
        if s == 0:
            s = next(v for v in (x, y, z) if v != 0)
        return (x / s, y / s, z / s)

    def __eq__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        u, v = self.coords(), other.coords()
        return (u[1] * v[2] == u[2] * v[1] and u[2] * v[0] == u[0] * v[2]
                and u[0] * v[1] == u[1] * v[0])

    def __hash__(self):
        return hash((type(self).__name__, self._canonical()))

    def __iter__(self):
        return iter(self.coords())


@dataclass(frozen=True, eq=False)
class BaryPoint(_Homogeneous):
    """Homogeneous barycentric point (x : y : z) relative to A, B, C."""

    x: Fraction
    y: Fraction
    z: Fraction

    def __post_init__(self):
        vals = [as_rational(v) for v in (self.x, self.y, self.z)]
        if all(v == 0 for v in vals):
            raise DegenerateBarycentric("(0 : 0 : 0) is not a point")
        for name, v in zip("xyz", vals):
            object.__setattr__(self, name, v)

    def coords(self):
        return self.x, self.y, self.z

    @property
    def total(self) -> Fraction:
        return self.x + self.y + self.z

    def is_finite(self) -> bool:
        return self.total != 0

    def normalized(self) -> tuple[Fraction, Fraction, Fraction]:
        s = self.total
        if s == 0:
            raise PointAtInfinity(f"{self!r} has zero coordinate sum")
        return (self.x / s, self.y / s, self.z / s)

    def __repr__(self):
        return "BaryPoint({} : {} : {})".format(*(format_rational(v) for v in self.coords()))


VERTEX_A = BaryPoint(1, 0, 0)
VERTEX_B = BaryPoint(0, 1, 0)
VERTEX_C = BaryPoint(0, 0, 1)


@dataclass(frozen=True)
class CartesianEmbedding:
    """A = (0, 0), B = (c, 0), C = (x_C, sqrt(D)) with y_C > 0."""

    A: tuple[QuadExt, QuadExt]
    B: tuple[QuadExt, QuadExt]
    C: tuple[QuadExt, QuadExt]
    D: Fraction

    def point(self, P: BaryPoint) -> tuple[QuadExt, QuadExt]:
        x, y, z = P.normalized()
        return (self.A[0] * x + self.B[0] * y + self.C[0] * z,
                self.A[1] * x + self.B[1] * y + self.C[1] * z)

    @property
    def vertices(self):
        return self.A, self.B, self.C


def embed(T: Triangle) -> CartesianEmbedding:
    a, b, c = T.sides
    D = T.area_sq16 / (4 * c * c)
    zero = QuadExt(0, 0, D)
    xc = (b * b + c * c - a * a) / (2 * c)
    return CartesianEmbedding(A=(zero, zero), B=(zero + c, zero),
                              C=(zero + xc, QuadExt.sqrt(D)), D=D)


def incenter(T: Triangle) -> BaryPoint:
    return BaryPoint(T.a, T.b, T.c)


def nagel(T: Triangle) -> BaryPoint:
    a, b, c = T.sides
    return BaryPoint(-a + b + c, a - b + c, a + b - c)


def contact_points(T: Triangle) -> tuple[BaryPoint, BaryPoint, BaryPoint]:
    """Incircle touch points U on AB, V on BC, W on CA (AU = p-a, BV = p-b, CW = p-c)."""
    pa, pb, pc = T.p - T.a, T.p - T.b, T.p - T.c
    return BaryPoint(pb, pa, 0), BaryPoint(0, pc, pb), BaryPoint(pc, 0, pa)
