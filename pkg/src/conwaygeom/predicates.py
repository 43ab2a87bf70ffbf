"""Exact incidence predicates in barycentric coordinates.

Everything here is rational arithmetic over the triangle's side lengths. The
``cart_*`` helpers at the bottom evaluate the same questions in the Cartesian
embedding over Q(sqrt(D)); they exist as an independent cross-check.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import (CollinearPoints, DuplicatePoint, IdenticalPoints, ParallelLines,
                     PointAtInfinity, PreconditionViolated)
from .numerics import QuadExt, as_rational, det, format_rational, solve
from .triangle import BaryPoint, Triangle, _Homogeneous


def _cross(u, v):
    return (u[1] * v[2] - u[2] * v[1],
            u[2] * v[0] - u[0] * v[2],
            u[0] * v[1] - u[1] * v[0])


@dataclass(frozen=True, eq=False)
class BaryLine(_Homogeneous):
    """The line l*x + m*y + n*z = 0."""

    l: Fraction
    m: Fraction
    n: Fraction

    def __post_init__(self):
        vals = [as_rational(v) for v in (self.l, self.m, self.n)]
        if all(v == 0 for v in vals):
            raise ValueError("(0 : 0 : 0) is not a line")
        for name, v in zip("lmn", vals):
            object.__setattr__(self, name, v)

    def coords(self):
        return self.l, self.m, self.n

    def evaluate(self, P: BaryPoint) -> Fraction:
        return self.l * P.x + self.m * P.y + self.n * P.z

    def contains(self, P: BaryPoint) -> bool:
        return self.evaluate(P) == 0

    def __repr__(self):
        return "BaryLine({} : {} : {})".format(*(format_rational(v) for v in self.coords()))


@dataclass(frozen=True)
class BaryCircle:
    """a^2 yz + b^2 zx + c^2 xy + (x+y+z)(ux+vy+wz) = 0 relative to ``triangle``.

    With this sign convention the power of a point is minus the form
    evaluated at its normalised coordinates.
    """

    triangle: Triangle
    u: Fraction
    v: Fraction
    w: Fraction

    def form(self, P: BaryPoint) -> Fraction:
        return _circle_form(self.triangle, P, (self.u, self.v, self.w))

    def contains(self, P: BaryPoint) -> bool:
        return self.form(P) == 0

    def to_json(self) -> dict:
        return {"u": format_rational(self.u), "v": format_rational(self.v),
                "w": format_rational(self.w)}


@dataclass(frozen=True)
class CartCircle:
    center: tuple[QuadExt, QuadExt]
    radius_sq: QuadExt


def _conic(T: Triangle, P) -> Fraction:
    x, y, z = P
    return T.a ** 2 * y * z + T.b ** 2 * z * x + T.c ** 2 * x * y


def _circle_form(T: Triangle, P: BaryPoint, uvw) -> Fraction:
    x, y, z = P.coords()
    s = x + y + z
    return _conic(T, (x, y, z)) + s * (uvw[0] * x + uvw[1] * y + uvw[2] * z)


def _require_finite(*points: BaryPoint):
    for P in points:
        if not P.is_finite():
            raise PointAtInfinity(f"{P!r} is at infinity")


def collinear(P: BaryPoint, Q: BaryPoint, R: BaryPoint) -> bool:
    return det([P.coords(), Q.coords(), R.coords()]) == 0


def line_through(P: BaryPoint, Q: BaryPoint) -> BaryLine:
    if P == Q:
        raise IdenticalPoints(f"{P!r} and {Q!r} are the same point")
    return BaryLine(*_cross(P.coords(), Q.coords()))


def intersection(l1: BaryLine, l2: BaryLine) -> BaryPoint:
    """Common point of two distinct lines (possibly at infinity)."""
    if l1 == l2:
        raise IdenticalPoints("lines coincide")
    return BaryPoint(*_cross(l1.coords(), l2.coords()))


@dataclass(frozen=True)
class Concurrency:
    status: str                      # "concurrent", "not_concurrent" or "all_identical"
    point: BaryPoint | None = None

    @property
    def is_concurrent(self) -> bool:
        return self.status == "concurrent"


def concurrent(l1: BaryLine, l2: BaryLine, l3: BaryLine) -> Concurrency:
    """Decide whether three lines share a point.

    Raises ParallelLines when the common point exists but lies at infinity.
    """
    lines = (l1, l2, l3)
    if det([l.coords() for l in lines]) != 0:
        return Concurrency("not_concurrent")
    for i, j in ((0, 1), (0, 2), (1, 2)):
        if lines[i] != lines[j]:
            P = intersection(lines[i], lines[j])
            break
    else:
        return Concurrency("all_identical")
    if not P.is_finite():
        raise ParallelLines("the lines are parallel (meet at infinity)")
    return Concurrency("concurrent", P)


def concyclic(T: Triangle, P1, P2, P3, P4) -> bool:
    pts = (P1, P2, P3, P4)
    _require_finite(*pts)
    for i in range(4):
        for j in range(i + 1, 4):
            if pts[i] == pts[j]:
                raise DuplicatePoint(f"points {i} and {j} coincide")
    rows = []
    for P in pts:
        x, y, z = P.coords()
        s = x + y + z
        rows.append([_conic(T, (x, y, z)), x * s, y * s, z * s])
    return det(rows) == 0


def circle_through(T: Triangle, P1, P2, P3) -> BaryCircle:
    pts = (P1, P2, P3)
    _require_finite(*pts)
    if P1 == P2 or P1 == P3 or P2 == P3 or collinear(*pts):
        raise CollinearPoints("three distinct non-collinear points are required")
    rows, rhs = [], []
    for P in pts:
        x, y, z = P.normalized()
        rows.append([x, y, z])
        rhs.append(-_conic(T, (x, y, z)))
    u, v, w = solve(rows, rhs)
    return BaryCircle(T, u, v, w)


def power_of_point(T: Triangle, P: BaryPoint, circle: BaryCircle) -> Fraction:
    """|PO|^2 - R^2 for the circle with centre O and radius R."""
    _require_finite(P)
    n = BaryPoint(*P.normalized())
    return -circle.form(n)


def displacement(P: BaryPoint, Q: BaryPoint):
    """Normalised Q - P; its coordinates sum to zero."""
    p, q = P.normalized(), Q.normalized()
    return tuple(qi - pi for pi, qi in zip(p, q))


def vector_dot(T: Triangle, u, v) -> Fraction:
    """Euclidean dot product of two displacement vectors (coordinate sums zero)."""
    a2, b2, c2 = T.a ** 2, T.b ** 2, T.c ** 2
    return -(a2 * (u[1] * v[2] + u[2] * v[1])
             + b2 * (u[2] * v[0] + u[0] * v[2])
             + c2 * (u[0] * v[1] + u[1] * v[0])) / 2


def dist_sq(T: Triangle, P: BaryPoint, Q: BaryPoint) -> Fraction:
    d = displacement(P, Q)
    return vector_dot(T, d, d)


def feuerbach_check(T: Triangle, P, D, E, M, N) -> bool:
    """Compare the signed products PD.PE and PM.PN along the lines (DE) and (MN)."""
    _require_finite(P, D, E, M, N)
    if {D, E} == {M, N}:
        return True
    pts = (D, E, M, N)
    if len(set(pts)) < 4:
        raise PreconditionViolated("D, E, M, N must be pairwise distinct")
    if not (collinear(P, D, E) and collinear(P, M, N)):
        raise PreconditionViolated("P must lie on both lines (DE) and (MN)")
    if line_through(D, E) == line_through(M, N):
        raise PreconditionViolated("(DE) and (MN) must be distinct lines")
    lhs = vector_dot(T, displacement(P, D), displacement(P, E))
    rhs = vector_dot(T, displacement(P, M), displacement(P, N))
    return lhs == rhs


@dataclass(frozen=True)
class Equidistance:
    common_sq: Fraction | None = None
    unequal_index: int | None = None

    @property
    def ok(self) -> bool:
        return self.common_sq is not None


def equidistant_from(T: Triangle, center: BaryPoint, pts) -> Equidistance:
    _require_finite(center, *pts)
    common = None
    for k, P in enumerate(pts):
        d = dist_sq(T, center, P)
        if common is None:
            common = d
        elif d != common:
            return Equidistance(unequal_index=k)
    return Equidistance(common_sq=common)


# Cartesian oracles over Q(sqrt(D)).

def cart_concyclic(points) -> bool:
    """Zero test of the 4x4 determinant |x y x^2+y^2 1| in Q(sqrt(D))."""
    rows = [[x, y, x * x + y * y, x * 0 + 1] for x, y in points]
    return _qdet(rows).is_zero()


def _qdet(m):
    n = len(m)
    if n == 1:
        return m[0][0]
    total = None
    for j in range(n):
        minor = [row[:j] + row[j + 1:] for row in m[1:]]
        term = m[0][j] * _qdet(minor)
        if j % 2:
            term = -term
        total = term if total is None else total + term
    return total
