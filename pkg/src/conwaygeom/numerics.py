"""Exact scalars: rationals, the quadratic field Q(sqrt(D)), and float tolerances."""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational as _RationalABC

from .errors import DivisionByZero, MismatchedDiscriminant, NegativeDiscriminant

Rational = Fraction


def as_rational(value) -> Fraction:
    """Coerce ints, Fractions and strings ("n/d", "0.25", "3") to a Fraction.

    Floats are refused: they would silently carry binary rounding into
    computations that are supposed to be exact.
    """
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, _RationalABC)):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"not a rational number: {value!r}") from exc
    raise TypeError(f"cannot convert {type(value).__name__} to an exact rational")


def format_rational(q) -> str:
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def rational_sqrt(q) -> Fraction | None:
    """Exact square root of a nonnegative rational, or None when irrational."""
    q = Fraction(q)
    if q < 0:
        return None
    n, d = q.numerator, q.denominator
    rn, rd = math.isqrt(n), math.isqrt(d)
    if rn * rn == n and rd * rd == d:
        return Fraction(rn, rd)
    return None


def _sign(q) -> int:
    return (q > 0) - (q < 0)


@dataclass(frozen=True)
class QuadExt:
    """The real number u + v*sqrt(D) with u, v, D rational and D >= 0.

    When D is the square of a rational the radical is folded into u, so each
    value has exactly one representation for a given D and field equality is
    plain dataclass equality.
    """

    u: Fraction
    v: Fraction = Fraction(0)
    D: Fraction = Fraction(0)

    def __post_init__(self):
        u, v, D = as_rational(self.u), as_rational(self.v), as_rational(self.D)
        if D < 0:
            raise NegativeDiscriminant(f"discriminant {D} is negative")
        root = rational_sqrt(D)
        if root is not None:
            u, v = u + v * root, Fraction(0)
        object.__setattr__(self, "u", u)
        object.__setattr__(self, "v", v)
        object.__setattr__(self, "D", D)

    @classmethod
    def sqrt(cls, D) -> "QuadExt":
        return cls(0, 1, D)

    def _coerce(self, other) -> "QuadExt":
        if isinstance(other, QuadExt):
            if other.D != self.D:
                raise MismatchedDiscriminant(f"D={self.D} vs D={other.D}")
            return other
        return QuadExt(as_rational(other), 0, self.D)

    def __add__(self, other):
        o = self._coerce(other)
        return QuadExt(self.u + o.u, self.v + o.v, self.D)

    __radd__ = __add__

    def __neg__(self):
        return QuadExt(-self.u, -self.v, self.D)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        o = self._coerce(other)
        return QuadExt(self.u * o.u + self.v * o.v * self.D,
                       self.u * o.v + self.v * o.u, self.D)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            return NotImplemented
        result = QuadExt(1, 0, self.D)
        for _ in range(n):
            result = result * self
        return result

    def conjugate(self) -> "QuadExt":
        return QuadExt(self.u, -self.v, self.D)

    def norm(self) -> Fraction:
        # N(x) = x * conj(x); nonzero for x != 0 because sqrt(D) is irrational
        # whenever v survives canonicalization
        return self.u * self.u - self.v * self.v * self.D

    def inverse(self) -> "QuadExt":
        if self.is_zero():
            raise DivisionByZero("inverse of zero in Q(sqrt(D))")
        n = self.norm()
        return QuadExt(self.u / n, -self.v / n, self.D)

    def __truediv__(self, other):
        return self * self._coerce(other).inverse()

    def __rtruediv__(self, other):
        return self._coerce(other) * self.inverse()

    def is_zero(self) -> bool:
        return self.u == 0 and self.v == 0

    def is_rational(self) -> bool:
        return self.v == 0

    def sign(self) -> int:
        su, sv = _sign(self.u), _sign(self.v)
        if sv == 0 or self.D == 0:
            return su
        if su == 0 or su == sv:
            return sv
        lhs, rhs = self.u * self.u, self.v * self.v * self.D
        if lhs > rhs:
            return su
        if lhs < rhs:
            return sv
        return 0

    def __float__(self):
        return float(self.u) + float(self.v) * math.sqrt(self.D)

    def __lt__(self, other):
        return (self - other).sign() < 0

    def __le__(self, other):
        return (self - other).sign() <= 0

    def __gt__(self, other):
        return (self - other).sign() > 0

    def __ge__(self, other):
        return (self - other).sign() >= 0

    def to_json(self) -> dict:
        return {"u": format_rational(self.u), "v": format_rational(self.v),
                "D": format_rational(self.D), "approx": float(self)}

    @classmethod
    def from_json(cls, obj: dict) -> "QuadExt":
        return cls(as_rational(obj["u"]), as_rational(obj["v"]), as_rational(obj["D"]))

    def __repr__(self):
        if self.v == 0:
            return f"QuadExt({format_rational(self.u)})"
        return (f"QuadExt({format_rational(self.u)} + {format_rational(self.v)}"
                f"*sqrt({format_rational(self.D)}))")


def qext_arith(x: QuadExt, y: QuadExt, op: str) -> QuadExt:
    if x.D != y.D:
        raise MismatchedDiscriminant(f"D={x.D} vs D={y.D}")
    if op == "add":
        return x + y
    if op == "sub":
        return x - y
    if op == "mul":
        return x * y
    if op == "div":
        return x / y
    raise ValueError(f"unknown operation {op!r}")


def qext_sign(x: QuadExt) -> int:
    return x.sign()


def qext_to_float(x: QuadExt) -> float:
    return float(x)


@dataclass(frozen=True)
class FloatPolicy:
    rel_tol: float = 1e-9
    abs_tol: float = 1e-12

    def __post_init__(self):
        if not (self.rel_tol > 0 and self.abs_tol > 0):
            raise ValueError("tolerances must be positive")

    def close(self, x, y) -> bool:
        return math.isclose(float(x), float(y), rel_tol=self.rel_tol, abs_tol=self.abs_tol)


def det(matrix) -> Fraction:
    """Exact determinant by fraction-preserving Gaussian elimination."""
    m = [[Fraction(v) for v in row] for row in matrix]
    n = len(m)
    result = Fraction(1)
    for col in range(n):
        pivot = next((r for r in range(col, n) if m[r][col] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            m[col], m[pivot] = m[pivot], m[col]
            result = -result
        pv = m[col][col]
        result *= pv
        for r in range(col + 1, n):
            f = m[r][col] / pv
            if f:
                for k in range(col, n):
                    m[r][k] -= f * m[col][k]
    return result


def solve(matrix, rhs):
    """Solve a square linear system exactly; returns None when singular."""
    n = len(matrix)
    m = [[Fraction(v) for v in row] + [Fraction(b)] for row, b in zip(matrix, rhs)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if m[r][col] != 0), None)
        if pivot is None:
            return None
        m[col], m[pivot] = m[pivot], m[col]
        pv = m[col][col]
        m[col] = [v / pv for v in m[col]]
        for r in range(n):
            if r != col and m[r][col] != 0:
                f = m[r][col]
                m[r] = [vr - f * vc for vr, vc in zip(m[r], m[col])]
    return [row[n] for row in m]
