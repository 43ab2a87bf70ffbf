"""Constructive solvers and verifiers for the cocyclicity and concurrency theorems."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import predicates as pr
from .configuration import ANTI_CONWAY, CONWAY, Configuration, Triplet, six_points
from .errors import CoincidentDefiningPoints, NotScalene
from .numerics import format_rational
from .triangle import BaryPoint, Shape, Triangle, classify, contact_points, incenter, nagel


def _require_scalene(T: Triangle):
    if classify(T) is not Shape.SCALENE:
        raise NotScalene(f"triangle {tuple(map(str, T.sides))} is not scalene")


# Conway circle and the one-parameter family

@dataclass(frozen=True)
class ConwayCircle:
    center: BaryPoint
    radius_sq: Fraction


def conway_circle(T: Triangle) -> ConwayCircle:
    return ConwayCircle(incenter(T), T.r_sq + T.p ** 2)


def family_triplet(T: Triangle, alpha) -> Triplet:
    alpha = Fraction(alpha)
    return Triplet(alpha, 1 + (alpha - 1) * T.a / T.b, 1 + (alpha - 1) * T.a / T.c)


def family_radius_sq(T: Triangle, alpha) -> Fraction:
    return (T.p + (Fraction(alpha) - 1) * T.a) ** 2 + T.r_sq


def inscribed_alpha(T: Triangle) -> Fraction:
    """The family member whose circle is the incircle."""
    return 1 - T.p / T.a


def isosceles_extra(T: Triangle, apex: str) -> Triplet:
    a, b, c = T.sides
    return {"C": Triplet(0, 0, -a / c),
            "B": Triplet(0, -c / b, 0),
            "A": Triplet(-b / a, 0, 0)}[apex]


@dataclass(frozen=True)
class Membership:
    tag: str                        # "InFamilyT", "IsoscelesExtra" or "NotSolution"
    alpha: Fraction | None = None
    apex: str | None = None

    @property
    def is_solution(self) -> bool:
        return self.tag != "NotSolution"

    def to_json(self) -> dict:
        out = {"tag": self.tag}
        if self.alpha is not None:
            out["alpha"] = format_rational(self.alpha)
        if self.apex is not None:
            out["apex"] = self.apex
        return out


def classify_triplet(T: Triangle, t: Triplet) -> Membership:
    if family_triplet(T, t.alpha) == t:
        return Membership("InFamilyT", alpha=t.alpha)
    for apex in classify(T).apexes():
        if isosceles_extra(T, apex) == t:
            return Membership("IsoscelesExtra", apex=apex)
    return Membership("NotSolution")


def _cocyclic_quad(T: Triangle, pts) -> bool:
    """Concyclicity allowing coincident points: fewer than four distinct points
    lie on a common circle unless three distinct ones are collinear."""
    distinct = list(dict.fromkeys(pts))
    if len(distinct) == 4:
        return pr.concyclic(T, *distinct)
    if len(distinct) == 3:
        return not pr.collinear(*distinct)
    return True


@dataclass(frozen=True)
class FamilyCheck:
    ok: bool
    equidistant: bool
    membership: Membership
    radius_sq: Fraction | None
    addendum: tuple[bool, bool, bool] | None


def addendum_quadruples(cfg: Configuration):
    U, V, W = contact_points(cfg.triangle)
    return ((U, W, cfg["A'"], cfg["A''"]),
            (U, V, cfg["B'"], cfg["B''"]),
            (V, W, cfg["C'"], cfg["C''"]))


def verify_family(T: Triangle, t: Triplet) -> FamilyCheck:
    """Check that exact equidistance from the incenter agrees with the classification.

    For a solution triplet the radius formula and the three contact-point
    cocyclicities are checked as well.
    """
    cfg = six_points(T, t)
    eq = pr.equidistant_from(T, incenter(T), cfg.points_bary)
    membership = classify_triplet(T, t)
    ok = eq.ok == membership.is_solution
    addendum = None
    if membership.is_solution:
        addendum = tuple(_cocyclic_quad(T, q) for q in addendum_quadruples(cfg))
        ok = ok and all(addendum) and eq.common_sq == family_radius_sq(T, t.alpha)
    return FamilyCheck(ok, eq.ok, membership, eq.common_sq, addendum)


# (-1, -1, -1): concurrency at the Nagel point and three more circles

def dussau_lines(T: Triangle, t: Triplet) -> tuple[pr.BaryLine, pr.BaryLine, pr.BaryLine]:
    """Lines (A'C''), (B'A''), (C'B'') from their closed-form coefficients."""
    a, b, c = T.sides
    al, be, ga = t
    coeffs = (
        (-al * a * (a + ga * c), -(c + al * a) * (a + ga * c), -ga * c * (c + al * a)),
        (-al * a * (a + be * b), -be * b * (b + al * a), -(a + be * b) * (b + al * a)),
        (-(b + ga * c) * (c + be * b), -be * b * (b + ga * c), -ga * c * (c + be * b)),
    )
    lines = []
    for name, co in zip(("(A'C'')", "(B'A'')", "(C'B'')"), coeffs):
        if all(v == 0 for v in co):
            raise CoincidentDefiningPoints(f"{name}: defining points coincide")
        lines.append(pr.BaryLine(*co))
    return tuple(lines)


def dussau_point(T: Triangle) -> BaryPoint:
    _require_scalene(T)
    result = pr.concurrent(*dussau_lines(T, ANTI_CONWAY))
    if not result.is_concurrent or result.point != nagel(T):
        raise AssertionError(f"lines do not concur at the Nagel point: {result}")
    return result.point


@dataclass(frozen=True)
class AntiConwayReport:
    circles: tuple[pr.BaryCircle, pr.BaryCircle, pr.BaryCircle]
    nagel_powers: tuple[Fraction, Fraction, Fraction]
    expected_power: Fraction

    @property
    def powers_equal(self) -> bool:
        return len(set(self.nagel_powers)) == 1

    @property
    def matches_expected(self) -> bool:
        return all(pw == self.expected_power for pw in self.nagel_powers)

    def to_json(self) -> dict:
        return {
            "circles": [c.to_json() for c in self.circles],
            "nagel_powers": [format_rational(pw) for pw in self.nagel_powers],
            "expected_power": format_rational(self.expected_power),
            "powers_equal": self.powers_equal,
            "matches_expected": self.matches_expected,
        }


ANTI_CONWAY_QUADRUPLES = (("A'", "A''", "B'", "C''"),
                          ("B'", "B''", "C'", "A''"),
                          ("C'", "C''", "A'", "B''"))


def anti_conway(T: Triangle) -> AntiConwayReport:
    """Fit the three circles of the (-1, -1, -1) configuration and evaluate the
    Nagel point's power with respect to each.

    ``expected_power`` holds 8r^2, the value usually quoted for this power. The
    exact computation gives a common power of 4r^2 (IA' = (p-c)/(pc) * w and IC'' = (p-a)/(pa) * w with
    w = (a+c)AB - cAC, |w|^2 = 4acp(p-b)), so ``matches_expected`` is False on
    every triangle; the report carries both values rather than asserting.
    """
    _require_scalene(T)
    cfg = six_points(T, ANTI_CONWAY)
    I = nagel(T)
    circles, powers = [], []
    for names in ANTI_CONWAY_QUADRUPLES:
        P1, P2, P3, P4 = (cfg[n] for n in names)
        circle = pr.circle_through(T, P1, P2, P3)
        if not circle.contains(P4):
            raise AssertionError(f"{names[3]} is off the circle through {names[:3]}")
        circles.append(circle)
        powers.append(pr.power_of_point(T, I, circle))
    return AntiConwayReport(tuple(circles), tuple(powers), 8 * T.r_sq)


# congruences of (-1, -1, -1)

EXCLUSION_REASONS = ("p=2a", "p=2b", "p=2c", "p²=2bc", "p²=2ca", "p²=2ab")


@dataclass(frozen=True)
class CongruenceResult:
    tag: str                         # "Excluded" or "Found"
    reason: str | None = None
    triplet: Triplet | None = None

    def to_json(self) -> dict:
        if self.tag == "Found":
            return {"found": self.triplet.to_json()}
        return {"excluded": self.reason}


def exclusion(T: Triangle) -> str | None:
    a, b, c = T.sides
    p = T.p
    tests = (p == 2 * a, p == 2 * b, p == 2 * c,
             p * p == 2 * b * c, p * p == 2 * c * a, p * p == 2 * a * b)
    for reason, hit in zip(EXCLUSION_REASONS, tests):
        if hit:
            return reason
    return None


def congruence(T: Triangle) -> CongruenceResult:
    _require_scalene(T)
    reason = exclusion(T)
    if reason is not None:
        return CongruenceResult("Excluded", reason=reason)
    a, b, c = T.sides
    p = T.p
    t = Triplet((p * p - 2 * b * c) / (p * (p - 2 * a)),
                (p * p - 2 * c * a) / (p * (p - 2 * b)),
                (p * p - 2 * a * b) / (p * (p - 2 * c)))
    return CongruenceResult("Found", triplet=t)


def sigma_residuals(T: Triangle, t: Triplet) -> tuple[Fraction, Fraction, Fraction]:
    """Residuals of the three conditions for (A'C''), (B'A''), (C'B'') to pass
    through the Nagel point, in that order."""
    a, b, c = T.sides
    p = T.p
    al, be, ga = t
    return (a * al + c * ga + p * al * ga - (b - p),
            a * al + b * be + p * al * be - (c - p),
            b * be + c * ga + p * be * ga - (a - p))


@dataclass(frozen=True)
class QuadraticRoots:
    coefficients: tuple[Fraction, Fraction, Fraction]   # gamma^2, gamma^1, gamma^0
    roots: tuple[Fraction, ...]


def e3prime_roots(T: Triangle) -> QuadraticRoots:
    """Roots of the quadratic in gamma obtained by eliminating alpha and beta."""
    a, b, c = T.sides
    p = T.p
    q2, q1, q0 = p * (2 * c - p), -2 * (a * b - p * c), p * p - 2 * a * b
    if q2 == 0:
        roots = (-q0 / q1,)
    else:
        # -1 is always a root, the other follows from the product of roots
        other = -q0 / q2
        roots = (Fraction(-1),) if other == -1 else (Fraction(-1), other)
    return QuadraticRoots((q2, q1, q0), roots)


def theorem_report(theorem: str, T: Triangle, verdict, witness) -> dict:
    return {"theorem": theorem, "triangle": [format_rational(s) for s in T.sides],
            "verdict": verdict, "witness": witness}


__all__ = [
    "CONWAY", "ANTI_CONWAY", "ConwayCircle", "conway_circle", "family_triplet",
    "family_radius_sq", "inscribed_alpha", "isosceles_extra", "Membership",
    "classify_triplet", "FamilyCheck", "verify_family", "dussau_lines", "dussau_point",
    "AntiConwayReport", "anti_conway", "CongruenceResult", "congruence", "exclusion",
    "sigma_residuals", "QuadraticRoots", "e3prime_roots", "theorem_report",
]
