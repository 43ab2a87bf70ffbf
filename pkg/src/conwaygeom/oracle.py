"""Seeded instance generation and brute-force cross-checks of the theorem verifiers.

Randomness comes from :class:`random.Random` (MT19937). Python guarantees
that integer seeding and ``randint``/``randrange`` are reproducible across
platforms and releases, which makes seeds part of the external interface.
Trial ``i`` of a suite seeded with ``s`` draws from ``Random(s * 2**32 + i)``.
"""
from __future__ import annotations

import json
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from fractions import Fraction

from . import predicates as pr
from . import theorems as th
from .configuration import ANTI_CONWAY, CONWAY, Triplet, hexagon_metrics, six_points
from .errors import CollinearSeed, ExhaustedRejections, GeometryError, NotScalene
from .numerics import FloatPolicy, QuadExt, format_rational
from .triangle import BaryPoint, Shape, Triangle, classify, embed, incenter, nagel

MAX_REJECTIONS = 1000
ALL_CHECKS = ("conway", "family", "dussau", "anti_conway", "congruence", "predicates")


@dataclass(frozen=True)
class SampleSpec:
    seed: int = 0
    count: int = 200
    side_range: tuple[int, int] = (1, 20)
    denominator_bound: int = 6
    shape_filter: str = "any"          # any | scalene | isosceles | equilateral
    avoid_exclusions: bool = False
    apex: str | None = None            # pin the apex for isosceles sampling

    def __post_init__(self):
        lo, hi = self.side_range
        if lo < 1 or hi < lo or self.count < 1 or self.denominator_bound < 1:
            raise ValueError(f"invalid sample spec: {self}")
        if self.shape_filter not in ("any", "scalene", "isosceles", "equilateral"):
            raise ValueError(f"unknown shape filter {self.shape_filter!r}")


def _side(spec: SampleSpec, rng: random.Random) -> Fraction:
    lo, hi = spec.side_range
    d = rng.randint(1, spec.denominator_bound)
    return Fraction(rng.randint(lo * d, hi * d), d)


def _candidate(spec: SampleSpec, rng: random.Random):
    if spec.shape_filter == "equilateral":
        s = _side(spec, rng)
        return s, s, s
    if spec.shape_filter == "isosceles":
        apex = spec.apex or rng.choice("ABC")
        leg, base = _side(spec, rng), _side(spec, rng)
        return {"C": (leg, leg, base), "A": (base, leg, leg), "B": (leg, base, leg)}[apex]
    return _side(spec, rng), _side(spec, rng), _side(spec, rng)


def _accept(spec: SampleSpec, T: Triangle) -> bool:
    shape = classify(T)
    if spec.shape_filter == "scalene" and shape is not Shape.SCALENE:
        return False
    if spec.shape_filter == "isosceles" and shape in (Shape.SCALENE, Shape.EQUILATERAL):
        return False
    if spec.avoid_exclusions and th.exclusion(T) is not None:
        return False
    return True


def sample_triangle(spec: SampleSpec, rng: random.Random) -> Triangle:
    for _ in range(MAX_REJECTIONS):
        a, b, c = _candidate(spec, rng)
        if not (a < b + c and b < a + c and c < a + b):
            continue
        T = Triangle(a, b, c)
        if _accept(spec, T):
            return T
    raise ExhaustedRejections(f"no acceptable triangle after {MAX_REJECTIONS} draws")


def random_rational(rng: random.Random, lo=-3, hi=3, den_bound=12) -> Fraction:
    d = rng.randint(1, den_bound)
    return Fraction(rng.randint(lo * d, hi * d), d)


def brute_force_circle(points) -> pr.CartCircle | None:
    """Circle through the first three Cartesian points; None if a later point is off it."""
    if len(points) < 3:
        raise ValueError("need at least three points")
    (x1, y1), (x2, y2), (x3, y3) = points[:3]
    # perpendicular bisectors: 2(Pk - P1) . O = |Pk|^2 - |P1|^2
    a11, a12 = 2 * (x2 - x1), 2 * (y2 - y1)
    a21, a22 = 2 * (x3 - x1), 2 * (y3 - y1)
    n1 = x1 * x1 + y1 * y1
    r1 = x2 * x2 + y2 * y2 - n1
    r2 = x3 * x3 + y3 * y3 - n1
    dt = a11 * a22 - a12 * a21
    if _is_zero(dt):
        raise CollinearSeed("the first three points are collinear")
    ox = (r1 * a22 - a12 * r2) / dt
    oy = (a11 * r2 - r1 * a21) / dt
    rsq = (x1 - ox) ** 2 + (y1 - oy) ** 2
    for x, y in points[3:]:
        if not _is_zero((x - ox) ** 2 + (y - oy) ** 2 - rsq):
            return None
    return pr.CartCircle((ox, oy), rsq)


def _is_zero(q) -> bool:
    return q.is_zero() if isinstance(q, QuadExt) else q == 0


def cart_line_intersection(P1, P2, Q1, Q2):
    """Intersection of lines (P1P2) and (Q1Q2) in the plane, or None if parallel."""
    dx1, dy1 = P2[0] - P1[0], P2[1] - P1[1]
    dx2, dy2 = Q2[0] - Q1[0], Q2[1] - Q1[1]
    dt = dx1 * dy2 - dy1 * dx2
    if _is_zero(dt):
        return None
    s = ((Q1[0] - P1[0]) * dy2 - (Q1[1] - P1[1]) * dx2) / dt
    return P1[0] + dx1 * s, P1[1] + dy1 * s


def point_on_circle(T: Triangle, circle: pr.BaryCircle, P: BaryPoint, Q: BaryPoint) -> BaryPoint:
    """Second intersection of line (PQ) with ``circle``, given P on it (rational)."""
    p, q = P.normalized(), Q.normalized()
    d = tuple(qi - pi for pi, qi in zip(p, q))
    # f(t) = form(p + t d) is quadratic in t with f(0) = 0
    f1 = circle.form(BaryPoint(*(pi + di for pi, di in zip(p, d))))
    fm = circle.form(BaryPoint(*(pi - di for pi, di in zip(p, d))))
    quad, lin = (f1 + fm) / 2, (f1 - fm) / 2
    if quad == 0:
        return Q
    t = -lin / quad
    return BaryPoint(*(pi + t * di for pi, di in zip(p, d)))


@dataclass
class Report:
    trials: int
    failures: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_json(self, **extra) -> str:
        return json.dumps({**extra, **asdict(self)}, sort_keys=True, ensure_ascii=False)


class _Trial:
    def __init__(self, T: Triangle, policy: FloatPolicy):
        self.T = T
        self.policy = policy
        self.failures = []

    def fail(self, check, expected, actual, triplet=None):
        self.failures.append({
            "triangle": [format_rational(s) for s in self.T.sides],
            "triplet": triplet.to_json() if triplet is not None else None,
            "check_name": check,
            "expected": _show(expected),
            "actual": _show(actual),
        })

    def expect(self, check, expected, actual, triplet=None):
        if expected != actual:
            self.fail(check, expected, actual, triplet)

    def expect_float(self, check, exact, approx, triplet=None):
        if abs(exact) <= 10 ** 6 and not self.policy.close(exact, approx):
            self.fail(check, float(exact), approx, triplet)


def _show(v):
    if isinstance(v, Fraction):
        return format_rational(v)
    if isinstance(v, (bool, int, float, str)) or v is None:
        return v
    if isinstance(v, (tuple, list)):
        return [_show(x) for x in v]
    if isinstance(v, QuadExt):
        return v.to_json()
    if isinstance(v, BaryPoint):
        return [format_rational(x) for x in v.normalized()] if v.is_finite() else repr(v)
    return repr(v)


def _float_pt(P):
    return float(P[0]), float(P[1])


def _float_dist_sq(P, Q):
    (x1, y1), (x2, y2) = _float_pt(P), _float_pt(Q)
    return (x1 - x2) ** 2 + (y1 - y2) ** 2


def _scalene_only(tr: _Trial, name: str, fn) -> bool:
    if classify(tr.T) is Shape.SCALENE:
        return True
    try:
        fn(tr.T)
    except NotScalene:
        return False
    tr.fail(name, "NotScalene", "no error")
    return False


def check_conway(tr: _Trial, rng):
    T = tr.T
    cfg = six_points(T, CONWAY)
    expected = T.p ** 2 + T.r_sq
    tr.expect("conway.radius_formula", expected, th.conway_circle(T).radius_sq)
    eq = pr.equidistant_from(T, incenter(T), cfg.points_bary)
    tr.expect("conway.equidistant", expected, eq.common_sq, CONWAY)
    fit = brute_force_circle(list(cfg.points_cart))
    I = embed(T).point(incenter(T))
    tr.expect("conway.brute_center", I, fit.center if fit else None, CONWAY)
    tr.expect("conway.brute_radius", QuadExt(expected, 0, embed(T).D),
              fit.radius_sq if fit else None, CONWAY)
    hm = hexagon_metrics(cfg)
    tr.expect("conway.diagonals", (4 * T.p ** 2,) * 3, hm.diag_main_sq, CONWAY)
    tr.expect("conway.parallel_sides", (True,) * 3, hm.opposite_sides_parallel, CONWAY)
    tr.expect("conway.diagonal_pairs", (True,) * 3, hm.diag_pairs_equal, CONWAY)
    for P in cfg.points_cart:
        tr.expect_float("conway.float_radius", expected, _float_dist_sq(P, I), CONWAY)


def check_family(tr: _Trial, rng):
    T = tr.T
    alpha = random_rational(rng)
    t = th.family_triplet(T, alpha)
    res = th.verify_family(T, t)
    tr.expect("family.verify", True, res.ok, t)
    tr.expect("family.radius", th.family_radius_sq(T, alpha), res.radius_sq, t)
    cfg = six_points(T, t)
    distinct = list(dict.fromkeys(cfg.points_cart))
    if len(distinct) >= 3:
        try:
            fit = brute_force_circle(distinct)
        except CollinearSeed:
            fit = None
        I = embed(T).point(incenter(T))
        tr.expect("family.brute_center", I, fit.center if fit else None, t)
    I = embed(T).point(incenter(T))
    for P in cfg.points_cart:
        tr.expect_float("family.float_radius", res.radius_sq, _float_dist_sq(P, I), t)
    # a perturbed triplet leaves the solution set
    bad = Triplet(t.alpha, t.beta, t.gamma + random_rational(rng, 1, 2))
    res = th.verify_family(T, bad)
    if res.membership.is_solution:
        return
    tr.expect("family.necessity", False, res.equidistant, bad)
    tr.expect("family.necessity_consistent", True, res.ok, bad)
    for apex in classify(T).apexes():
        extra = th.isosceles_extra(T, apex)
        res = th.verify_family(T, extra)
        tr.expect("family.isosceles_extra", True, res.ok, extra)


def check_dussau(tr: _Trial, rng):
    if not _scalene_only(tr, "dussau.not_scalene", th.dussau_point):
        return
    T = tr.T
    tr.expect("dussau.point", nagel(T), th.dussau_point(T), ANTI_CONWAY)
    cfg = six_points(T, ANTI_CONWAY)
    c = cfg.cart
    X = cart_line_intersection(c("A'"), c("C''"), c("B'"), c("A''"))
    Y = cart_line_intersection(c("A'"), c("C''"), c("C'"), c("B''"))
    N = embed(T).point(nagel(T))
    tr.expect("dussau.cartesian_12", N, X, ANTI_CONWAY)
    tr.expect("dussau.cartesian_13", N, Y, ANTI_CONWAY)
    for line, (P, Q) in zip(th.dussau_lines(T, ANTI_CONWAY),
                            (("A'", "C''"), ("B'", "A''"), ("C'", "B''"))):
        tr.expect("dussau.line_coefficients", pr.line_through(cfg[P], cfg[Q]), line, ANTI_CONWAY)


def check_anti_conway(tr: _Trial, rng):
    if not _scalene_only(tr, "anti_conway.not_scalene", th.anti_conway):
        return
    T = tr.T
    rep = th.anti_conway(T)
    tr.expect("anti_conway.powers_equal", True, rep.powers_equal, ANTI_CONWAY)
    tr.expect("anti_conway.power_8r2", (8 * T.r_sq,) * 3, rep.nagel_powers, ANTI_CONWAY)
    cfg = six_points(T, ANTI_CONWAY)
    N = embed(T).point(nagel(T))
    for names, bary_power in zip(th.ANTI_CONWAY_QUADRUPLES, rep.nagel_powers):
        pts = [cfg.cart(n) for n in names]
        tr.expect("anti_conway.bary_concyclic", True,
                  pr.concyclic(T, *(cfg[n] for n in names)), ANTI_CONWAY)
        fit = brute_force_circle(pts)
        if fit is None:
            tr.fail("anti_conway.brute_concyclic", True, False, ANTI_CONWAY)
            continue
        power = (N[0] - fit.center[0]) ** 2 + (N[1] - fit.center[1]) ** 2 - fit.radius_sq
        tr.expect("anti_conway.cartesian_power", QuadExt(bary_power, 0, embed(T).D), power,
                  ANTI_CONWAY)
        tr.expect_float("anti_conway.float_power", bary_power, float(power), ANTI_CONWAY)


def check_congruence(tr: _Trial, rng):
    if not _scalene_only(tr, "congruence.not_scalene", th.congruence):
        return
    T = tr.T
    res = th.congruence(T)
    if res.tag == "Excluded":
        tr.expect("congruence.excluded_only_trivial", [], nontrivial_sigma_solutions(T))
        return
    t = res.triplet
    tr.expect("congruence.sigma", (0, 0, 0), th.sigma_residuals(T, t), t)
    tr.expect("congruence.components", False, any(v in (0, -1) for v in t), t)
    conc = pr.concurrent(*th.dussau_lines(T, t))
    tr.expect("congruence.concurrent", nagel(T), conc.point, t)
    tr.expect("congruence.not_all_positive", False, all(v > 0 for v in t), t)


def nontrivial_sigma_solutions(T: Triangle) -> list:
    """Back-substitute every rational root of the gamma-quadratic; keep solutions
    other than (-1, -1, -1) with all components nonzero."""
    a, b, c = T.sides
    p = T.p
    found = []
    for g in th.e3prime_roots(T).roots:
        if a + p * g == 0 or b + p * g == 0:
            continue
        t = Triplet((b - p - c * g) / (a + p * g), (a - p - c * g) / (b + p * g), g)
        if th.sigma_residuals(T, t) != (0, 0, 0) or 0 in tuple(t):
            continue
        if t != ANTI_CONWAY:
            found.append(t.to_json())
    return found


def check_predicates(tr: _Trial, rng):
    T = tr.T
    emb = embed(T)
    for on_circle in (True, False):
        pts = random_four_points(T, rng, on_circle)
        if pts is None:
            continue
        bary = pr.concyclic(T, *pts)
        cart = pr.cart_concyclic([emb.point(P) for P in pts])
        fit = brute_force_circle([emb.point(P) for P in pts]) is not None
        tr.expect("predicates.cartesian", bary, cart)
        tr.expect("predicates.brute_force", bary, fit)
        if on_circle:
            tr.expect("predicates.on_circle", True, bary)
        P = feuerbach_pivot(pts)
        if P is not None:
            tr.expect("predicates.feuerbach", bary, pr.feuerbach_check(T, P, *pts))


def random_point(rng: random.Random) -> BaryPoint:
    x, y = random_rational(rng, -2, 2, 7), random_rational(rng, -2, 2, 7)
    return BaryPoint(x, y, 1 - x - y)


def random_four_points(T: Triangle, rng: random.Random, on_circle: bool):
    """Three random non-collinear points plus a fourth on or (generically) off their circle.

    Returns None when the draw is degenerate (duplicates or collinear seeds).
    """
    P1, P2, P3 = (random_point(rng) for _ in range(3))
    if len({P1, P2, P3}) < 3 or pr.collinear(P1, P2, P3):
        return None
    Q = random_point(rng)
    if on_circle:
        if Q == P1:
            return None
        circle = pr.circle_through(T, P1, P2, P3)
        Q = point_on_circle(T, circle, P1, Q)
    pts = (P1, P2, P3, Q)
    if len(set(pts)) < 4:
        return None
    return pts


def feuerbach_pivot(pts) -> BaryPoint | None:
    """Intersection of (P1P2) with (P3P4) when it is finite and the lines differ."""
    l1, l2 = pr.line_through(pts[0], pts[1]), pr.line_through(pts[2], pts[3])
    if l1 == l2:
        return None
    P = pr.intersection(l1, l2)
    return P if P.is_finite() else None


CHECKS = {
    "conway": check_conway,
    "family": check_family,
    "dussau": check_dussau,
    "anti_conway": check_anti_conway,
    "congruence": check_congruence,
    "predicates": check_predicates,
}


def trial_rng(seed: int, index: int) -> random.Random:
    return random.Random(seed * 2 ** 32 + index)


def run_trial(spec: SampleSpec, checks, index: int, policy=FloatPolicy()) -> list:
    rng = trial_rng(spec.seed, index)
    T = sample_triangle(spec, rng)
    tr = _Trial(T, policy)
    for name in checks:
        try:
            CHECKS[name](tr, rng)
        except (GeometryError, AssertionError) as exc:
            tr.fail(f"{name}.exception", "no error", f"{type(exc).__name__}: {exc}")
    return tr.failures


def _run_trial_args(args):
    return run_trial(*args)


def resolve_checks(checks) -> tuple[str, ...]:
    if isinstance(checks, str):
        checks = [c.strip() for c in checks.split(",") if c.strip()]
    names = []
    for c in checks:
        if c == "all":
            names.extend(ALL_CHECKS)
        elif c in CHECKS:
            names.append(c)
        else:
            raise ValueError(f"unknown check {c!r}; choose from {', '.join(ALL_CHECKS)}, all")
    return tuple(dict.fromkeys(names))


def run_suite(spec: SampleSpec, checks=("all",), workers: int = 1,
              policy: FloatPolicy = FloatPolicy()) -> Report:
    names = resolve_checks(checks)
    args = [(spec, names, i, policy) for i in range(spec.count)]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_run_trial_args, args, chunksize=8))
    else:
        results = [run_trial(*a) for a in args]
    failures = [f for trial in results for f in trial]
    return Report(trials=spec.count, failures=failures)
