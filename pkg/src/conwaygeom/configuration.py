"""The six side-extension points A', A'', B', B'', C', C'' of a parametrised triangle."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import PointAtInfinity
from .numerics import QuadExt, as_rational, format_rational
from .triangle import BaryPoint, Triangle, embed

POINT_NAMES = ("A'", "A''", "B'", "B''", "C'", "C''")


@dataclass(frozen=True)
class Triplet:
    alpha: Fraction
    beta: Fraction
    gamma: Fraction

    def __post_init__(self):
        for name in ("alpha", "beta", "gamma"):
            object.__setattr__(self, name, as_rational(getattr(self, name)))

    def __iter__(self):
        return iter((self.alpha, self.beta, self.gamma))

    def to_json(self) -> list[str]:
        return [format_rational(v) for v in self]


CONWAY = Triplet(1, 1, 1)
ANTI_CONWAY = Triplet(-1, -1, -1)


@dataclass(frozen=True)
class Configuration:
    triangle: Triangle
    triplet: Triplet
    points_bary: tuple[BaryPoint, ...]
    points_cart: tuple[tuple[QuadExt, QuadExt], ...]

    def __getitem__(self, name: str) -> BaryPoint:
        return self.points_bary[POINT_NAMES.index(name)]

    def cart(self, name: str) -> tuple[QuadExt, QuadExt]:
        return self.points_cart[POINT_NAMES.index(name)]

    def named(self) -> dict[str, BaryPoint]:
        return dict(zip(POINT_NAMES, self.points_bary))

    def to_json(self) -> dict:
        points = {}
        for name, P, (x, y) in zip(POINT_NAMES, self.points_bary, self.points_cart):
            points[name] = {
                "bary": [format_rational(v) for v in P.normalized()],
                "cart": [float(x), float(y)],
                "cart_exact": [x.to_json(), y.to_json()],
            }
        emb = embed(self.triangle)
        return {
            "triangle": self.triangle.to_json(),
            "triplet": self.triplet.to_json(),
            "vertices": {name: [V[0].to_json(), V[1].to_json()]
                         for name, V in zip("ABC", emb.vertices)},
            "points": points,
        }


def bary_points(T: Triangle, t: Triplet) -> tuple[BaryPoint, ...]:
    a, b, c = T.sides
    al, be, ga = t
    return (
        BaryPoint(c + al * a, -al * a, 0),   # A' on (AB)
        BaryPoint(b + al * a, 0, -al * a),   # A'' on (AC)
        BaryPoint(0, a + be * b, -be * b),   # B' on (BC)
        BaryPoint(-be * b, c + be * b, 0),   # B'' on (BA)
        BaryPoint(-ga * c, 0, b + ga * c),   # C' on (CA)
        BaryPoint(0, -ga * c, a + ga * c),   # C'' on (CB)
    )


def six_points(T: Triangle, t: Triplet) -> Configuration:
    """Build the configuration for triangle ``T`` and parameters ``t``.

    Each point's coordinate sum is a side length, so every point is finite
    for a valid triangle; coincidences with vertices are allowed.
    """
    pts = bary_points(T, t)
    for name, P in zip(POINT_NAMES, pts):
        if not P.is_finite():
            raise PointAtInfinity(f"{name} escapes to infinity")
    emb = embed(T)
    return Configuration(T, t, pts, tuple(emb.point(P) for P in pts))


@dataclass(frozen=True)
class HexagonMetrics:
    diag_main_sq: tuple[Fraction, Fraction, Fraction]
    diag_pairs_sq: tuple[tuple[Fraction, Fraction], ...]
    opposite_sides_parallel: tuple[bool, bool, bool]

    @property
    def diag_pairs_equal(self) -> tuple[bool, ...]:
        return tuple(x == y for x, y in self.diag_pairs_sq)


def _rational(q: QuadExt) -> Fraction:
    # squared lengths of points of the embedding always land in Q
    assert q.is_rational(), q
    return q.u


def cart_dist_sq(P, Q) -> Fraction:
    dx, dy = P[0] - Q[0], P[1] - Q[1]
    return _rational(dx * dx + dy * dy)


def cart_parallel(P1, P2, Q1, Q2) -> bool:
    ux, uy = P2[0] - P1[0], P2[1] - P1[1]
    vx, vy = Q2[0] - Q1[0], Q2[1] - Q1[1]
    return (ux * vy - uy * vx).is_zero()


def hexagon_metrics(cfg: Configuration) -> HexagonMetrics:
    """Metrics of the hexagon A'A''B'B''C'C'' taken in label order."""
    P = dict(zip(POINT_NAMES, cfg.points_cart))
    d = lambda u, v: cart_dist_sq(P[u], P[v])  # noqa: E731
    main = (d("A'", "B''"), d("A''", "C'"), d("B'", "C''"))
    pairs = ((d("A'", "C'"), d("A''", "B''")),
             (d("A'", "B'"), d("B''", "C''")),
             (d("B'", "C'"), d("A''", "C''")))
    par = (cart_parallel(P["A'"], P["A''"], P["B''"], P["C'"]),
           cart_parallel(P["A''"], P["B'"], P["C'"], P["C''"]),
           cart_parallel(P["B'"], P["B''"], P["C''"], P["A'"]))
    return HexagonMetrics(main, pairs, par)
