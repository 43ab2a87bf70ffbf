from fractions import Fraction

import pytest
import sympy as sp
from hypothesis import given

import oracles
from conwaygeom.configuration import (ANTI_CONWAY, CONWAY, POINT_NAMES, Triplet, cart_dist_sq,
                                      hexagon_metrics, six_points)
from conwaygeom.numerics import QuadExt
from conwaygeom.predicates import collinear
from conwaygeom.triangle import VERTEX_A, VERTEX_B, VERTEX_C, BaryPoint, Triangle, embed

from conftest import triangles, triplets

DEFINING = {"A'": (VERTEX_A, VERTEX_B), "A''": (VERTEX_A, VERTEX_C),
            "B'": (VERTEX_B, VERTEX_C), "B''": (VERTEX_B, VERTEX_A),
            "C'": (VERTEX_C, VERTEX_A), "C''": (VERTEX_C, VERTEX_B)}


def vector_definition(T, t):
    """Cartesian points straight from the side-extension vectors."""
    emb = embed(T)
    A, B, C = emb.vertices
    a, b, c = T.sides
    al, be, ga = t

    def move(P, k, Q):
        return (P[0] + k * (Q[0] - P[0]), P[1] + k * (Q[1] - P[1]))

    return {"A'": move(A, -al * a / c, B), "A''": move(A, -al * a / b, C),
            "B'": move(B, -be * b / a, C), "B''": move(B, -be * b / c, A),
            "C'": move(C, -ga * c / b, A), "C''": move(C, -ga * c / a, B)}


def test_conway_345_first_point(t345):
    cfg = six_points(t345, CONWAY)
    assert cfg["A'"] == BaryPoint(8, -3, 0)
    D = embed(t345).D
    assert cfg.cart("A'") == (QuadExt(-3, 0, D), QuadExt(0, 0, D))


def test_zero_triplet_gives_vertices(t456):
    cfg = six_points(t456, Triplet(0, 0, 0))
    assert cfg["A'"] == cfg["A''"] == VERTEX_A
    assert cfg["B'"] == cfg["B''"] == VERTEX_B
    assert cfg["C'"] == cfg["C''"] == VERTEX_C


def test_anti_conway_345(t345):
    assert six_points(t345, ANTI_CONWAY)["A'"] == BaryPoint(2, 3, 0)


def test_anti_conway_bary_forms(t456):
    # the (-1,-1,-1) barycentric forms written out directly
    a, b, c = t456.sides
    cfg = six_points(t456, ANTI_CONWAY)
    assert cfg["A'"] == BaryPoint(c - a, a, 0)
    assert cfg["B'"] == BaryPoint(0, a - b, b)
    assert cfg["C'"] == BaryPoint(c, 0, b - c)
    assert cfg["A''"] == BaryPoint(b - a, 0, a)
    assert cfg["B''"] == BaryPoint(b, c - b, 0)
    assert cfg["C''"] == BaryPoint(0, c, a - c)


def test_vertex_coincidence_is_allowed():
    T = Triangle(4, 5, 6)
    cfg = six_points(T, Triplet(0, 0, -T.b / T.c))
    assert cfg["C'"] == VERTEX_A


@pytest.mark.parametrize("sides, t", [
    ((3, 4, 5), (1, 1, 1)), ((4, 5, 6), (Fraction(3, 2), Fraction(7, 5), Fraction(4, 3))),
    ((5, 6, 7), (-1, -1, -1)), ((2, 2, 2), (Fraction(-1, 2), 2, Fraction(1, 3))),
])
def test_against_symbolic_oracle(sides, t):
    cfg = six_points(Triangle(*sides), Triplet(*t))
    sym = oracles.six(*sides, *t)
    for name in POINT_NAMES:
        x, y = cfg.cart(name)
        sx, sy = sym[name]
        assert sp.nsimplify(sx) == sp.Rational(x.u.numerator, x.u.denominator)
        assert sp.simplify(sy - (sp.Rational(y.u.numerator, y.u.denominator)
                                 + sp.Rational(y.v.numerator, y.v.denominator)
                                 * sp.sqrt(sp.Rational(y.D.numerator, y.D.denominator)))) == 0


def test_hexagon_345(t345):
    hm = hexagon_metrics(six_points(t345, CONWAY))
    assert hm.diag_main_sq == (144, 144, 144)
    assert hm.opposite_sides_parallel == (True, True, True)
    assert hm.diag_pairs_equal == (True, True, True)


def test_hexagon_family_alpha_zero(t456):
    t = Triplet(0, Fraction(1, 5), Fraction(1, 3))
    hm = hexagon_metrics(six_points(t456, t))
    a, b, c = t456.sides
    assert hm.diag_main_sq[2] == (a + t.beta * b + t.gamma * c) ** 2 == 49
    sym = oracles.six(4, 5, 6, 0, Fraction(1, 5), Fraction(1, 3))
    assert oracles.dist_sq(sym["B'"], sym["C''"]) == 49


def test_hexagon_not_parallel_off_conway(t456):
    hm = hexagon_metrics(six_points(t456, Triplet(1, 2, 3)))
    assert hm.opposite_sides_parallel != (True, True, True)


@given(triangles(), triplets())
def test_collinear_with_defining_vertices(T, t):
    cfg = six_points(T, t)
    for name, (P, Q) in DEFINING.items():
        assert collinear(cfg[name], P, Q)


@given(triangles(), triplets())
def test_bary_cartesian_agreement(T, t):
    cfg = six_points(T, t)
    direct = vector_definition(T, t)
    for name in POINT_NAMES:
        assert cfg.cart(name) == direct[name]


@given(triangles())
def test_conway_isosceles_sub_triangles(T):
    cfg = six_points(T, CONWAY)
    emb = embed(T)
    a, b, c = T.sides
    assert cart_dist_sq(emb.B, cfg.cart("A'")) == cart_dist_sq(emb.B, cfg.cart("C''")) == (a + c) ** 2
    assert cart_dist_sq(emb.A, cfg.cart("B''")) == cart_dist_sq(emb.A, cfg.cart("C'")) == (b + c) ** 2
    assert cart_dist_sq(emb.C, cfg.cart("A''")) == cart_dist_sq(emb.C, cfg.cart("B'")) == (a + b) ** 2


@given(triangles())
def test_conway_hexagon(T):
    hm = hexagon_metrics(six_points(T, CONWAY))
    assert hm.diag_main_sq == (4 * T.p ** 2,) * 3
    assert hm.diag_pairs_equal == (True, True, True)
    assert hm.opposite_sides_parallel == (True, True, True)


@given(triangles())
def test_conway_first_point_beyond_a(T):
    cfg = six_points(T, CONWAY)
    # A' = A + k (B - A): k is the y-weight over the coordinate sum
    x, y, z = cfg["A'"].normalized()
    assert z == 0 and y < 0


def test_to_json_shape(t345):
    out = six_points(t345, CONWAY).to_json()
    assert set(out["points"]) == set(POINT_NAMES)
    assert out["points"]["A'"]["bary"] == ["8/5", "-3/5", "0"]
    assert out["points"]["A'"]["cart"] == [-3.0, 0.0]
