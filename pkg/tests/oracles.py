"""Independent symbolic oracles built with sympy straight from the vector
definitions of the construction (no barycentrics, no QuadExt)."""
import sympy as sp


def vertices(a, b, c):
    a, b, c = map(sp.Rational, (a, b, c))
    xc = (b ** 2 + c ** 2 - a ** 2) / (2 * c)
    return sp.Matrix([0, 0]), sp.Matrix([c, 0]), sp.Matrix([xc, sp.sqrt(b ** 2 - xc ** 2)])


def six(a, b, c, alpha, beta, gamma):
    A, B, C = vertices(a, b, c)
    a, b, c, al, be, ga = map(sp.Rational, (a, b, c, alpha, beta, gamma))
    return {
        "A'": A - al * a / c * (B - A),
        "A''": A - al * a / b * (C - A),
        "B'": B - be * b / a * (C - B),
        "B''": B - be * b / c * (A - B),
        "C'": C - ga * c / b * (A - C),
        "C''": C - ga * c / a * (B - C),
    }


def incenter(a, b, c):
    A, B, C = vertices(a, b, c)
    a, b, c = map(sp.Rational, (a, b, c))
    return (a * A + b * B + c * C) / (a + b + c)


def dist_sq(P, Q):
    d = P - Q
    return sp.nsimplify(sp.expand(d.dot(d)))


def circumcircle(P, Q, R):
    x, y = sp.symbols("x y")
    O = sp.Matrix([x, y])
    sol = sp.solve([dist_sq(O, P) - dist_sq(O, Q), dist_sq(O, P) - dist_sq(O, R)], [x, y], dict=True)[0]
    O = sp.Matrix([sp.simplify(sol[x]), sp.simplify(sol[y])])
    return O, sp.simplify(dist_sq(O, P))


def line_intersection(P1, P2, Q1, Q2):
    s, t = sp.symbols("s t")
    sol = sp.solve(list(P1 + s * (P2 - P1) - Q1 - t * (Q2 - Q1)), [s, t], dict=True)[0]
    return (P1 + sol[s] * (P2 - P1)).applyfunc(sp.simplify)


def foot(P, Q1, Q2):
    d = Q2 - Q1
    k = (P - Q1).dot(d) / d.dot(d)
    return (Q1 + k * d).applyfunc(sp.simplify)


def to_bary(P, a, b, c):
    """Normalised barycentrics of a Cartesian point, by solving P = xA + yB + zC."""
    A, B, C = vertices(a, b, c)
    x, y = sp.symbols("x y")
    sol = sp.solve(list(x * A + y * B + (1 - x - y) * C - P), [x, y], dict=True)[0]
    return tuple(sp.simplify(v) for v in (sol[x], sol[y], 1 - sol[x] - sol[y]))
