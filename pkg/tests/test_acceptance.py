"""Acceptance criteria, one check per criterion.

Run under pytest, or directly (``python3 tests/test_acceptance.py``) for a
one-line PASS/FAIL summary per criterion.
"""
import subprocess
import sys
import time
from fractions import Fraction

import pytest

from conwaygeom import predicates as pr
from conwaygeom import theorems as th
from conwaygeom.configuration import ANTI_CONWAY, CONWAY, Triplet, hexagon_metrics, six_points
from conwaygeom.oracle import (SampleSpec, brute_force_circle, feuerbach_pivot, random_four_points,
                               random_rational, sample_triangle, trial_rng)
from conwaygeom.triangle import BaryPoint, Triangle, embed, incenter, nagel

F = Fraction
SEED = 2024
FIXED = [Triangle(3, 4, 5), Triangle(4, 5, 6), Triangle(2, 2, 2)]


def sampled(count, seed=SEED, **kw):
    spec = SampleSpec(seed=seed, count=count, **kw)
    for i in range(count):
        rng = trial_rng(seed, i)
        yield sample_triangle(spec, rng), rng


def criterion_1():
    start = time.perf_counter()
    bad = []
    for T in FIXED + [T for T, _ in sampled(200)]:
        eq = pr.equidistant_from(T, incenter(T), six_points(T, CONWAY).points_bary)
        if eq.common_sq != T.p ** 2 + T.r_sq:
            bad.append(T.sides)
    elapsed = time.perf_counter() - start
    return not bad and elapsed < 5, f"{len(bad)} failures, {elapsed:.2f}s"


def criterion_2():
    bad = []
    for T in FIXED + [T for T, _ in sampled(200)]:
        hm = hexagon_metrics(six_points(T, CONWAY))
        if hm.diag_main_sq != (4 * T.p ** 2,) * 3 or hm.opposite_sides_parallel != (True,) * 3:
            bad.append(T.sides)
    w = hexagon_metrics(six_points(FIXED[0], CONWAY)).diag_main_sq
    return not bad and w == (144,) * 3, f"{len(bad)} failures, (3,4,5) diagonals {[str(v) for v in w]}"


_passing = []   # verify_family results that passed, for the addendum criterion


def criterion_3():
    bad = []
    for T, rng in sampled(200):
        alpha = random_rational(rng, -3, 3)
        res = th.verify_family(T, th.family_triplet(T, alpha))
        if res.ok:
            _passing.append(res)
        if not res.ok or res.radius_sq != (T.p + (alpha - 1) * T.a) ** 2 + T.r_sq:
            bad.append((T.sides, alpha))
        a_in = th.inscribed_alpha(T)
        res = th.verify_family(T, th.family_triplet(T, a_in))
        if res.ok:
            _passing.append(res)
        if not res.ok or res.radius_sq != T.r_sq:
            bad.append((T.sides, a_in))
    return not bad, f"{len(bad)} failures"


def criterion_4():
    bad, n = [], 0
    for T, rng in sampled(200, shape_filter="scalene"):
        while True:
            t = Triplet(*(random_rational(rng, -3, 3) for _ in range(3)))
            if th.classify_triplet(T, t).tag == "NotSolution":
                break
        n += 1
        if pr.equidistant_from(T, incenter(T), six_points(T, t).points_bary).ok:
            bad.append((T.sides, tuple(t)))
    return not bad and n == 200, f"{len(bad)} equidistant non-solutions out of {n}"


def criterion_5():
    bad = []
    for apex in "ABC":
        for T, _ in sampled(50, shape_filter="isosceles", apex=apex):
            t = th.isosceles_extra(T, apex)
            res = th.verify_family(T, t)
            if res.ok:
                _passing.append(res)
            if not res.ok or res.radius_sq != th.family_radius_sq(T, t.alpha):
                bad.append((apex, T.sides))
    w = th.verify_family(Triangle(3, 3, 4), Triplet(0, 0, F(-3, 4)))
    return not bad and w.ok and w.radius_sq == F(24, 5), \
        f"{len(bad)} failures, (3,3,4) radius_sq {w.radius_sq}"


def criterion_6():
    if not _passing:
        criterion_3()
        criterion_5()
    bad = [r for r in _passing if r.addendum != (True, True, True)]
    return not bad and len(_passing) > 0, f"{len(bad)} of {len(_passing)} passing trials break it"


def criterion_7():
    bad = [T.sides for T, _ in sampled(200, shape_filter="scalene") if th.dussau_point(T) != nagel(T)]
    w = th.dussau_point(Triangle(4, 5, 6))
    return not bad and w == BaryPoint(7, 5, 3), f"{len(bad)} failures, (4,5,6) -> {[str(v) for v in w.normalized()]}"


def criterion_8():
    bad = []
    for T, _ in sampled(200, shape_filter="scalene"):
        rep = th.anti_conway(T)
        cfg = six_points(T, ANTI_CONWAY)
        cyc = all(pr.concyclic(T, *(cfg[n] for n in q)) for q in th.ANTI_CONWAY_QUADRUPLES)
        if not cyc or rep.nagel_powers != (8 * T.r_sq,) * 3:
            bad.append(T.sides)
    witnesses = {(3, 4, 5): 8, (4, 5, 6): 14, (5, 6, 7): F(64, 3)}
    got = {s: th.anti_conway(Triangle(*s)).nagel_powers[0] for s in witnesses}
    ok = not bad and all(got[s] == v for s, v in witnesses.items())
    shown = ", ".join(f"{s} -> {got[s]} (want {v})" for s, v in witnesses.items())
    return ok, f"{len(bad)} of 200 off 8r^2; {shown}"


def criterion_9():
    r = th.congruence(Triangle(4, 5, 6))
    ok = r.tag == "Found" and r.triplet == Triplet(1, F(-11, 25), F(-13, 27))
    ok = ok and pr.concurrent(*th.dussau_lines(Triangle(4, 5, 6), r.triplet)).point == BaryPoint(7, 5, 3)
    ok = ok and th.congruence(Triangle(3, 4, 5)).reason == "p=2a"
    ok = ok and th.congruence(Triangle(9, 8, 7)).reason == "p²=2ab"
    bad = []
    for T, _ in sampled(200, shape_filter="scalene", avoid_exclusions=True):
        r = th.congruence(T)
        t = r.triplet
        if (r.tag != "Found" or th.sigma_residuals(T, t) != (0, 0, 0)
                or any(v in (0, -1) for v in t)
                or pr.concurrent(*th.dussau_lines(T, t)).point != nagel(T)):
            bad.append(T.sides)
    return ok and not bad, f"witnesses {'ok' if ok else 'wrong'}, {len(bad)} sampled failures"


def criterion_10():
    n = feuer = 0
    disagree = []
    i = 0
    while n < 500:
        rng = trial_rng(SEED, 10_000 + i)
        T = sample_triangle(SampleSpec(), rng)
        pts = random_four_points(T, rng, on_circle=i % 2 == 0)
        i += 1
        if pts is None:
            continue
        n += 1
        emb = embed(T)
        cart = [emb.point(P) for P in pts]
        verdicts = {pr.concyclic(T, *pts), pr.cart_concyclic(cart),
                    brute_force_circle(cart) is not None}
        if len(verdicts) != 1:
            disagree.append(T.sides)
        P = feuerbach_pivot(pts)
        if P is not None:
            feuer += 1
            if pr.feuerbach_check(T, P, *pts) != pr.concyclic(T, *pts):
                disagree.append(("feuerbach", T.sides))
    return not disagree, f"{n} configurations, {feuer} Feuerbach checks, {len(disagree)} disagreements"


def criterion_11():
    cmd = [sys.executable, "-m", "conwaygeom.cli", "verify", "--seed", "42", "--count", "200",
           "--checks", "all"]
    start = time.perf_counter()
    outs = [subprocess.run(cmd, capture_output=True).stdout for _ in range(2)]
    elapsed = time.perf_counter() - start
    return outs[0] == outs[1] and len(outs[0]) > 0 and elapsed < 60, \
        f"identical={outs[0] == outs[1]}, {elapsed:.1f}s for two runs"


CRITERIA = [criterion_1, criterion_2, criterion_3, criterion_4, criterion_5, criterion_6,
            criterion_7, criterion_8, criterion_9, criterion_10, criterion_11]


@pytest.mark.parametrize("check", CRITERIA, ids=lambda f: f.__name__)
def test_criterion(check):
    ok, detail = check()
    line = f"{check.__name__}: {'PASS' if ok else 'FAIL'} ({detail})"
    print(line)
    assert ok, line


if __name__ == "__main__":
    failed = 0
    for check in CRITERIA:
        ok, detail = check()
        failed += not ok
        print(f"{check.__name__}: {'PASS' if ok else 'FAIL'} ({detail})", flush=True)
    sys.exit(1 if failed else 0)
