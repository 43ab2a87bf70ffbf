"""Command-line interface.

Exit status: 0 success, 1 verification failure, 2 usage error, 3 domain error.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import predicates as pr
from . import theorems as th
from .configuration import ANTI_CONWAY, CONWAY, Triplet, hexagon_metrics, six_points
from .errors import GeometryError
from .numerics import QuadExt, as_rational, format_rational
from .oracle import ALL_CHECKS, SampleSpec, brute_force_circle, resolve_checks, run_suite
from .svg import Extras, circle_extra, line_segment, render_svg
from .triangle import Triangle, contact_points, embed, incenter, nagel

EXIT_OK, EXIT_FAILED, EXIT_USAGE, EXIT_DOMAIN = 0, 1, 2, 3


def rational_arg(text: str):
    try:
        return as_rational(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _bary(P):
    return [format_rational(v) for v in P.normalized()]


def _triangle(args) -> Triangle:
    if getattr(args, "input", None):
        data = json.loads(Path(args.input).read_text(encoding="utf-8"))
        verts = [tuple(QuadExt.from_json(c) for c in data["vertices"][k]) for k in "ABC"]
        return Triangle.from_vertices(*verts)
    if args.sides is None:
        raise _Usage("--sides is required (or --input)")
    return Triangle(*args.sides)


def _triplet(args, default=None) -> Triplet:
    if getattr(args, "triplet", None):
        return Triplet(*args.triplet)
    if getattr(args, "input", None):
        data = json.loads(Path(args.input).read_text(encoding="utf-8"))
        if "triplet" in data:
            return Triplet(*(as_rational(v) for v in data["triplet"]))
    if default is None:
        raise _Usage("--triplet is required")
    return default


class _Usage(Exception):
    pass


def construct_payload(T: Triangle, t: Triplet) -> dict:
    cfg = six_points(T, t)
    out = cfg.to_json()
    eq = pr.equidistant_from(T, incenter(T), cfg.points_bary)
    out["membership"] = th.classify_triplet(T, t).to_json()
    out["circle"] = ({"center": _bary(incenter(T)), "radius_sq": format_rational(eq.common_sq)}
                     if eq.ok else None)
    hm = hexagon_metrics(cfg)
    out["hexagon"] = {
        "diag_main_sq": [format_rational(v) for v in hm.diag_main_sq],
        "diag_pairs_sq": [[format_rational(x), format_rational(y)] for x, y in hm.diag_pairs_sq],
        "opposite_sides_parallel": list(hm.opposite_sides_parallel),
    }
    return out


def cmd_info(args):
    T = _triangle(args)
    emb = embed(T)
    out = T.to_json()
    out.update({
        "area_sq16": format_rational(T.area_sq16),
        "incenter": _bary(incenter(T)),
        "contact_points": {k: _bary(P) for k, P in zip("UVW", contact_points(T))},
        "conway_radius_sq": format_rational(th.conway_circle(T).radius_sq),
        "inscribed_alpha": format_rational(th.inscribed_alpha(T)),
        "embedding": {k: [V[0].to_json(), V[1].to_json()] for k, V in zip("ABC", emb.vertices)},
    })
    return out, EXIT_OK


def cmd_construct(args):
    T = _triangle(args)
    return construct_payload(T, _triplet(args, CONWAY)), EXIT_OK


def cmd_family(args):
    T = _triangle(args)
    t = th.family_triplet(T, args.alpha)
    res = th.verify_family(T, t)
    witness = {
        "triplet": t.to_json(),
        "radius_sq": format_rational(res.radius_sq) if res.radius_sq is not None else None,
        "expected_radius_sq": format_rational(th.family_radius_sq(T, args.alpha)),
        "addendum_concyclic": list(res.addendum) if res.addendum else None,
    }
    out = th.theorem_report("family", T, res.ok, witness)
    return out, EXIT_OK if res.ok else EXIT_FAILED


def cmd_congruence(args):
    T = _triangle(args)
    res = th.congruence(T)
    witness = res.to_json()
    if res.tag == "Found":
        conc = pr.concurrent(*th.dussau_lines(T, res.triplet))
        witness["concurrent"] = _bary(conc.point) if conc.point else None
        witness["nagel"] = _bary(nagel(T))
    out = th.theorem_report("congruence", T, res.tag, witness)
    out.update(res.to_json())
    return out, EXIT_OK


def cmd_dussau(args):
    T = _triangle(args)
    point = th.dussau_point(T)
    lines = th.dussau_lines(T, ANTI_CONWAY)
    report = th.anti_conway(T)
    witness = {
        "point": _bary(point),
        "lines": [[format_rational(v) for v in line] for line in lines],
        "anti_conway": report.to_json(),
    }
    out = th.theorem_report("dussau", T, point == nagel(T), witness)
    return out, EXIT_OK


def cmd_verify(args):
    spec = SampleSpec(seed=args.seed, count=args.count,
                      side_range=(args.side_min, args.side_max),
                      denominator_bound=args.denominator_bound,
                      shape_filter=args.shape)
    try:
        checks = resolve_checks(args.checks)
    except ValueError as exc:
        raise _Usage(str(exc)) from None
    report = run_suite(spec, checks, workers=args.workers)
    text = report.to_json(seed=spec.seed, checks=list(checks))
    return text, EXIT_OK if report.ok else EXIT_FAILED


def cmd_render(args):
    T = _triangle(args)
    t = _triplet(args, CONWAY)
    cfg = six_points(T, t)
    extras = Extras(labels=not args.no_labels)
    if args.circle:
        eq = pr.equidistant_from(T, incenter(T), cfg.points_bary)
        if eq.ok:
            extras.circles.append(circle_extra(embed(T).point(incenter(T)), eq.common_sq))
    if args.anti_circles:
        for names in th.ANTI_CONWAY_QUADRUPLES:
            fit = brute_force_circle([cfg.cart(n) for n in names])
            if fit is not None:
                extras.circles.append(circle_extra(fit.center, fit.radius_sq))
    if args.lines:
        for P, Q in (("A'", "C''"), ("B'", "A''"), ("C'", "B''")):
            if cfg[P] != cfg[Q]:
                extras.lines.append(line_segment(cfg.cart(P), cfg.cart(Q)))
    svg = render_svg(cfg, extras)
    Path(args.out).write_text(svg, encoding="utf-8")
    return {"written": str(args.out), "circles": len(extras.circles),
            "lines": len(extras.lines)}, EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="conwaygeom",
                                     description="Exact Conway-configuration geometry.")
    sub = parser.add_subparsers(dest="verb", required=True)

    def common(p, triplet=False):
        p.add_argument("--sides", nargs=3, type=rational_arg, metavar=("A", "B", "C"))
        p.add_argument("--input", help="JSON written by `construct`; reuses its vertices")
        fmt = p.add_mutually_exclusive_group()
        fmt.add_argument("--json", dest="fmt", action="store_const", const="json")
        fmt.add_argument("--text", dest="fmt", action="store_const", const="text")
        p.set_defaults(fmt="json")
        if triplet:
            p.add_argument("--triplet", nargs=3, type=rational_arg,
                           metavar=("ALPHA", "BETA", "GAMMA"))
        return p

    common(sub.add_parser("info", help="triangle metrics and centers")).set_defaults(func=cmd_info)
    common(sub.add_parser("construct", help="the six points for a triplet"),
           triplet=True).set_defaults(func=cmd_construct)
    p = common(sub.add_parser("family", help="family member for a given alpha"))
    p.add_argument("--alpha", type=rational_arg, required=True)
    p.set_defaults(func=cmd_family)
    common(sub.add_parser("congruence", help="the congruent triplet")).set_defaults(
        func=cmd_congruence)
    common(sub.add_parser("dussau", help="concurrency at the Nagel point")).set_defaults(
        func=cmd_dussau)

    p = sub.add_parser("verify", help="seeded randomized verification suite")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--count", type=int, default=200)
    p.add_argument("--checks", default="all",
                   help=f"comma-separated subset of {', '.join(ALL_CHECKS)}, or all")
    p.add_argument("--side-min", type=int, default=1)
    p.add_argument("--side-max", type=int, default=20)
    p.add_argument("--denominator-bound", type=int, default=6)
    p.add_argument("--shape", default="any",
                   choices=("any", "scalene", "isosceles", "equilateral"))
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=cmd_verify, fmt="json")

    p = common(sub.add_parser("render", help="write an SVG figure"), triplet=True)
    p.add_argument("--out", required=True)
    p.add_argument("--circle", action="store_true", help="draw the circle about the incenter")
    p.add_argument("--anti-circles", action="store_true",
                   help="draw the three circles of the (-1,-1,-1) quadruples")
    p.add_argument("--lines", action="store_true", help="draw (A'C''), (B'A''), (C'B'')")
    p.add_argument("--no-labels", action="store_true")
    p.set_defaults(func=cmd_render)
    return parser


def _text(obj, indent=0) -> str:
    pad = "  " * indent
    if isinstance(obj, dict):
        lines = []
        for k, v in obj.items():
            if isinstance(v, (dict, list)) and v and any(isinstance(x, (dict, list))
                                                        for x in (v.values() if isinstance(v, dict) else v)):
                lines.append(f"{pad}{k}:")
                lines.append(_text(v, indent + 1))
            else:
                lines.append(f"{pad}{k}: {_flat(v)}")
        return "\n".join(lines)
    if isinstance(obj, list):
        return "\n".join(_text(v, indent) if isinstance(v, (dict, list)) else f"{pad}- {v}"
                         for v in obj)
    return f"{pad}{obj}"


def _flat(v):
    if isinstance(v, dict):
        return ", ".join(f"{k}={_flat(x)}" for k, x in v.items())
    if isinstance(v, list):
        return "(" + ", ".join(map(_flat, v)) + ")"
    return str(v)


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code
    if hasattr(sys.stdout, "reconfigure"):
        sys.stdout.reconfigure(encoding="utf-8")
    try:
        payload, status = args.func(args)
    except _Usage as exc:
        parser.print_usage(sys.stderr)
        print(f"{parser.prog}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except GeometryError as exc:
        print(f"error: {exc.name}: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    if isinstance(payload, str):
        sys.stdout.write(payload + "\n")
    elif args.fmt == "text":
        sys.stdout.write(_text(payload) + "\n")
    else:
        sys.stdout.write(json.dumps(payload, ensure_ascii=False, indent=2) + "\n")
    return status


if __name__ == "__main__":
    sys.exit(main())
