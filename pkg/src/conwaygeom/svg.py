"""Standalone SVG figures of a configuration."""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from xml.sax.saxutils import escape

from .configuration import POINT_NAMES, Configuration
from .errors import PointAtInfinity
from .triangle import embed

LABEL_OFFSET = (0.15, 0.15)


@dataclass
class Extras:
    circles: list = field(default_factory=list)   # (center (x, y), radius) in floats
    lines: list = field(default_factory=list)     # ((x1, y1), (x2, y2)) segment endpoints
    labels: bool = True


def _num(v: float) -> str:
    return format(v, ".12g")


def _fpt(P):
    return float(P[0]), float(P[1])


def line_segment(P, Q, overshoot=0.15):
    """Segment PQ extended on both sides so that the drawn line reads as a line."""
    (x1, y1), (x2, y2) = _fpt(P), _fpt(Q)
    dx, dy = x2 - x1, y2 - y1
    return ((x1 - overshoot * dx, y1 - overshoot * dy),
            (x2 + overshoot * dx, y2 + overshoot * dy))


def render_svg(cfg: Configuration, extras: Extras | None = None) -> str:
    extras = extras or Extras()
    for name, P in zip(POINT_NAMES, cfg.points_bary):
        if not P.is_finite():
            raise PointAtInfinity(f"{name} cannot be drawn")
    verts = [_fpt(V) for V in embed(cfg.triangle).vertices]
    pts = [_fpt(P) for P in cfg.points_cart]

    xs, ys = [], []
    for x, y in verts + pts:
        xs.append(x)
        ys.append(y)
    for (cx, cy), r in extras.circles:
        xs += [cx - r, cx + r]
        ys += [cy - r, cy + r]
    for (x1, y1), (x2, y2) in extras.lines:
        xs += [x1, x2]
        ys += [y1, y2]
    xmin, xmax, ymin, ymax = min(xs), max(xs), min(ys), max(ys)
    margin = 0.05 * max(xmax - xmin, ymax - ymin, 1e-9)
    # SVG y axis points down
    vb = (xmin - margin, -ymax - margin, xmax - xmin + 2 * margin, ymax - ymin + 2 * margin)
    stroke = _num(max(vb[2], vb[3]) / 400)
    font = _num(max(vb[2], vb[3]) / 40)

    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        '<svg xmlns="http://www.w3.org/2000/svg" viewBox="{}">'.format(" ".join(map(_num, vb))),
        f'<g fill="none" stroke-width="{stroke}">',
        '<polygon class="triangle" stroke="black" points="{}"/>'.format(
            " ".join(f"{_num(x)},{_num(-y)}" for x, y in verts)),
    ]
    for (cx, cy), r in extras.circles:
        out.append(f'<circle class="circle" stroke="blue" cx="{_num(cx)}" cy="{_num(-cy)}" '
                   f'r="{_num(r)}"/>')
    for (x1, y1), (x2, y2) in extras.lines:
        out.append(f'<line class="line" stroke="red" x1="{_num(x1)}" y1="{_num(-y1)}" '
                   f'x2="{_num(x2)}" y2="{_num(-y2)}"/>')
    out.append("</g>")
    dot = _num(max(vb[2], vb[3]) / 150)
    for x, y in verts + pts:
        out.append(f'<circle class="point" fill="black" cx="{_num(x)}" cy="{_num(-y)}" r="{dot}"/>')
    if extras.labels:
        dx, dy = (o * max(vb[2], vb[3]) / 10 for o in LABEL_OFFSET)
        names = ["A", "B", "C"] + ["A′", "A″", "B′", "B″", "C′", "C″"]
        for name, (x, y) in zip(names, verts + pts):
            out.append(f'<text x="{_num(x + dx)}" y="{_num(-y - dy)}" font-size="{font}">'
                       f"{escape(name)}</text>")
    out.append("</svg>")
    return "\n".join(out) + "\n"


def circle_extra(center, radius_sq) -> tuple:
    return _fpt(center), math.sqrt(float(radius_sq))
