import pytest

from conwaygeom.configuration import CONWAY, Configuration, six_points
from conwaygeom.errors import PointAtInfinity
from conwaygeom.svg import Extras, line_segment, render_svg
from conwaygeom.triangle import BaryPoint


def test_point_at_infinity_is_refused(t345):
    cfg = six_points(t345, CONWAY)
    pts = list(cfg.points_bary)
    pts[0] = BaryPoint(1, -1, 0)
    broken = Configuration(cfg.triangle, cfg.triplet, tuple(pts), cfg.points_cart)
    with pytest.raises(PointAtInfinity):
        render_svg(broken)


def test_element_order_and_labels(t345):
    svg = render_svg(six_points(t345, CONWAY), Extras(labels=False))
    assert svg.index("<polygon") < svg.index('class="point"')
    assert "<text" not in svg


def test_line_segment_overshoots():
    (x1, y1), (x2, y2) = line_segment((0, 0), (10, 0), overshoot=0.1)
    assert (x1, x2, y1, y2) == (-1.0, 11.0, 0.0, 0.0)
