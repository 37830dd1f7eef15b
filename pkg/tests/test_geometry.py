import math
import random

import pytest
from hypothesis import given, settings, strategies as st
from shapely.geometry import Polygon, box

from mep.geometry import (MAX_SIDES, AxisRect, ConvexPolygon, Disk, Point2D, contains,
                          on_boundary, overlaps, validate)

SQUARE = ConvexPolygon(((0, 0), (1, 0), (1, 1), (0, 1)))


def test_rect_contains_interior_and_boundary():
    r = AxisRect(0, 0, 2, 2)
    assert contains(r, Point2D(1, 1))
    assert contains(r, Point2D(0, 0))
    assert not contains(r, Point2D(2.0001, 1))


def test_disk_boundary_is_closed():
    d = Disk(0, 0, 1)
    assert contains(d, Point2D(1, 0))
    assert not contains(d, Point2D(1.0001, 0))


def test_polygon_contains():
    assert contains(SQUARE, Point2D(0.5, 0.5))
    assert contains(SQUARE, Point2D(1, 0.5))
    assert not contains(SQUARE, Point2D(1.5, 0.5))


def test_overlap_examples():
    assert not overlaps(AxisRect(0, 0, 1, 1), AxisRect(2, 2, 3, 3))
    assert overlaps(Disk(0, 0, 1), Disk(2, 0, 1))
    r3, r4 = AxisRect(3.5, 3, 5, 6), AxisRect(4.5, 5, 8, 9)
    assert overlaps(r3, r4)
    rng = random.Random(0)
    witness = Point2D(rng.uniform(4.5, 5), rng.uniform(5, 6))
    assert contains(r3, witness) and contains(r4, witness)


def test_touching_shapes_overlap():
    assert overlaps(AxisRect(0, 0, 1, 1), AxisRect(1, 0, 2, 1))
    assert overlaps(AxisRect(0, 0, 1, 1), Disk(2, 0.5, 1))
    assert not overlaps(AxisRect(0, 0, 1, 1), Disk(2.5, 0.5, 1))
    # corner case: nearest rectangle point is a corner
    assert not overlaps(AxisRect(0, 0, 1, 1), Disk(2, 2, 1.4))
    assert overlaps(AxisRect(0, 0, 1, 1), Disk(2, 2, 1.5))
    tri = ConvexPolygon(((1, 0), (2, 0), (1, 1)))
    assert overlaps(SQUARE, tri)
    assert overlaps(tri, Disk(3, 0, 1))
    assert not overlaps(tri, Disk(3.5, 0, 1))


def test_disk_inside_polygon_overlaps():
    big = ConvexPolygon(((-10, -10), (10, -10), (10, 10), (-10, 10)))
    assert overlaps(big, Disk(0, 0, 1))
    assert overlaps(Disk(0, 0, 1), big)


@pytest.mark.parametrize("rng, message", [
    (AxisRect(0, 0, 0, 1), "degenerate rectangle"),
    (AxisRect(0, 1, 1, 1), "degenerate rectangle"),
    (Disk(0, 0, 0), "radius"),
    (Disk(0, 0, -1), "radius"),
    (Disk(0, math.inf, 1), "non-finite"),
    (ConvexPolygon(((0, 0), (1, 0))), "at least 3"),
    (ConvexPolygon(((0, 0), (0, 1), (1, 1), (1, 0))), "counterclockwise"),
    (ConvexPolygon(((0, 0), (1, 0), (2, 0), (1, 1))), "collinear"),
    (ConvexPolygon(((0, 0), (2, 0), (2, 2), (0, 2), (1, 1))), "convex"),
])
def test_validate_reports_violation(rng, message):
    problem = validate(rng)
    assert problem is not None and message in problem


def test_validate_accepts_valid_shapes():
    assert validate(SQUARE) is None
    assert validate(AxisRect(0, 0, 1, 1)) is None
    assert validate(Disk(0, 0, 0.5)) is None


def test_validate_rejects_too_many_sides_and_winding_twice():
    many = ConvexPolygon(tuple((math.cos(2 * math.pi * i / 17), math.sin(2 * math.pi * i / 17))
                               for i in range(17)))
    assert "MAX_SIDES" in validate(many)
    assert validate(many, max_sides=17) is None
    # pentagram: every turn is a left turn but the boundary winds twice
    star = ConvexPolygon(tuple((math.cos(4 * math.pi * i / 5), math.sin(4 * math.pi * i / 5))
                               for i in range(5)))
    assert "self-intersecting" in validate(star)
    assert MAX_SIDES == 16


def test_on_boundary():
    assert on_boundary(AxisRect(0, 0, 2, 2), Point2D(0, 1))
    assert not on_boundary(AxisRect(0, 0, 2, 2), Point2D(1, 1))
    assert on_boundary(Disk(0, 0, 1), Point2D(0, -1))
    assert on_boundary(SQUARE, Point2D(0.5, 1))
    assert not on_boundary(SQUARE, Point2D(0.5, 1.5))


# --- property tests -------------------------------------------------------

coord = st.floats(-10, 10, allow_nan=False, allow_infinity=False)
size = st.floats(0.1, 8, allow_nan=False, allow_infinity=False)


@st.composite
def rects(draw):
    x, y, w, h = draw(coord), draw(coord), draw(size), draw(size)
    return AxisRect(x, y, x + w, y + h)


@st.composite
def disks(draw):
    return Disk(draw(coord), draw(coord), draw(size))


@st.composite
def polygons(draw):
    """Random convex polygon: angle-sorted points on a jittered ellipse."""
    n = draw(st.integers(3, MAX_SIDES))
    cx, cy, a, b = draw(coord), draw(coord), draw(size), draw(size)
    offsets = draw(st.lists(st.floats(0, 0.9), min_size=n, max_size=n))
    angles = [2 * math.pi * (i + off) / n for i, off in enumerate(offsets)]
    poly = ConvexPolygon(tuple((cx + a * math.cos(t), cy + b * math.sin(t)) for t in angles))
    if validate(poly) is not None:
        # rounding produced a near-collinear triple; fall back to a triangle
        poly = ConvexPolygon(((cx, cy), (cx + a, cy), (cx, cy + b)))
    return poly


shapes = st.one_of(rects(), disks(), polygons())


def _bbox(rng):
    if isinstance(rng, AxisRect):
        return rng.xmin, rng.ymin, rng.xmax, rng.ymax
    if isinstance(rng, Disk):
        return rng.cx - rng.r, rng.cy - rng.r, rng.cx + rng.r, rng.cy + rng.r
    xs = [v.x for v in rng.vertices]
    ys = [v.y for v in rng.vertices]
    return min(xs), min(ys), max(xs), max(ys)


@settings(max_examples=300, deadline=None)
@given(shapes, shapes)
def test_overlap_symmetric(a, b):
    assert overlaps(a, b) == overlaps(b, a)


@settings(max_examples=100, deadline=None)
@given(shapes)
def test_self_overlap(a):
    assert overlaps(a, a)


@settings(max_examples=200, deadline=None)
@given(shapes, shapes, st.integers(0, 2**32 - 1))
def test_witness_implies_overlap(a, b, seed):
    rng = random.Random(seed)
    x0, y0, x1, y1 = _bbox(a)
    for _ in range(200):
        p = Point2D(rng.uniform(x0, x1), rng.uniform(y0, y1))
        if contains(a, p) and contains(b, p):
            assert overlaps(a, b)
            return


def _shapely(rng):
    if isinstance(rng, AxisRect):
        return box(rng.xmin, rng.ymin, rng.xmax, rng.ymax)
    return Polygon([(v.x, v.y) for v in rng.vertices])


@settings(max_examples=300, deadline=None)
@given(st.one_of(rects(), polygons()), st.one_of(rects(), polygons()))
def test_polygon_overlap_agrees_with_shapely(a, b):
    assert overlaps(a, b) == _shapely(a).intersects(_shapely(b))


@settings(max_examples=200, deadline=None)
@given(polygons(), st.integers(0, MAX_SIDES - 1), coord, coord)
def test_contains_invariant_under_vertex_rotation(poly, shift, x, y):
    vs = poly.vertices
    s = shift % len(vs)
    rotated = ConvexPolygon(vs[s:] + vs[:s])
    p = Point2D(x, y)
    assert contains(poly, p) == contains(rotated, p)


@settings(max_examples=200, deadline=None)
@given(polygons(), disks())
def test_polygon_disk_overlap_matches_dense_boundary_check(poly, disk):
    # independent check: sample the disk boundary densely and its centre
    c = Point2D(disk.cx, disk.cy)
    hit = contains(poly, c) or any(
        contains(poly, Point2D(disk.cx + disk.r * math.cos(t), disk.cy + disk.r * math.sin(t)))
        for t in (2 * math.pi * i / 720 for i in range(720))
    ) or any(contains(disk, v) for v in poly.vertices)
    if hit:
        assert overlaps(poly, disk)
