"""Closed-region predicates for axis-aligned rectangles, disks and convex polygons.

All regions are closed: boundary points are contained and touching regions
overlap.  Comparisons are plain floating point with no epsilon.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple, Optional, Sequence, Tuple, Union

MAX_SIDES = 16


class Point2D(NamedTuple):
    x: float
    y: float


@dataclass(frozen=True)
class AxisRect:
    xmin: float
    ymin: float
    xmax: float
    ymax: float

    def corners(self) -> Tuple[Point2D, ...]:
        return (
            Point2D(self.xmin, self.ymin),
            Point2D(self.xmax, self.ymin),
            Point2D(self.xmax, self.ymax),
            Point2D(self.xmin, self.ymax),
        )


@dataclass(frozen=True)
class Disk:
    cx: float
    cy: float
    r: float


@dataclass(frozen=True)
class ConvexPolygon:
    vertices: Tuple[Point2D, ...]

    def __post_init__(self):
        object.__setattr__(
            self, "vertices", tuple(Point2D(float(x), float(y)) for x, y in self.vertices)
        )

    def edges(self):
        vs = self.vertices
        for i in range(len(vs)):
            yield vs[i], vs[(i + 1) % len(vs)]


Range = Union[AxisRect, Disk, ConvexPolygon]


def _finite(*values: float) -> bool:
    return all(isinstance(v, (int, float)) and math.isfinite(v) for v in values)


def _cross(o: Point2D, a: Point2D, b: Point2D) -> float:
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x)


def validate(rng: Range, max_sides: int = MAX_SIDES) -> Optional[str]:
    """Return a description of the first violated invariant, or None if valid."""
    if isinstance(rng, AxisRect):
        if not _finite(rng.xmin, rng.ymin, rng.xmax, rng.ymax):
            return "non-finite rectangle coordinate"
        if not (rng.xmin < rng.xmax and rng.ymin < rng.ymax):
            return "degenerate rectangle"
        return None
    if isinstance(rng, Disk):
        if not _finite(rng.cx, rng.cy, rng.r):
            return "non-finite disk parameter"
        if not rng.r > 0:
            return "disk radius must be positive"
        return None
    if isinstance(rng, ConvexPolygon):
        vs = rng.vertices
        if len(vs) < 3:
            return "polygon needs at least 3 vertices"
        if len(vs) > max_sides:
            return f"polygon has {len(vs)} vertices, more than MAX_SIDES={max_sides}"
        if not all(_finite(v.x, v.y) for v in vs):
            return "non-finite polygon vertex"
        n = len(vs)
        for i in range(n):
            turn = _cross(vs[i - 1], vs[i], vs[(i + 1) % n])
            if turn == 0:
                return f"collinear vertices around index {i}"
            if turn < 0:
                return f"polygon is not strictly convex counterclockwise at vertex {i}"
        # all left turns still admits star-shaped windings; require exactly one turn
        total = 0.0
        for i in range(n):
            a, b, c = vs[i - 1], vs[i], vs[(i + 1) % n]
            total += math.atan2(_cross(a, b, c),
                                (b.x - a.x) * (c.x - b.x) + (b.y - a.y) * (c.y - b.y))
        if abs(total - 2 * math.pi) > 1e-6:
            return "polygon is self-intersecting"
        return None
    return f"unsupported range type {type(rng).__name__}"


def contains(rng: Range, p: Point2D) -> bool:
    x, y = p
    if isinstance(rng, AxisRect):
        return rng.xmin <= x <= rng.xmax and rng.ymin <= y <= rng.ymax
    if isinstance(rng, Disk):
        dx, dy = x - rng.cx, y - rng.cy
        return dx * dx + dy * dy <= rng.r * rng.r
    p = Point2D(x, y)
    return all(_cross(a, b, p) >= 0 for a, b in rng.edges())


def on_boundary(rng: Range, p: Point2D) -> bool:
    """True iff p lies exactly on the boundary of rng."""
    x, y = p
    if isinstance(rng, AxisRect):
        if not contains(rng, p):
            return False
        return x in (rng.xmin, rng.xmax) or y in (rng.ymin, rng.ymax)
    if isinstance(rng, Disk):
        dx, dy = x - rng.cx, y - rng.cy
        return dx * dx + dy * dy == rng.r * rng.r
    p = Point2D(x, y)
    return contains(rng, p) and any(_cross(a, b, p) == 0 for a, b in rng.edges())


def _as_polygon(rng: Range) -> Sequence[Point2D]:
    if isinstance(rng, AxisRect):
        return rng.corners()
    return rng.vertices


def _project(vertices: Sequence[Point2D], ax: float, ay: float) -> Tuple[float, float]:
    dots = [v.x * ax + v.y * ay for v in vertices]
    return min(dots), max(dots)


def _polygons_overlap(pa: Sequence[Point2D], pb: Sequence[Point2D]) -> bool:
    # separating axis theorem; closed sets are separated only by a strict gap
    for poly in (pa, pb):
        n = len(poly)
        for i in range(n):
            a, b = poly[i], poly[(i + 1) % n]
            ax, ay = -(b.y - a.y), b.x - a.x
            lo1, hi1 = _project(pa, ax, ay)
            lo2, hi2 = _project(pb, ax, ay)
            if hi1 < lo2 or hi2 < lo1:
                return False
    return True


def _segment_dist2(p: Point2D, a: Point2D, b: Point2D) -> float:
    dx, dy = b.x - a.x, b.y - a.y
    t = ((p.x - a.x) * dx + (p.y - a.y) * dy) / (dx * dx + dy * dy)
    t = min(1.0, max(0.0, t))
    qx, qy = a.x + t * dx - p.x, a.y + t * dy - p.y
    return qx * qx + qy * qy


def _disk_overlaps(disk: Disk, other: Range) -> bool:
    c = Point2D(disk.cx, disk.cy)
    r2 = disk.r * disk.r
    if isinstance(other, Disk):
        dx, dy = disk.cx - other.cx, disk.cy - other.cy
        rs = disk.r + other.r
        return dx * dx + dy * dy <= rs * rs
    if isinstance(other, AxisRect):
        qx = min(max(c.x, other.xmin), other.xmax)
        qy = min(max(c.y, other.ymin), other.ymax)
        return (qx - c.x) ** 2 + (qy - c.y) ** 2 <= r2
    if contains(other, c):
        return True
    return any(_segment_dist2(c, a, b) <= r2 for a, b in other.edges())


def overlaps(a: Range, b: Range) -> bool:
    """True iff the closed regions a and b share at least one point."""
    if isinstance(a, AxisRect) and isinstance(b, AxisRect):
        return (a.xmin <= b.xmax and b.xmin <= a.xmax
                and a.ymin <= b.ymax and b.ymin <= a.ymax)
    if isinstance(a, Disk):
        return _disk_overlaps(a, b)
    if isinstance(b, Disk):
        return _disk_overlaps(b, a)
    return _polygons_overlap(_as_polygon(a), _as_polygon(b))
