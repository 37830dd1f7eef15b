"""Seeded random instance generator.

Stream order is fixed: all ranges are drawn first, then all points, from one
``random.Random(seed)``.  Points landing exactly on a range boundary are
redrawn.
"""
from __future__ import annotations

import random
from dataclasses import dataclass

from .geometry import AxisRect, Disk, Point2D, on_boundary
from .instance import RangeSpace

SHAPES = ("rect", "disk", "translate")


@dataclass(frozen=True)
class GenConfig:
    n: int
    m: int
    shape: str = "rect"
    bbox: float = 10.0
    max_size: float = 4.0
    seed: int = 0

    def check(self) -> None:
        if self.n < 1:
            raise ValueError(f"n must be >= 1, got {self.n}")
        if self.m < 0:
            raise ValueError(f"m must be >= 0, got {self.m}")
        if self.shape not in SHAPES:
            raise ValueError(f"shape must be one of {SHAPES}, got {self.shape!r}")
        if not self.max_size > 0:
            raise ValueError("max_size must be positive")
        if not self.bbox > self.max_size:
            raise ValueError("bbox must exceed max_size")


def _range(rng: random.Random, cfg: GenConfig):
    lo = cfg.max_size / 10
    if cfg.shape == "disk":
        r = rng.uniform(lo, cfg.max_size) / 2
        return Disk(rng.uniform(r, cfg.bbox - r), rng.uniform(r, cfg.bbox - r), r)
    if cfg.shape == "translate":
        w = h = cfg.max_size
    else:
        w, h = rng.uniform(lo, cfg.max_size), rng.uniform(lo, cfg.max_size)
    x, y = rng.uniform(0, cfg.bbox - w), rng.uniform(0, cfg.bbox - h)
    return AxisRect(x, y, x + w, y + h)


def generate(cfg: GenConfig) -> RangeSpace:
    cfg.check()
    rng = random.Random(cfg.seed)
    ranges = [_range(rng, cfg) for _ in range(cfg.n)]
    points = {}
    for pid in range(cfg.m):
        while True:
            p = Point2D(rng.uniform(0, cfg.bbox), rng.uniform(0, cfg.bbox))
            if not any(on_boundary(r, p) for r in ranges):
                break
        points[pid] = p
    return RangeSpace(ranges, points)
