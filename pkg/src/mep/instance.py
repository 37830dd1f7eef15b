"""Range space model: point signatures, cells, overlap sets and the exposure objective.

Cells are recovered from point signatures (the exact set of ranges holding a
point), so only point-bearing cells ever exist.  Range ids are list positions;
point ids are dictionary keys and survive preprocessing.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Iterable, List, Tuple

from .errors import InvalidK, InvalidRange
from .geometry import Point2D, Range, contains, overlaps, validate

Signature = Tuple[int, ...]


def to_mask(ids: Iterable[int]) -> int:
    mask = 0
    for i in ids:
        mask |= 1 << i
    return mask


def from_mask(mask: int) -> Tuple[int, ...]:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


@dataclass
class RangeSpace:
    ranges: List[Range]
    points: Dict[int, Point2D]

    def __post_init__(self):
        self.ranges = list(self.ranges)
        if not isinstance(self.points, dict):
            self.points = dict(enumerate(self.points))
        self.points = {int(pid): Point2D(float(p[0]), float(p[1]))
                       for pid, p in self.points.items()}
        for i, rng in enumerate(self.ranges):
            problem = validate(rng)
            if problem:
                raise InvalidRange(f"range {i}: {problem}")
        if any(pid < 0 for pid in self.points):
            raise InvalidRange("point ids must be non-negative")

    @property
    def n(self) -> int:
        return len(self.ranges)

    @property
    def m(self) -> int:
        return len(self.points)


@dataclass(frozen=True)
class Cell:
    cluster: Signature
    point_ids: Tuple[int, ...]

    @property
    def cluster_size(self) -> int:
        return len(self.cluster)

    @property
    def mask(self) -> int:
        return to_mask(self.cluster)

    @property
    def count(self) -> int:
        return len(self.point_ids)


@dataclass(frozen=True)
class InstanceStats:
    n: int
    m: int
    l: int
    d: int
    max_cluster_size: int
    uncovered_points: int

    def to_json(self) -> dict:
        return {"n": self.n, "m": self.m, "l": self.l, "d": self.d,
                "maxClusterSize": self.max_cluster_size,
                "uncoveredPoints": self.uncovered_points}


@dataclass(frozen=True)
class PreprocessReport:
    removed_overcovered: Tuple[int, ...] = ()
    already_exposed: Tuple[int, ...] = ()


def signature_of(space: RangeSpace, point_id: int) -> Signature:
    try:
        p = space.points[point_id]
    except KeyError:
        raise KeyError(f"unknown point id {point_id}") from None
    return tuple(i for i, rng in enumerate(space.ranges) if contains(rng, p))


def signatures(space: RangeSpace) -> Dict[int, Signature]:
    return {pid: signature_of(space, pid) for pid in space.points}


def compute_cells(space: RangeSpace) -> List[Cell]:
    """One cell per distinct nonempty signature, ordered by cluster."""
    groups: Dict[Signature, List[int]] = {}
    for pid, sig in signatures(space).items():
        if sig:
            groups.setdefault(sig, []).append(pid)
    return [Cell(sig, tuple(sorted(pids))) for sig, pids in sorted(groups.items())]


def overlap_sets(space: RangeSpace) -> Dict[int, FrozenSet[int]]:
    ol: Dict[int, set] = {i: set() for i in range(space.n)}
    for i in range(space.n):
        for j in range(i + 1, space.n):
            if overlaps(space.ranges[i], space.ranges[j]):
                ol[i].add(j)
                ol[j].add(i)
    return {i: frozenset(s) for i, s in ol.items()}


def preprocess(space: RangeSpace, k: int) -> Tuple[RangeSpace, PreprocessReport]:
    """Drop points held by more than k ranges and points held by none."""
    if k < 0:
        raise InvalidK(f"k must be non-negative, got {k}")
    keep: Dict[int, Point2D] = {}
    over, exposed = [], []
    for pid, sig in signatures(space).items():
        if not sig:
            exposed.append(pid)
        elif len(sig) > k:
            over.append(pid)
        else:
            keep[pid] = space.points[pid]
    report = PreprocessReport(tuple(sorted(over)), tuple(sorted(exposed)))
    return RangeSpace(space.ranges, keep), report


def compute_stats(space: RangeSpace, k: int) -> InstanceStats:
    ol = overlap_sets(space)
    reduced, report = preprocess(space, k)
    cells = compute_cells(reduced)
    return InstanceStats(
        n=space.n,
        m=space.m,
        l=max((len(s) for s in ol.values()), default=0),
        d=len(cells),
        max_cluster_size=max((c.cluster_size for c in cells), default=0),
        uncovered_points=len(report.already_exposed),
    )


def exposure(cells: Iterable[Cell], removed: Iterable[int]) -> int:
    """Number of points whose whole cluster lies inside the removed set."""
    t = to_mask(removed)
    return sum(c.count for c in cells if c.mask & ~t == 0)


def exposed_point_ids(cells: Iterable[Cell], removed: Iterable[int]) -> Tuple[int, ...]:
    t = to_mask(removed)
    return tuple(sorted(pid for c in cells if c.mask & ~t == 0 for pid in c.point_ids))


@dataclass(frozen=True)
class DualHypergraph:
    """Ranges as vertices, one hyperedge (its signature) per covered point."""
    n: int
    edges: Tuple[Signature, ...] = field(default=())

    def induced_edge_count(self, vertices: Iterable[int]) -> int:
        vs = set(vertices)
        return sum(1 for e in self.edges if vs.issuperset(e))

    def to_text(self) -> str:
        lines = [f"{self.n} {len(self.edges)}"]
        lines += [" ".join(map(str, e)) for e in self.edges]
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "DualHypergraph":
        lines = text.splitlines()
        n, m = map(int, lines[0].split())
        edges = tuple(tuple(int(v) for v in line.split()) for line in lines[1:m + 1])
        if len(edges) != m:
            raise ValueError(f"expected {m} hyperedges, found {len(edges)}")
        return cls(n, edges)


def to_dual_hypergraph(space: RangeSpace) -> DualHypergraph:
    edges = [sig for _, sig in sorted(signatures(space).items()) if sig]
    return DualHypergraph(space.n, tuple(edges))


def cell_table(cells: Iterable[Cell]) -> List[Tuple[int, int]]:
    """(cluster bitmask, point count) pairs, the solvers' working form."""
    return [(c.mask, c.count) for c in cells]


def mask_exposure(table: Iterable[Tuple[int, int]], t: int) -> int:
    return sum(cnt for mask, cnt in table if mask & ~t == 0)


def check_k(space: RangeSpace, k: int) -> None:
    if not 0 <= k <= space.n:
        raise InvalidK(f"k={k} outside 0..n={space.n}")
