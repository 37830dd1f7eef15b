"""Bounded search tree over greedy clusters and overlap-neighbour extensions.

At a node holding the partial solution T with budget b the search branches on
(a) for each size i <= b, the size-i cluster outside T and its overlap
neighbourhood that exposes the most additional points, and (b) each range that
overlaps T but is not yet in it.  Every feasible T reached at a leaf is scored
and the best one kept.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Dict, Iterable, List, Optional, TextIO, Tuple

from .errors import ClusterTooLarge
from .instance import (Cell, RangeSpace, Signature, check_k, compute_cells, exposure,
                       from_mask, mask_exposure, overlap_sets, preprocess, to_mask)
from .solution import Solution, order_key


@dataclass
class SearchStats:
    nodes_visited: int = 0
    leaves: int = 0
    max_depth: int = 0
    max_children_observed: int = 0
    best_exposure: int = 0

    def to_json(self) -> dict:
        return {"nodesVisited": self.nodes_visited, "leaves": self.leaves,
                "maxDepth": self.max_depth,
                "maxChildrenObserved": self.max_children_observed,
                "bestExposure": self.best_exposure}


def enumerate_clusters(cells: Iterable[Cell], k: int) -> Dict[int, List[Signature]]:
    """Distinct clusters grouped by size 1..k, each group in lexicographic order."""
    groups: Dict[int, set] = {i: set() for i in range(1, k + 1)}
    for c in cells:
        if c.cluster_size > k:
            raise ClusterTooLarge(
                f"cluster {c.cluster} has {c.cluster_size} ranges, budget is {k}; preprocess first"
            )
        groups[c.cluster_size].add(c.cluster)
    return {i: sorted(g) for i, g in groups.items()}


def exposure_gain(cells: List[Cell], cluster: Iterable[int], removed: Iterable[int]) -> int:
    removed = set(removed)
    return exposure(cells, removed | set(cluster)) - exposure(cells, removed)


def greedy_cluster(cells: List[Cell], size: int, forbidden: Iterable[int],
                   removed: Iterable[int]) -> Optional[Signature]:
    """Best size-`size` cluster avoiding `forbidden`; ties go to the smallest cluster."""
    forbidden = set(forbidden)
    best, best_gain = None, -1
    for c in sorted({c.cluster for c in cells if c.cluster_size == size}):
        if forbidden.isdisjoint(c):
            gain = exposure_gain(cells, c, removed)
            if gain > best_gain:
                best, best_gain = c, gain
    return best


class _Search:
    def __init__(self, cells: List[Cell], ol: Dict[int, frozenset], k: int,
                 dedup: bool, trace: Optional[TextIO]):
        self.table = [(c.mask, c.count) for c in cells]
        self.ol_mask = {i: to_mask(s) for i, s in ol.items()}
        # clusters by size as (mask, cluster) in lexicographic cluster order
        self.groups = {i: [(to_mask(c), c) for c in g]
                       for i, g in enumerate_clusters(cells, k).items()}
        self.dedup = dedup
        self.seen: set = set()
        self.trace = trace
        self.stats = SearchStats()
        self.best: Optional[Tuple[int, Tuple[int, ...]]] = None

    def neighbourhood(self, t: int) -> int:
        out = 0
        for r in from_mask(t):
            out |= self.ol_mask[r]
        return out

    def greedy(self, size: int, forbidden: int, t: int) -> Optional[int]:
        base = mask_exposure(self.table, t)
        best, best_gain = None, -1
        for mask, _ in self.groups.get(size, ()):
            if mask & forbidden:
                continue
            gain = mask_exposure(self.table, t | mask) - base
            if gain > best_gain:
                best, best_gain = mask, gain
        return best

    def children(self, t: int, budget: int) -> List[Tuple[int, int]]:
        if budget <= 0:
            return []
        ol = self.neighbourhood(t)
        out = []
        for size in range(1, budget + 1):
            c = self.greedy(size, t | ol, t)
            if c is not None:
                out.append((t | c, budget - size))
        for r in from_mask(ol & ~t):
            out.append((t | (1 << r), budget - 1))
        return out

    def visit(self, t: int, budget: int, depth: int) -> None:
        if self.dedup:
            if (t, budget) in self.seen:
                return
            self.seen.add((t, budget))
        st = self.stats
        st.nodes_visited += 1
        st.max_depth = max(st.max_depth, depth)
        value = mask_exposure(self.table, t)
        if self.trace is not None:
            self.trace.write(json.dumps({"T": list(from_mask(t)), "budget": budget,
                                         "depth": depth, "exposure": value}) + "\n")
        kids = self.children(t, budget)
        st.max_children_observed = max(st.max_children_observed, len(kids))
        if not kids:
            st.leaves += 1
            cand = (value, from_mask(t))
            if self.best is None or order_key(*cand) < order_key(*self.best):
                self.best = cand
            return
        for child, rest in kids:
            self.visit(child, rest, depth + 1)


def rec_mep(space: RangeSpace, k: int, dedup: bool = False,
            trace: Optional[TextIO] = None) -> Tuple[Solution, SearchStats]:
    """Run the branching search; returns the best leaf and the tree telemetry."""
    check_k(space, k)
    cells = compute_cells(preprocess(space, k)[0])
    search = _Search(cells, overlap_sets(space), k, dedup, trace)
    search.visit(0, k, 0)
    value, removed = search.best
    search.stats.best_exposure = value
    stats = search.stats
    return Solution.from_removed(cells, k, removed, stats=stats.to_json()), stats
