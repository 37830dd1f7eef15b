from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Tuple

from .instance import Cell, compute_cells, exposed_point_ids, exposure


@dataclass(frozen=True)
class Solution:
    k: int
    removed: Tuple[int, ...]
    exposed_count: int
    exposed_point_ids: Tuple[int, ...]
    stats: Optional[Dict[str, Any]] = field(default=None, compare=False)

    @classmethod
    def from_removed(cls, cells: list[Cell], k: int, removed, stats=None) -> "Solution":
        removed = tuple(sorted(removed))
        return cls(k, removed, exposure(cells, removed),
                   exposed_point_ids(cells, removed), stats)

    def to_json(self) -> dict:
        out = {
            "k": self.k,
            "removed": list(self.removed),
            "exposedCount": self.exposed_count,
            "exposedPointIds": list(self.exposed_point_ids),
        }
        if self.stats is not None:
            out["stats"] = dict(self.stats)
        return out

    @classmethod
    def from_json(cls, data: dict) -> "Solution":
        return cls(
            k=int(data["k"]),
            removed=tuple(int(r) for r in data["removed"]),
            exposed_count=int(data["exposedCount"]),
            exposed_point_ids=tuple(int(p) for p in data.get("exposedPointIds", [])),
            stats=data.get("stats"),
        )


def order_key(exposed: int, removed: Tuple[int, ...]):
    """Total order used by every solver: more exposure first, then lexicographic set."""
    return (-exposed, removed)


def check_solution(space, sol: Solution) -> List[str]:
    """Mismatches between a claimed solution and the instance; empty means ok."""
    problems = []
    if len(set(sol.removed)) != len(sol.removed):
        problems.append("removed: duplicate range ids")
    bad = [r for r in sol.removed if not 0 <= r < space.n]
    if bad:
        problems.append(f"removed: unknown range ids {bad}")
        return problems
    if len(set(sol.removed)) > sol.k:
        problems.append(f"budget exceeded: {len(set(sol.removed))} ranges removed, k={sol.k}")
    cells = compute_cells(space)
    count = exposure(cells, sol.removed)
    if count != sol.exposed_count:
        problems.append(f"exposedCount mismatch: claimed {sol.exposed_count}, actual {count}")
    ids = exposed_point_ids(cells, sol.removed)
    if tuple(sorted(sol.exposed_point_ids)) != ids:
        problems.append("exposedPointIds mismatch")
    return problems
