"""Cell-guessing solvers, exponential only in the number d of point-bearing cells.

Two modes share the 2^d guess loop:

* semantic: a guess C picks cells to expose; the removed set is the union U
  of their clusters, scored by the true exposure of U.  Exact.
* paper: each guess becomes a small separable integer program (one variable
  per guessed cell counting how many of its ranges are removed, summing to
  k), solved exactly by a knapsack-style DP.  Nested cells are zeroed and
  ranges shared between clusters are charged once per cluster, so this mode
  can undercount.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from .errors import DLimitExceeded, InfeasibleGuess
from .instance import (Cell, RangeSpace, check_k, compute_cells, from_mask, mask_exposure,
                       preprocess)
from .solution import Solution, order_key

DEFAULT_D_LIMIT = 20


@dataclass(frozen=True)
class CellGuess:
    chosen: Tuple[int, ...]

    @classmethod
    def from_mask(cls, mask: int) -> "CellGuess":
        return cls(from_mask(mask))


@dataclass(frozen=True)
class IlpVar:
    cell: int
    size: int          # domain is 1..size
    profit: int        # earned only when x == size


@dataclass(frozen=True)
class IlpModel:
    variables: Tuple[IlpVar, ...]
    k: int


@dataclass
class CellStats:
    d: int
    guesses_examined: int = 0
    feasible_guesses: int = 0
    objective: Optional[int] = None

    def to_json(self) -> dict:
        out = {"d": self.d, "guessesExamined": self.guesses_examined,
               "feasibleGuesses": self.feasible_guesses}
        if self.objective is not None:
            out["objective"] = self.objective
        return out


def _cells_for(space: RangeSpace, k: int, d_limit: int) -> List[Cell]:
    check_k(space, k)
    cells = compute_cells(preprocess(space, k)[0])
    if len(cells) > d_limit:
        raise DLimitExceeded(f"d={len(cells)} exceeds d-limit {d_limit}")
    return cells


def _guess_unions(masks: Sequence[int]) -> List[int]:
    """Union of cluster masks for every guess 0..2^d-1, built from the lowest set bit."""
    unions = [0] * (1 << len(masks))
    for g in range(1, len(unions)):
        low = g & -g
        unions[g] = unions[g ^ low] | masks[low.bit_length() - 1]
    return unions


def pad(removed: Sequence[int], n: int, k: int) -> Tuple[int, ...]:
    """Fill up to k ranges with the smallest unused ids."""
    out = set(removed)
    for r in range(n):
        if len(out) >= k:
            break
        out.add(r)
    return tuple(sorted(out))


def solve_cells_semantic(space: RangeSpace, k: int,
                         d_limit: int = DEFAULT_D_LIMIT) -> Tuple[Solution, CellStats]:
    cells = _cells_for(space, k, d_limit)
    table = [(c.mask, c.count) for c in cells]
    stats = CellStats(d=len(cells))
    scored = {}
    best = None
    for u in _guess_unions([c.mask for c in cells]):
        stats.guesses_examined += 1
        if bin(u).count("1") > k:
            continue
        stats.feasible_guesses += 1
        if u in scored:
            continue
        removed = pad(from_mask(u), space.n, k)
        scored[u] = cand = (mask_exposure(table, sum(1 << r for r in removed)), removed)
        if best is None or order_key(*cand) < order_key(*best):
            best = cand
    return Solution.from_removed(cells, k, best[1], stats=stats.to_json()), stats


def build_ilp(cells: Sequence[Cell], guess: CellGuess, k: int) -> IlpModel:
    chosen = [cells[i] for i in guess.chosen]
    sets = [set(c.cluster) for c in chosen]
    variables = []
    for i, c in zip(guess.chosen, chosen):
        nested = any(set(c.cluster) < other for other in sets)
        variables.append(IlpVar(i, c.cluster_size, 0 if nested else c.count))
    if not len(variables) <= k <= sum(v.size for v in variables):
        raise InfeasibleGuess(
            f"guess {guess.chosen}: no assignment with each x_i in 1..|cluster| sums to {k}"
        )
    return IlpModel(tuple(variables), k)


def solve_ilp(model: IlpModel) -> Optional[Tuple[Tuple[int, ...], int]]:
    """Exact DP over (variable, partial sum); lexicographically smallest optimal x.

    Returns None when no assignment reaches the target sum.
    """
    vs, k = model.variables, model.k
    n = len(vs)
    # tail[i][s]: best profit of variables i.. summing to exactly s, or None
    tail: List[List[Optional[int]]] = [[None] * (k + 1) for _ in range(n + 1)]
    tail[n][0] = 0
    for i in range(n - 1, -1, -1):
        v = vs[i]
        for s in range(k + 1):
            best = None
            for x in range(1, min(v.size, s) + 1):
                rest = tail[i + 1][s - x]
                if rest is None:
                    continue
                val = rest + (v.profit if x == v.size else 0)
                if best is None or val > best:
                    best = val
            tail[i][s] = best
    if tail[0][k] is None:
        return None
    xs, s = [], k
    for i, v in enumerate(vs):
        for x in range(1, min(v.size, s) + 1):
            rest = tail[i + 1][s - x]
            if rest is not None and rest + (v.profit if x == v.size else 0) == tail[i][s]:
                xs.append(x)
                s -= x
                break
    return tuple(xs), tail[0][k]


def reconstruct(cells: Sequence[Cell], model: IlpModel, xs: Sequence[int]) -> Tuple[int, ...]:
    """Ranges implied by an assignment: whole clusters at x = size, else the first x ranges."""
    removed = set()
    for v, x in zip(model.variables, xs):
        removed.update(cells[v.cell].cluster[:x])
    return tuple(sorted(removed))


def solve_cells_paper(space: RangeSpace, k: int,
                      d_limit: int = DEFAULT_D_LIMIT) -> Tuple[Solution, CellStats]:
    cells = _cells_for(space, k, d_limit)
    stats = CellStats(d=len(cells))
    best = None  # (objective, removed)
    for g in range(1 << len(cells)):
        stats.guesses_examined += 1
        guess = CellGuess.from_mask(g)
        if not guess.chosen:
            if k != 0:
                continue
            result, model = ((), 0), IlpModel((), 0)
        else:
            try:
                model = build_ilp(cells, guess, k)
            except InfeasibleGuess:
                continue
            result = solve_ilp(model)
            if result is None:
                continue
        stats.feasible_guesses += 1
        xs, objective = result
        cand = (objective, reconstruct(cells, model, xs))
        if best is None or order_key(*cand) < order_key(*best):
            best = cand
    objective, removed = best if best is not None else (0, ())
    stats.objective = objective
    removed = pad(removed, space.n, k)
    return Solution.from_removed(cells, k, removed, stats=stats.to_json()), stats
