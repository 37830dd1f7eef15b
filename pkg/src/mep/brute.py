"""Exhaustive k-subset enumeration: the ground truth every other solver is checked against."""
from __future__ import annotations

from itertools import combinations
from math import comb
from typing import Iterator, Tuple

from .errors import BudgetExceeded
from .instance import (RangeSpace, cell_table, check_k, compute_cells, mask_exposure,
                       preprocess)
from .solution import Solution

DEFAULT_BUDGET = 10**7
MAX_ORACLE_RANGES = 64


def _prepare(space: RangeSpace, k: int, budget: int, use_preprocess: bool):
    check_k(space, k)
    if space.n > MAX_ORACLE_RANGES:
        raise BudgetExceeded(f"oracle refuses n={space.n} > {MAX_ORACLE_RANGES} ranges")
    subsets = comb(space.n, k)
    if subsets > budget:
        raise BudgetExceeded(f"C({space.n},{k}) = {subsets} subsets exceeds budget {budget}")
    work = preprocess(space, k)[0] if use_preprocess else space
    return compute_cells(work)


def _scores(space: RangeSpace, k: int, table) -> Iterator[Tuple[int, Tuple[int, ...]]]:
    for subset in combinations(range(space.n), k):
        t = 0
        for r in subset:
            t |= 1 << r
        yield mask_exposure(table, t), subset


def solve_brute(space: RangeSpace, k: int, budget: int = DEFAULT_BUDGET,
                use_preprocess: bool = True) -> Solution:
    cells = _prepare(space, k, budget, use_preprocess)
    table = cell_table(cells)
    best, best_set = -1, ()
    # combinations() is lexicographic, so keeping the first maximum is the tie-break
    for value, subset in _scores(space, k, table):
        if value > best:
            best, best_set = value, subset
    return Solution.from_removed(cells, k, best_set)


def enumerate_optima(space: RangeSpace, k: int, budget: int = DEFAULT_BUDGET):
    """All optimal k-subsets in lexicographic order, with the optimum value."""
    table = cell_table(_prepare(space, k, budget, True))
    scored = list(_scores(space, k, table))
    best = max(v for v, _ in scored)
    return best, [s for v, s in scored if v == best]
