"""Exact solvers for the maximum exposure problem on rectangles, disks and convex polygons."""
from importlib import resources

from .branch import SearchStats, rec_mep
from .brute import enumerate_optima, solve_brute
from .cells import solve_cells_paper, solve_cells_semantic
from .geometry import MAX_SIDES, AxisRect, ConvexPolygon, Disk, Point2D, contains, overlaps, validate
from .instance import (Cell, RangeSpace, compute_cells, compute_stats, exposure, overlap_sets,
                       preprocess, signature_of, to_dual_hypergraph)
from .io import load_space, save_space
from .solution import Solution


def fixture_path():
    """Path of the bundled five-rectangle example instance."""
    return resources.files(__package__) / "data" / "fig1.json"


def load_fixture() -> RangeSpace:
    return load_space(fixture_path())
