import io
import json

import pytest

from mep.branch import enumerate_clusters, exposure_gain, greedy_cluster, rec_mep
from mep.brute import solve_brute
from mep.errors import ClusterTooLarge, InvalidK
from mep.instance import Cell, compute_cells, compute_stats, preprocess

from .suites import R, small_instance


@pytest.fixture
def cells2(fig1):
    return compute_cells(preprocess(fig1, 2)[0])


def test_enumerate_clusters_fixture(cells2):
    groups = enumerate_clusters(cells2, 2)
    assert groups[1] == [(R(1),), (R(2),), (R(3),), (R(4),), (R(5),)]
    assert groups[2] == [(R(3), R(4)), (R(4), R(5))]


def test_enumerate_clusters_trivial():
    assert enumerate_clusters([], 3) == {1: [], 2: [], 3: []}
    assert enumerate_clusters([Cell((0, 1), (0,))], 2) == {1: [], 2: [(0, 1)]}
    with pytest.raises(ClusterTooLarge):
        enumerate_clusters([Cell((0, 1, 2), (0,))], 2)


def test_exposure_gain(cells2):
    assert exposure_gain(cells2, (R(4), R(5)), ()) == 10
    assert exposure_gain(cells2, (R(4),), ()) == 4
    assert exposure_gain(cells2, (R(4),), (R(4), R(5))) == 0


def test_greedy_cluster(cells2):
    # 2-cluster gains: {R3,R4} = 2+4+1 = 7, {R4,R5} = 4+4+2 = 10
    assert exposure_gain(cells2, (R(3), R(4)), ()) == 7
    assert greedy_cluster(cells2, 2, (), ()) == (R(4), R(5))
    assert greedy_cluster(cells2, 1, (), ()) == (R(1),)
    assert greedy_cluster(cells2, 2, (R(3), R(4), R(5)), ()) is None


def test_fixture_tree(fig1):
    trace = io.StringIO()
    sol, stats = rec_mep(fig1, 2, trace=trace)
    assert sol.exposed_count == 10
    nodes = [json.loads(line) for line in trace.getvalue().splitlines()]
    assert nodes[0] == {"T": [], "budget": 2, "depth": 0, "exposure": 0}
    first_level = [n["T"] for n in nodes if n["depth"] == 1]
    # root branches only on the greedy 1-cluster {R1} and 2-cluster {R4,R5}
    assert first_level == [[R(1)], [R(4), R(5)]]
    assert stats.nodes_visited == len(nodes)
    assert stats.max_depth <= 2
    assert stats.best_exposure == 10


def test_k0_and_invalid(fig1):
    sol, stats = rec_mep(fig1, 0)
    assert sol.exposed_count == 0 and sol.removed == ()
    assert stats.nodes_visited == 1 and stats.leaves == 1
    with pytest.raises(InvalidK):
        rec_mep(fig1, 6)


@pytest.mark.parametrize("seed", range(60))
def test_matches_oracle_and_bounds(seed):
    space, k = small_instance(seed)
    sol, stats = rec_mep(space, k)
    assert sol.exposed_count == solve_brute(space, k).exposed_count
    l = compute_stats(space, k).l
    assert stats.max_depth <= k
    assert stats.leaves <= stats.nodes_visited
    assert stats.max_children_observed <= k + l * (k - 1)


@pytest.mark.parametrize("seed", range(40))
def test_dedup_preserves_value(seed):
    space, k = small_instance(seed, shapes=("disk", "rect"))
    plain, s1 = rec_mep(space, k)
    dedup, s2 = rec_mep(space, k, dedup=True)
    assert plain.exposed_count == dedup.exposed_count
    assert s2.nodes_visited <= s1.nodes_visited
