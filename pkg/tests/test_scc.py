import pytest

from core_scripts.errors import CapacityError, DomainError, PreconditionError
from core_scripts.graph_tools.scc import (boundary_roots, condensation,
                                          graph_longest_path,
                                          longest_path_from_roots, root_set)
from core_scripts.graph_tools.signed_graph import union_graph
from tests import oracles
from tests.conftest import ROOTS_8


def _random_edges(rng, n, density):
    return [(u, v) for u in range(n) for v in range(n)
            if u != v and rng.random() < density]


def test_condensation_of_cycle_with_tail():
    # 0 -> 1 -> 2 -> 0, 2 -> 3, 4 isolated
    cond = condensation([(0, 1), (1, 2), (2, 0), (2, 3)], 5)
    assert set(cond.scc_list) == {(0, 1, 2), (3,), (4,)}
    assert cond.component_of[0] == cond.component_of[2]
    src = cond.component_of[0]
    dst = cond.component_of[3]
    assert cond.dag_edges == frozenset({(src, dst)})
    # two sources: {0, 1, 2} and {4}
    assert root_set(cond) is None


def test_root_set_of_chain():
    cond = condensation([(0, 1), (1, 2)], 3)
    assert root_set(cond) == frozenset({0})


def test_single_node_graph():
    cond = condensation([], 1)
    assert root_set(cond) == frozenset({0})


def test_bad_edges():
    with pytest.raises(DomainError):
        condensation([(0, 3)], 3)
    with pytest.raises(DomainError):
        condensation([], 0)


def test_random_graphs_match_reachability_oracle(rng):
    for _ in range(200):
        n = int(rng.integers(1, 9))
        edges = _random_edges(rng, n, rng.uniform(0.05, 0.5))
        cond = condensation(edges, n)
        comps = {frozenset(c) for c in cond.scc_list}
        assert comps == oracles.strongly_connected_components(edges, n)
        # topological order: sources first
        for src, dst in cond.dag_edges:
            assert src < dst
        assert root_set(cond) == oracles.root_set(edges, n)


def test_longest_path_on_bundled_union(scenario_8):
    schedule = scenario_8.schedule
    ug = union_graph(schedule, scenario_8.delta, 0.0, schedule.period)
    edges = ug.flow_edges()
    assert longest_path_from_roots(edges, ROOTS_8, 8) == 4
    assert graph_longest_path(edges, 8) == 4
    assert boundary_roots(edges, ROOTS_8) == ROOTS_8


def test_longest_path_matches_exhaustive_oracle(rng):
    for _ in range(50):
        n = int(rng.integers(2, 7))
        edges = _random_edges(rng, n, 0.35)
        # make node 0 reach everything through a chain
        edges = sorted(set(edges) | {(k, k + 1) for k in range(n - 1)})
        expected = oracles.longest_simple_path(edges, {0}, n)
        assert longest_path_from_roots(edges, {0}, n) == expected


def test_longest_path_preconditions():
    with pytest.raises(PreconditionError):
        longest_path_from_roots([(0, 1)], {0}, 3)
    with pytest.raises(PreconditionError):
        longest_path_from_roots([(0, 1)], set(), 2)
    chain = [(k, k + 1) for k in range(24)]
    with pytest.raises(CapacityError):
        longest_path_from_roots(chain, {0}, 25)
    assert longest_path_from_roots(chain, {0}, 25, node_cap=25) == 24
