import pytest

from core_scripts.errors import DomainError, PreconditionError
from core_scripts.graph_tools.balance import (Bipartition, ParityUnionFind,
                                              check_persistent_balance)
from core_scripts.graph_tools.signed_graph import (GraphSnapshot,
                                                   SwitchingSchedule)
from core_scripts.math_tools.random_tools import (f_balanced_snapshot,
                                                  f_random_snapshot)
from tests import oracles
from tests.conftest import PART1_8, PART2_8, ROOTS_8


def _one_snapshot(snapshot):
    return SwitchingSchedule((snapshot,), (1.0,))


def test_bundled_root_set_is_balanced(scenario_8):
    verdict = check_persistent_balance(scenario_8.schedule, 0.04, ROOTS_8)
    assert verdict.balanced
    assert verdict.unique
    assert verdict.bipartition.part1 == PART1_8
    assert verdict.bipartition.part2 == PART2_8


def test_flipped_sign_breaks_balance(scenario_8):
    snaps = list(scenario_8.schedule.snapshots)
    # a_32 > 0 inside {2, 3}; flip it in the third snapshot
    weights = tuple((i, j, -w if (i, j) == (2, 1) else w)
                    for i, j, w in snaps[2].weights)
    snaps[2] = GraphSnapshot(8, weights)
    schedule = SwitchingSchedule(tuple(snaps),
                                 scenario_8.schedule.dwell_times,
                                 scenario_8.schedule.rotation)
    verdict = check_persistent_balance(schedule, 0.04, ROOTS_8)
    assert not verdict.balanced
    assert verdict.bipartition is None
    assert verdict.conflict is not None


def test_all_positive_graph_has_one_part():
    snap = GraphSnapshot(3, ((0, 1, 1.0), (1, 2, 1.0), (2, 0, 1.0)))
    verdict = check_persistent_balance(_one_snapshot(snap), 0.1, {0, 1, 2})
    assert verdict.balanced
    assert verdict.bipartition == Bipartition({0, 1, 2}, set())


def test_disconnected_constraints_are_not_unique():
    snap = GraphSnapshot(4, ((0, 1, -1.0), (2, 3, 1.0)))
    verdict = check_persistent_balance(_one_snapshot(snap), 0.1,
                                       {0, 1, 2, 3})
    assert verdict.balanced
    assert not verdict.unique
    # the smallest node of every constraint group goes to part1
    assert verdict.bipartition.part1 == frozenset({0, 2, 3})


def test_arguments_checked():
    snap = GraphSnapshot(2, ((0, 1, 1.0),))
    with pytest.raises(PreconditionError):
        check_persistent_balance(_one_snapshot(snap), 0.1, set())
    with pytest.raises(DomainError):
        check_persistent_balance(_one_snapshot(snap), 0.1, {5})
    with pytest.raises(DomainError):
        check_persistent_balance(_one_snapshot(snap), 0.0, {0})


def test_parity_union_find():
    dsu = ParityUnionFind(range(4))
    assert dsu.union(0, 1, 1)
    assert dsu.union(1, 2, 1)
    assert dsu.find(0)[1] == dsu.find(2)[1]
    assert not dsu.union(0, 2, 1)
    assert dsu.union(0, 2, 0)
    assert dsu.n_groups() == 2


def test_random_graphs_match_enumeration(rng):
    for trial in range(200):
        n = int(rng.integers(2, 9))
        n_snaps = int(rng.integers(1, 4))
        if trial % 3 == 0:
            snaps = [f_random_snapshot(rng, n, density=0.3)
                     for _ in range(n_snaps)]
        else:
            # one partition for every snapshot, or a fresh one per snapshot
            part = [x for x in range(n) if rng.random() < 0.5]
            snaps = []
            for _ in range(n_snaps):
                if trial % 3 == 2:
                    part = [x for x in range(n) if rng.random() < 0.5]
                snaps.append(f_balanced_snapshot(rng, n, part, density=0.4))
        dwells = tuple(float(x) for x in rng.uniform(0.5, 2.0, n_snaps))
        schedule = SwitchingSchedule(tuple(snaps), dwells)
        S = frozenset(x for x in range(n) if rng.random() < 0.7) or {0}
        verdict = check_persistent_balance(schedule, 0.1, S)
        found = oracles.balanced_parts(snaps, S)
        assert verdict.balanced == bool(found)
        if trial % 3 == 1:
            assert verdict.balanced
        if found:
            assert verdict.bipartition.part1 in found
            assert verdict.bipartition.nodes == frozenset(S)
            assert verdict.unique == (len(found) == 1)
        else:
            assert verdict.conflict is not None
