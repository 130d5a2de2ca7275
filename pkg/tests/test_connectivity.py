import numpy as np
import pytest

from core_scripts.errors import DomainError, UnsupportedScheduleError
from core_scripts.graph_tools.connectivity import (
    check_uniform_qs_connectivity, f_window_starts)
from core_scripts.graph_tools.signed_graph import (GraphSnapshot,
                                                   SwitchingSchedule)
from tests.conftest import ROOTS_8


def test_bundled_schedule_has_fixed_root(scenario_8):
    verdict = check_uniform_qs_connectivity(scenario_8.schedule, 0.04, 10.0)
    assert verdict.holds
    assert verdict.fixed_root
    assert verdict.root_set == ROOTS_8
    assert verdict.fails_at is None
    assert all(roots == ROOTS_8 for _, roots in verdict.windows)


def test_window_starts_include_switches(scenario_8):
    starts = f_window_starts(scenario_8.schedule, grid_per_dwell=1)
    switches = scenario_8.schedule.switch_instants(0.0, 49.0)
    for s in switches:
        assert np.min(np.abs(starts - s)) < 1e-9
    assert starts[0] == 0.0
    assert starts[-1] < 50.0
    assert np.all(np.diff(starts) > 0)


def test_disconnected_window_reports_failure():
    # agents 0 and 1 never hear from each other
    snap = GraphSnapshot(3, ((2, 0, 1.0),))
    schedule = SwitchingSchedule((snap,), (1.0,))
    verdict = check_uniform_qs_connectivity(schedule, 0.1, 2.0)
    assert not verdict.holds
    assert verdict.fails_at == 0.0
    assert verdict.root_set is None


def test_alternating_snapshots_need_long_windows():
    # 0 -> 1 only in the first snapshot, 1 -> 2 only in the second
    first = GraphSnapshot(3, ((1, 0, 1.0),))
    second = GraphSnapshot(3, ((2, 1, 1.0),))
    schedule = SwitchingSchedule((first, second), (1.0, 1.0))
    short = check_uniform_qs_connectivity(schedule, 0.1, 1.0)
    assert not short.holds
    long = check_uniform_qs_connectivity(schedule, 0.1, 2.0)
    assert long.holds
    assert long.root_set == frozenset({0})


def test_bad_arguments(scenario_8):
    with pytest.raises(DomainError):
        check_uniform_qs_connectivity(scenario_8.schedule, 0.04, 0.0)
    with pytest.raises(UnsupportedScheduleError):
        check_uniform_qs_connectivity(scenario_8.schedule, 0.04, 10.0,
                                      max_starts=3)
