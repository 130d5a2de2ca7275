#!/usr/bin/env python
"""
connectivity

Uniform quasi-strong delta-connectivity of a switching schedule.

A window [t, t + T) is connected when the condensation of its delta-arc
union has a unique source component. Window starts are the switch instants
of one schedule period plus a uniform grid of grid_per_dwell starts per
shortest dwell time.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import FrozenSet, Optional, Tuple

import numpy as np

import core_scripts.graph_tools.conf as nii_gconf
from core_scripts.errors import DomainError, UnsupportedScheduleError
from core_scripts.graph_tools.scc import condensation, root_set
from core_scripts.graph_tools.signed_graph import union_graph


@dataclass(frozen=True)
class ConnectivityVerdict:
    """ holds:      every checked window has a root set
        fails_at:   start of the first window without a root set
        root_set:   the common root set when it is identical in all windows
        fixed_root: whether the root set is identical in all windows
        windows:    (window start, root set or None) per checked start
    """
    holds: bool
    fails_at: Optional[float]
    root_set: Optional[FrozenSet[int]]
    fixed_root: bool
    windows: Tuple[Tuple[float, Optional[FrozenSet[int]]], ...]


def f_window_starts(schedule, grid_per_dwell=nii_gconf.grid_per_dwell,
                    max_starts=nii_gconf.max_window_starts):
    """ starts = f_window_starts(schedule, grid_per_dwell, max_starts)
    Sorted window starts over one period [t_start, t_start + P)
    """
    period = schedule.period
    if not math.isfinite(period) or period <= 0:
        raise UnsupportedScheduleError("schedule has no finite period")
    if grid_per_dwell < 1:
        raise DomainError("grid_per_dwell must be at least 1")
    step = schedule.min_dwell / grid_per_dwell
    n_grid = int(math.ceil(period / step - nii_gconf.time_eps))
    if n_grid > max_starts:
        raise UnsupportedScheduleError(
            "{:d} window starts exceed the limit {:d}".format(
                n_grid, max_starts))
    t0 = schedule.t_start
    grid = t0 + step * np.arange(n_grid)
    switches = schedule.switch_instants(t0, t0 + period)
    starts = np.sort(np.concatenate([grid, switches]))
    starts = starts[starts < t0 + period - nii_gconf.time_eps]
    keep = np.concatenate([[True], np.diff(starts) > nii_gconf.time_eps])
    return starts[keep]


def check_uniform_qs_connectivity(schedule, delta: float, T: float,
                                  grid_per_dwell=nii_gconf.grid_per_dwell,
                                  max_starts=nii_gconf.max_window_starts):
    """ verdict = check_uniform_qs_connectivity(schedule, delta, T)

    input
    -----
      schedule:       SwitchingSchedule
      delta:          positive real
      T:              positive window length
      grid_per_dwell: uniform window starts per shortest dwell

    output
    ------
      verdict:        ConnectivityVerdict
    """
    if not (math.isfinite(T) and T > 0):
        raise DomainError("window T must be positive")
    if not (math.isfinite(delta) and delta > 0):
        raise DomainError("delta must be positive")
    n = schedule.n_agents
    windows = []
    for t in f_window_starts(schedule, grid_per_dwell, max_starts):
        t = float(t)
        ug = union_graph(schedule, delta, t, t + T)
        roots = root_set(condensation(ug.flow_edges(), n))
        windows.append((t, roots))
        if roots is None:
            return ConnectivityVerdict(False, t, None, False, tuple(windows))
    distinct = {roots for _, roots in windows}
    fixed = len(distinct) == 1
    return ConnectivityVerdict(True, None, windows[0][1] if fixed else None,
                               fixed, tuple(windows))


if __name__ == "__main__":
    print("Tools for uniform quasi-strong connectivity")
