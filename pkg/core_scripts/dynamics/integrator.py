#!/usr/bin/env python
"""
integrator

Fixed-step classical Runge-Kutta (order 4) integration of the switched
dynamics x' = -L(t) x + u, aligned with switch instants.

On a constant segment every law reduces to an affine field xi' = A xi + b,
for which one RK4 step of size h is exactly
  xi <- Phi xi + psi
  Phi = I + hA + (hA)^2/2 + (hA)^3/6 + (hA)^4/24
  psi = h (I + hA/2 + (hA)^2/6 + (hA)^3/24) b
The operators are built once per (segment system, step size).

Grid: t_start + k dt merged with every event instant (switch, gain change,
start, end). Uniform points closer than dt * grid_snap to an event are
dropped, so steps next to an event are shortened and never straddle it.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import FrozenSet, Optional

import numpy as np
from tqdm import tqdm

import core_scripts.dynamics.conf as nii_dyconf
import core_scripts.graph_tools.conf as nii_gconf
import core_scripts.other_tools.list_tools as nii_list_tools
from core_scripts.dynamics.control_law import f_select_law
from core_scripts.errors import (IntegrationDivergedError,
                                 RootSetMismatchError, StructuralError)
from core_scripts.graph_tools.connectivity import check_uniform_qs_connectivity
from core_scripts.op_manager.op_process_monitor import MonitorSeries


@dataclass(frozen=True)
class Trajectory:
    """ Integrated trajectory

    times:      (M,) strictly increasing grid
    states:     (M, N) x(t)
    controls:   (M, N) u(t), right-continuous at events
    errors:     (M, N) x(t) - x_d (integrated directly in closed loop)
    monitor:    h, c, h_e, c_e series
    event_mask: (M,) True at switch / gain-change / end instants
    complete:   False for the partial trajectory of a diverged run
    """
    times: np.ndarray
    states: np.ndarray
    controls: np.ndarray
    errors: np.ndarray
    monitor: MonitorSeries
    root_set: FrozenSet[int]
    x_target: np.ndarray
    closed_loop: bool
    law_name: str
    event_mask: np.ndarray
    dt: float
    complete: bool = True

    @property
    def n_points(self):
        return self.times.shape[0]

    @property
    def n_agents(self):
        return self.states.shape[1]

    @property
    def h(self):
        return self.monitor.h

    @property
    def c(self):
        return self.monitor.c

    @property
    def h_e(self):
        return self.monitor.h_e

    @property
    def c_e(self):
        return self.monitor.c_e

    def index_at(self, t):
        """ Index of the grid point nearest to t
        """
        idx = int(np.searchsorted(self.times, t))
        if idx >= self.n_points:
            return self.n_points - 1
        if idx > 0 and t - self.times[idx - 1] <= self.times[idx] - t:
            return idx - 1
        return idx


#############################################################
# grid
#

def f_event_times(scenario, extra_events=()):
    """ events = f_event_times(scenario, extra_events=())
    Sorted distinct event instants in [t_start, t_end]
    """
    t0, tf = scenario.t_start, scenario.t_end
    events = [t0, tf]
    events += list(scenario.schedule.switch_instants(t0, tf))
    events += [t for t in scenario.gains.breakpoints() if t0 < t < tf]
    events += [float(t) for t in extra_events if t0 < t < tf]
    events = np.sort(np.asarray(events, dtype=nii_dyconf.h_dtype))
    events = events[(events >= t0) & (events <= tf)]
    keep = np.concatenate([[True], np.diff(events) > nii_gconf.time_eps])
    events = events[keep]
    # the end point is exactly tf
    events[-1] = tf
    return events


def f_build_grid(scenario, extra_events=()):
    """ times, bounds, event_mask = f_build_grid(scenario, extra_events=())

    times:      (M,) grid
    bounds:     list of (lo, hi) grid indices of each constant segment
    event_mask: (M,) True at event instants
    """
    dt = scenario.dt
    t0 = scenario.t_start
    events = f_event_times(scenario, extra_events)
    n_uniform = int(np.floor(scenario.horizon / dt)) + 1
    uniform = t0 + dt * np.arange(n_uniform)
    snap = dt * nii_dyconf.grid_snap

    pieces, flags, bounds = [], [], []
    count = 0
    for a, b in zip(events[:-1], events[1:]):
        lo_idx = np.searchsorted(uniform, a + snap, side='right')
        hi_idx = np.searchsorted(uniform, b - snap, side='left')
        inner = uniform[lo_idx:hi_idx]
        pieces.append(np.concatenate([[a], inner]))
        flags.append(np.concatenate([[True], np.zeros(len(inner), bool)]))
        bounds.append((count, count + 1 + len(inner)))
        count += 1 + len(inner)
    pieces.append(events[-1:])
    flags.append(np.array([True]))
    return np.concatenate(pieces), bounds, np.concatenate(flags)


#############################################################
# step operator
#

def f_rk4_step_operator(amat, bvec, h):
    """ phi, psi = f_rk4_step_operator(amat, bvec, h)
    One classical RK4 step of xi' = A xi + b is xi <- phi @ xi + psi
    """
    eye = np.eye(amat.shape[0])
    ha = h * amat
    ha2 = ha @ ha
    ha3 = ha2 @ ha
    phi = eye + ha + ha2 / 2.0 + ha3 / 6.0 + (ha3 @ ha) / 24.0
    psi = h * ((eye + ha / 2.0 + ha2 / 6.0 + ha3 / 24.0) @ bvec)
    return phi, psi


#############################################################
# root set
#

def f_resolve_root_set(scenario, grid_per_dwell=nii_gconf.grid_per_dwell):
    """ S = f_resolve_root_set(scenario, grid_per_dwell)

    Detected fixed root set when the scenario declares none; a declared set
    is cross-checked against the detected one.
    """
    verdict = check_uniform_qs_connectivity(
        scenario.schedule, scenario.delta, scenario.window_T, grid_per_dwell)
    detected = verdict.root_set if verdict.holds and verdict.fixed_root \
        else None
    if scenario.root_set is not None:
        if detected is not None and detected != scenario.root_set:
            raise RootSetMismatchError(
                nii_list_tools.f_to_one_based(scenario.root_set),
                nii_list_tools.f_to_one_based(detected))
        return scenario.root_set
    if detected is None:
        raise StructuralError("schedule has no fixed root set")
    return detected


#############################################################
# integration
#

def _assemble(scenario, law, roots, times, xi, controls, event_mask,
              complete):
    origin = law.origin(scenario)
    x_target = scenario.x_target_array()
    states = xi + origin
    errors = xi if law.closed_loop else states - x_target
    for arr in (times, states, controls, errors, event_mask, x_target):
        arr.setflags(write=False)
    return Trajectory(times, states, controls, errors,
                      MonitorSeries.from_rows(states, errors, roots),
                      frozenset(roots), x_target, law.closed_loop, law.name,
                      event_mask, scenario.dt, complete)


def integrate(scenario, closed_loop: bool = False, law=None,
              root_set: Optional[FrozenSet[int]] = None,
              verbose: bool = False,
              grid_per_dwell: int = nii_gconf.grid_per_dwell,
              extra_events=()) -> Trajectory:
    """ traj = integrate(scenario, closed_loop, law=None, root_set=None)

    input
    -----
      scenario:    Scenario
      closed_loop: bool, select TargetedControl (True) or OpenLoop
      law:         ControlLaw, overrides closed_loop when given
      root_set:    root set used by the monitors; resolved from the
                   scenario when None
      verbose:     show a progress bar over segments
      extra_events: additional instants to place on the grid

    output
    ------
      traj:        Trajectory
    """
    law = f_select_law(closed_loop) if law is None else law
    roots = f_resolve_root_set(scenario, grid_per_dwell) \
        if root_set is None else frozenset(root_set)
    schedule = scenario.schedule
    times, bounds, event_mask = f_build_grid(scenario, extra_events)
    origin = law.origin(scenario)

    xi = np.empty([times.shape[0], scenario.n_agents],
                  dtype=nii_dyconf.h_dtype)
    controls = np.empty_like(xi)
    xi[0] = scenario.x0_array() - origin

    systems = {}
    operators = {}
    iterator = tqdm(bounds, desc='integrate ' + law.name, unit='seg',
                    leave=False) if verbose else bounds
    for lo, hi in iterator:
        t_a = times[lo]
        snap_idx = schedule.snapshot_index_at(t_a)
        gains = scenario.gains.gains_at(t_a)
        key = (snap_idx, tuple(gains))
        lap = schedule.snapshots[snap_idx].laplacian
        if key not in systems:
            systems[key] = law.deviation_system(lap, gains, origin)
        amat, bvec = systems[key]

        for k in range(lo, hi):
            if event_mask[k] or event_mask[k + 1]:
                step = times[k + 1] - times[k]
                phi, psi = f_rk4_step_operator(amat, bvec, step)
            else:
                if key not in operators:
                    operators[key] = f_rk4_step_operator(
                        amat, bvec, scenario.dt)
                phi, psi = operators[key]
            xi[k + 1] = phi @ xi[k] + psi

        block = xi[lo:hi + 1]
        if not np.all(np.isfinite(block)):
            bad = lo + int(np.argmax(~np.all(np.isfinite(block), axis=1)))
            last = bad - 1
            controls[lo:last + 1] = law.control(
                lap, gains, xi[lo:last + 1], origin)
            partial = _assemble(
                scenario, law, roots, times[:last + 1].copy(),
                xi[:last + 1].copy(), controls[:last + 1].copy(),
                event_mask[:last + 1].copy(), False)
            raise IntegrationDivergedError(float(times[last]), partial)
        controls[lo:hi + 1] = law.control(lap, gains, block, origin)

    return _assemble(scenario, law, roots, times, xi, controls, event_mask,
                     True)


if __name__ == "__main__":
    print("Switch-aligned RK4 integrator")
