#!/usr/bin/env python
"""
scenario

Value types describing one experiment: gain schedule and scenario.

Scenario and GainSchedule are frozen dataclasses; every invariant is checked
in __post_init__ and violations raise DomainError. Gain conditions relative
to the root set are reported by f_gain_violations so that the parser and
the certifier can phrase them in their own way.
"""
from __future__ import annotations

import dataclasses
import math
from dataclasses import dataclass, field
from typing import FrozenSet, Optional, Tuple

import numpy as np

import core_scripts.dynamics.conf as nii_dyconf
import core_scripts.graph_tools.conf as nii_gconf
from core_scripts.errors import DomainError
from core_scripts.graph_tools.signed_graph import SwitchingSchedule


def f_state_vector(values, n_agents, name='state'):
    """ vec = f_state_vector(values, n_agents, name)
    Validate length and finiteness of a state vector, return a float tuple
    """
    vec = tuple(float(x) for x in values)
    if len(vec) != n_agents:
        raise DomainError("{} has {:d} entries, expected {:d}".format(
            name, len(vec), n_agents))
    if not all(math.isfinite(x) for x in vec):
        raise DomainError("{} has non-finite entries".format(name))
    return vec


@dataclass(frozen=True)
class GainSchedule:
    """ Piecewise-constant feedback gains k_i(t)

    values:      gains in force from the start of the schedule
    kappa_lower: lower bound on the gains of root agents
    pieces:      ((start time, gains), ...) taking over at strictly
                 increasing start times
    """
    values: Tuple[float, ...]
    kappa_lower: float
    pieces: Tuple[Tuple[float, Tuple[float, ...]], ...] = ()

    def __post_init__(self):
        values = tuple(float(x) for x in self.values)
        if not values:
            raise DomainError("gain vector is empty")
        pieces = tuple((float(t), tuple(float(x) for x in vals))
                       for t, vals in self.pieces)
        for vals in [values] + [vals for _, vals in pieces]:
            if len(vals) != len(values):
                raise DomainError("gain pieces disagree on the agent count")
            if any(not (math.isfinite(x) and x >= 0) for x in vals):
                raise DomainError("gains must be finite and nonnegative")
        starts = [t for t, _ in pieces]
        if any(not math.isfinite(t) for t in starts) or \
           any(b <= a for a, b in zip(starts[:-1], starts[1:])):
            raise DomainError("gain piece start times must increase")
        kappa = float(self.kappa_lower)
        if not (math.isfinite(kappa) and kappa > 0):
            raise DomainError("kappa_lower must be positive (P2)")
        object.__setattr__(self, 'values', values)
        object.__setattr__(self, 'pieces', pieces)
        object.__setattr__(self, 'kappa_lower', kappa)

    @property
    def n_agents(self):
        return len(self.values)

    def breakpoints(self):
        return tuple(t for t, _ in self.pieces)

    def gains_at(self, t: float) -> np.ndarray:
        current = self.values
        for start, vals in self.pieces:
            if start <= t + nii_gconf.time_eps:
                current = vals
            else:
                break
        return np.asarray(current, dtype=nii_dyconf.h_dtype)

    def all_values(self):
        return [self.values] + [vals for _, vals in self.pieces]


def f_gain_violations(gains: GainSchedule, S, n_agents: int):
    """ messages = f_gain_violations(gains, S, n_agents)
    P1 holds for any piecewise-constant schedule; P2 requires
    k_i >= kappa_lower on S and k_j = 0 outside S in every piece.
    Agent numbers in the messages are 1-based.
    """
    messages = []
    if gains.n_agents != n_agents:
        return ["gain vector has {:d} entries, expected {:d}".format(
            gains.n_agents, n_agents)]
    members = set(S)
    for vals in gains.all_values():
        for idx, k in enumerate(vals):
            if idx in members and k < gains.kappa_lower:
                messages.append(
                    "P2: k_{:d} = {:g} below kappa_lower = {:g}".format(
                        idx + 1, k, gains.kappa_lower))
            elif idx not in members and k != 0.0:
                messages.append(
                    "P2: k_{:d} = {:g} must be 0 outside the root set".format(
                        idx + 1, k))
    # unique, in first-seen order
    return list(dict.fromkeys(messages))


@dataclass(frozen=True)
class Scenario:
    schedule: SwitchingSchedule
    delta: float
    window_T: float
    x0: Tuple[float, ...]
    x_target: Tuple[float, ...]
    gains: GainSchedule
    horizon: float
    dt: float
    root_set: Optional[FrozenSet[int]] = None
    name: str = field(default='scenario', compare=False)

    def __post_init__(self):
        n = self.schedule.n_agents
        for key in ('delta', 'window_T', 'horizon', 'dt'):
            value = float(getattr(self, key))
            if not (math.isfinite(value) and value > 0):
                raise DomainError("{} must be positive".format(key))
            object.__setattr__(self, key, value)
        object.__setattr__(self, 'x0', f_state_vector(self.x0, n, 'x0'))
        object.__setattr__(self, 'x_target',
                           f_state_vector(self.x_target, n, 'x_target'))
        if self.gains.n_agents != n:
            raise DomainError("gains have {:d} entries, expected {:d}".format(
                self.gains.n_agents, n))
        limit = self.schedule.min_dwell * nii_dyconf.max_dt_per_dwell
        if self.dt > limit * (1 + nii_gconf.delta_arc_rtol):
            raise DomainError(
                "dt = {:g} exceeds half the shortest dwell ({:g})".format(
                    self.dt, limit))
        if self.root_set is not None:
            roots = frozenset(int(x) for x in self.root_set)
            if not roots or any(not 0 <= x < n for x in roots):
                raise DomainError("root_set must be a nonempty agent subset")
            object.__setattr__(self, 'root_set', roots)

    @property
    def n_agents(self) -> int:
        return self.schedule.n_agents

    @property
    def t_start(self) -> float:
        return self.schedule.t_start

    @property
    def t_end(self) -> float:
        return self.schedule.t_start + self.horizon

    def x0_array(self):
        return np.asarray(self.x0, dtype=nii_dyconf.h_dtype)

    def x_target_array(self):
        return np.asarray(self.x_target, dtype=nii_dyconf.h_dtype)

    def replace(self, **changes) -> "Scenario":
        """ Copy with some fields changed (invariants re-checked)
        """
        return dataclasses.replace(self, **changes)


if __name__ == "__main__":
    print("Definition of scenarios")
