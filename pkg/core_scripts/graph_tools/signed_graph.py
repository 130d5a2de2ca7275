#!/usr/bin/env python
"""
signed_graph

Signed weighted digraph snapshots and piecewise-constant switching schedules.

Weight convention: entry (i, j) is a_ij, the influence of agent j on agent i
(information flows j -> i). Positive weights are cooperative, negative weights
antagonistic. Agent indices are 0-based inside the package.

Operations:
  adjacency_at, laplacian_at, delta_arc_integral, union_graph
"""
from __future__ import annotations

import bisect
import math
from collections import defaultdict
from dataclasses import dataclass, field
from functools import cached_property
from typing import Dict, FrozenSet, Iterable, Iterator, Tuple

import numpy as np

import core_scripts.graph_tools.conf as nii_gconf
from core_scripts.errors import DomainError


#############################################################
# snapshot
#

@dataclass(frozen=True)
class GraphSnapshot:
    """ One signed adjacency configuration a_ij

    weights is stored as a sorted tuple of (i, j, a_ij) with a_ij != 0;
    absent entries mean a_ij = 0.
    """
    n_agents: int
    weights: Tuple[Tuple[int, int, float], ...] = ()

    def __post_init__(self):
        if int(self.n_agents) < 2:
            raise DomainError("a graph needs at least 2 agents")
        seen = {}
        for entry in self.weights:
            i, j, w = int(entry[0]), int(entry[1]), float(entry[2])
            if not (0 <= i < self.n_agents and 0 <= j < self.n_agents):
                raise DomainError("arc ({:d}, {:d}) outside [0, {:d})".format(
                    i, j, self.n_agents))
            if i == j:
                raise DomainError("self-loop a_ii on agent {:d}".format(i))
            if not math.isfinite(w):
                raise DomainError("non-finite weight on ({:d}, {:d})".format(
                    i, j))
            if (i, j) in seen:
                raise DomainError("duplicated arc ({:d}, {:d})".format(i, j))
            seen[(i, j)] = w
        normed = tuple(sorted((i, j, w) for (i, j), w in seen.items()
                              if w != 0.0))
        object.__setattr__(self, 'n_agents', int(self.n_agents))
        object.__setattr__(self, 'weights', normed)

    @classmethod
    def from_matrix(cls, matrix):
        """ GraphSnapshot.from_matrix(A) with A[i, j] = a_ij
        """
        mat = np.asarray(matrix, dtype=np.float64)
        if mat.ndim != 2 or mat.shape[0] != mat.shape[1]:
            raise DomainError("adjacency matrix must be square")
        rows, cols = np.nonzero(mat)
        return cls(mat.shape[0], tuple(
            (int(i), int(j), float(mat[i, j])) for i, j in zip(rows, cols)))

    @cached_property
    def matrix(self) -> np.ndarray:
        """ Dense read-only adjacency matrix A with A[i, j] = a_ij
        """
        mat = np.zeros([self.n_agents, self.n_agents], dtype=np.float64)
        for i, j, w in self.weights:
            mat[i, j] = w
        mat.setflags(write=False)
        return mat

    @cached_property
    def laplacian(self) -> np.ndarray:
        """ Signed Laplacian, [L]_ii = sum_k |a_ik|, [L]_ij = -a_ij
        """
        lap = -self.matrix.copy()
        lap[np.diag_indices(self.n_agents)] = np.abs(self.matrix).sum(axis=1)
        lap.setflags(write=False)
        return lap

    def weight(self, i: int, j: int) -> float:
        return float(self.matrix[i, j])

    @property
    def max_abs_weight(self) -> float:
        if not self.weights:
            return 0.0
        return max(abs(w) for _, _, w in self.weights)


#############################################################
# schedule
#

@dataclass(frozen=True)
class SwitchingSchedule:
    """ Piecewise-constant map from time to snapshots

    Pass p activates the snapshots in order
      cyclic:           0, 1, ..., m-1
      rotating-cyclic:  p mod m, p+1 mod m, ..., p+m-1 mod m
    and snapshot k always stays active for dwell_times[k] seconds.
    """
    snapshots: Tuple[GraphSnapshot, ...]
    dwell_times: Tuple[float, ...]
    rotation: str = nii_gconf.ROTATION_CYCLIC
    t_start: float = 0.0

    def __post_init__(self):
        snaps = tuple(self.snapshots)
        dwells = tuple(float(x) for x in self.dwell_times)
        if not snaps:
            raise DomainError("schedule needs at least one snapshot")
        if len(dwells) != len(snaps):
            raise DomainError("one dwell time per snapshot is required")
        if any(s.n_agents != snaps[0].n_agents for s in snaps):
            raise DomainError("snapshots disagree on the number of agents")
        if any(not (math.isfinite(x) and x > 0) for x in dwells):
            raise DomainError("dwell times must be positive and finite")
        if self.rotation not in (nii_gconf.ROTATION_CYCLIC,
                                 nii_gconf.ROTATION_ROTATING):
            raise DomainError("unknown rotation '{}'".format(self.rotation))
        if not math.isfinite(float(self.t_start)):
            raise DomainError("t_start must be finite")
        object.__setattr__(self, 'snapshots', snaps)
        object.__setattr__(self, 'dwell_times', dwells)
        object.__setattr__(self, 't_start', float(self.t_start))

    @property
    def n_agents(self) -> int:
        return self.snapshots[0].n_agents

    @property
    def n_snapshots(self) -> int:
        return len(self.snapshots)

    @property
    def pass_duration(self) -> float:
        return float(sum(self.dwell_times))

    @property
    def period(self) -> float:
        """ P, after which the activation pattern repeats
        """
        if self.rotation == nii_gconf.ROTATION_ROTATING:
            return self.n_snapshots * self.pass_duration
        return self.pass_duration

    @property
    def min_dwell(self) -> float:
        return min(self.dwell_times)

    @cached_property
    def max_abs_weight(self) -> float:
        """ M0: max |a_ij| over all snapshots and entries
        """
        return max(s.max_abs_weight for s in self.snapshots)

    def pass_order(self, pass_idx: int) -> Tuple[int, ...]:
        m = self.n_snapshots
        if self.rotation == nii_gconf.ROTATION_ROTATING:
            shift = pass_idx % m
            return tuple((shift + q) % m for q in range(m))
        return tuple(range(m))

    @cached_property
    def _offsets(self) -> Dict[int, Tuple[float, ...]]:
        # cumulative segment starts within a pass, one entry per rotation
        shifts = range(self.n_snapshots) \
            if self.rotation == nii_gconf.ROTATION_ROTATING else [0]
        out = {}
        for shift in shifts:
            order = self.pass_order(shift)
            out[shift] = tuple(np.concatenate(
                [[0.0], np.cumsum([self.dwell_times[k] for k in order])]))
        return out

    def _pass_offsets(self, pass_idx):
        if self.rotation == nii_gconf.ROTATION_ROTATING:
            return self._offsets[pass_idx % self.n_snapshots]
        return self._offsets[0]

    def _locate(self, t):
        """ (pass index, position in pass) of the segment active at t
        """
        duration = self.pass_duration
        rel = t - self.t_start
        pass_idx = int(math.floor(rel / duration))
        tau = rel - pass_idx * duration
        if duration - tau <= nii_gconf.time_eps:
            pass_idx += 1
            tau = 0.0
        offsets = self._pass_offsets(pass_idx)
        pos = bisect.bisect_right(offsets, tau + nii_gconf.time_eps) - 1
        pos = min(max(pos, 0), self.n_snapshots - 1)
        return pass_idx, pos

    def _raw_segments(self, t1, t2) -> Iterator[Tuple[float, float, int]]:
        """ Unclipped (start, end, snapshot index) of segments meeting [t1, t2)
        """
        duration = self.pass_duration
        pass_idx, pos = self._locate(t1)
        while True:
            offsets = self._pass_offsets(pass_idx)
            base = self.t_start + pass_idx * duration
            start = base + offsets[pos]
            if start >= t2 - nii_gconf.time_eps:
                return
            end = base + offsets[pos + 1]
            yield start, end, self.pass_order(pass_idx)[pos]
            pos += 1
            if pos == self.n_snapshots:
                pass_idx += 1
                pos = 0

    def segments(self, t1: float,
                 t2: float) -> Iterator[Tuple[float, float, int]]:
        """ (a, b, snapshot index) pieces covering [t1, t2) exactly
        """
        self._check_time(t1)
        for start, end, idx in self._raw_segments(t1, t2):
            a, b = max(start, t1), min(end, t2)
            if b > a:
                yield a, b, idx

    def switch_instants(self, t1: float, t2: float) -> np.ndarray:
        """ Segment starts s with t1 <= s <= t2 (t_start counts as one)
        """
        self._check_time(t1)
        eps = nii_gconf.time_eps
        out = [s for s, _, _ in self._raw_segments(t1, t2 + 2 * eps)
               if t1 - eps <= s <= t2 + eps]
        return np.asarray(out, dtype=np.float64)

    def snapshot_index_at(self, t: float) -> int:
        self._check_time(t)
        pass_idx, pos = self._locate(t)
        return self.pass_order(pass_idx)[pos]

    def _check_time(self, t):
        if not math.isfinite(t) or t < self.t_start - nii_gconf.time_eps:
            raise DomainError("time {} precedes the schedule origin {}".format(
                t, self.t_start))


#############################################################
# union graph
#

@dataclass(frozen=True)
class UnionGraph:
    """ delta-arcs of the schedule over [t1, t2)

    arcs holds weight indices (i, j) of a_ij; flow_edges() turns them into
    directed information-flow edges j -> i.
    """
    n_agents: int
    interval: Tuple[float, float]
    arcs: FrozenSet[Tuple[int, int]]
    arc_signs: Dict[Tuple[int, int], FrozenSet[int]] = field(
        default_factory=dict, compare=False)

    def flow_edges(self):
        return sorted((j, i) for i, j in self.arcs)


#############################################################
# operations
#

def adjacency_at(schedule: SwitchingSchedule, t: float) -> GraphSnapshot:
    """ snapshot = adjacency_at(schedule, t)
    Snapshot active at t; right-continuous at switch instants
    """
    return schedule.snapshots[schedule.snapshot_index_at(t)]

def laplacian_at(schedule: SwitchingSchedule, t: float) -> np.ndarray:
    """ L = laplacian_at(schedule, t)
    Signed Laplacian of the snapshot active at t (a writable copy)
    """
    return np.array(adjacency_at(schedule, t).laplacian)

def _check_interval(t1, t2):
    if not (math.isfinite(t1) and math.isfinite(t2)) or not t1 < t2:
        raise DomainError("interval [{}, {}) is empty or reversed".format(
            t1, t2))

def delta_arc_integral(schedule: SwitchingSchedule, i: int, j: int,
                       t1: float, t2: float) -> float:
    """ value = delta_arc_integral(schedule, i, j, t1, t2)
    Exact integral of |a_ij(t)| over [t1, t2) as a segment sum
    """
    _check_interval(t1, t2)
    n = schedule.n_agents
    if not (0 <= i < n and 0 <= j < n):
        raise DomainError("arc ({}, {}) outside [0, {})".format(i, j, n))
    total = 0.0
    for a, b, idx in schedule.segments(t1, t2):
        w = schedule.snapshots[idx].weight(i, j)
        if w != 0.0:
            total += abs(w) * (b - a)
    return total

def _accumulate_arcs(schedule, t1, t2):
    totals = defaultdict(float)
    signs = defaultdict(set)
    for a, b, idx in schedule.segments(t1, t2):
        for i, j, w in schedule.snapshots[idx].weights:
            totals[(i, j)] += abs(w) * (b - a)
            signs[(i, j)].add(1 if w > 0 else -1)
    return totals, signs

def union_graph(schedule: SwitchingSchedule, delta: float,
                t1: float, t2: float) -> UnionGraph:
    """ ug = union_graph(schedule, delta, t1, t2)
    Union of all delta-arcs over [t1, t2): arc (i, j) is kept iff
    integral |a_ij| >= delta * (t2 - t1)
    """
    if not (math.isfinite(delta) and delta > 0):
        raise DomainError("delta must be positive")
    _check_interval(t1, t2)
    totals, signs = _accumulate_arcs(schedule, t1, t2)
    threshold = delta * (t2 - t1) * (1.0 - nii_gconf.delta_arc_rtol)
    arcs = frozenset(arc for arc, value in totals.items()
                     if value >= threshold)
    return UnionGraph(schedule.n_agents, (t1, t2), arcs,
                      {arc: frozenset(signs[arc]) for arc in arcs})

if __name__ == "__main__":
    print("Definition of signed switching graphs")
