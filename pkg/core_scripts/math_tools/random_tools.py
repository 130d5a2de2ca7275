#!/usr/bin/env python
"""
random_tools.py

Seeded random draws: initial states and signed test digraphs

All functions take a numpy Generator so that callers control the seed.
"""
from __future__ import absolute_import

import numpy as np

import core_scripts.dynamics.conf as nii_dyconf
from core_scripts.errors import DomainError
from core_scripts.graph_tools.signed_graph import (GraphSnapshot,
                                                   SwitchingSchedule)


def f_draw_initial_state(rng, n_agents, low=-20.0, high=20.0, min_abs=0.1):
    """ x0 = f_draw_initial_state(rng, n_agents, low, high, min_abs)

    Uniform draw in [low, high]^N. Entries with |x_i| < min_abs are drawn
    again (only those entries) until every entry passes.

    input
    -----
      rng: numpy.random.Generator
      n_agents: int
      low, high: range of the uniform draw
      min_abs: smallest accepted modulus

    output
    ------
      x0: np.array, (N,)
    """
    if not (high > low and min_abs >= 0) or \
       max(abs(low), abs(high)) <= min_abs:
        raise DomainError("no value in [{}, {}] has modulus >= {}".format(
            low, high, min_abs))
    x0 = rng.uniform(low, high, size=n_agents).astype(nii_dyconf.h_dtype)
    bad = np.abs(x0) < min_abs
    while np.any(bad):
        x0[bad] = rng.uniform(low, high, size=int(bad.sum()))
        bad = np.abs(x0) < min_abs
    return x0


def f_random_edges(rng, n_nodes, density=0.3, max_weight=1.0,
                   negative_prob=0.5):
    """ weights = f_random_edges(rng, n_nodes, density, ...)

    Random signed digraph without self-loops as a tuple of (i, j, a_ij)
    with a_ij != 0; an arc exists with probability density.
    """
    weights = []
    for i in range(n_nodes):
        for j in range(n_nodes):
            if i == j or rng.random() >= density:
                continue
            magnitude = rng.uniform(0.1, max_weight)
            sign = -1.0 if rng.random() < negative_prob else 1.0
            weights.append((i, j, sign * magnitude))
    return tuple(weights)


def f_random_snapshot(rng, n_nodes, density=0.3, max_weight=1.0,
                      negative_prob=0.5):
    """ snapshot = f_random_snapshot(rng, n_nodes, ...)
    """
    return GraphSnapshot(n_nodes, f_random_edges(
        rng, n_nodes, density, max_weight, negative_prob))


def f_balanced_snapshot(rng, n_nodes, part1, density=0.3, max_weight=1.0):
    """ snapshot = f_balanced_snapshot(rng, n_nodes, part1, ...)

    Random digraph whose arcs are positive inside {part1, rest} and
    negative across them, i.e., structurally balanced by construction.
    """
    members = set(part1)
    weights = []
    for i, j, w in f_random_edges(rng, n_nodes, density, max_weight, 0.0):
        same = (i in members) == (j in members)
        weights.append((i, j, w if same else -w))
    return GraphSnapshot(n_nodes, tuple(weights))


def f_random_schedule(rng, n_nodes, n_snapshots, density=0.3,
                      dwell_range=(1.0, 3.0), rotation='cyclic'):
    """ schedule = f_random_schedule(rng, n_nodes, n_snapshots, ...)
    """
    snapshots = tuple(f_random_snapshot(rng, n_nodes, density)
                      for _ in range(n_snapshots))
    dwells = tuple(float(x) for x in rng.uniform(
        dwell_range[0], dwell_range[1], size=n_snapshots))
    return SwitchingSchedule(snapshots, dwells, rotation)


if __name__ == "__main__":
    print("Tools for random draws")
