"""
Shared fixtures: bundled scenarios, small schedule builders and a seeded
numpy Generator.
"""
import os

import numpy as np
import pytest

from core_scripts.cert_manager.cert_manager import certify
from core_scripts.data_io.scenario_io import parse_scenario
from core_scripts.dynamics.scenario import GainSchedule, Scenario
from core_scripts.graph_tools.signed_graph import (GraphSnapshot,
                                                   SwitchingSchedule)
from core_scripts.startup_config import set_random_seed

REPO_ROOT = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
SCENARIO_8 = os.path.join(REPO_ROOT, 'scenario_config_8agents.yaml')
SCENARIO_2 = os.path.join(REPO_ROOT, 'scenario_config_2agents.yaml')

# 0-based root set and bipartition of the bundled eight-agent scenario
ROOTS_8 = frozenset({0, 1, 2})
PART1_8 = frozenset({0})
PART2_8 = frozenset({1, 2})
TARGET_8 = (0.0, 0.0, 10.0, 0.0, -10.0, -10.0, 10.0, -10.0)


def two_agent_scenario(a=2.0, k=0.5, x0=(1.0, 2.0), x_target=(1.0, -1.0),
                       horizon=5.0, dt=1e-3, dwell=1.0):
    """ Agent 2 isolated, agent 1 listens to it with a_12 = a; root {2}
    """
    snapshot = GraphSnapshot(2, ((0, 1, a),))
    schedule = SwitchingSchedule((snapshot,), (dwell,))
    gains = GainSchedule((0.0, k), k)
    return Scenario(schedule, 0.1, dwell, x0, x_target, gains, horizon, dt,
                    frozenset({1}), 'two-agent')


def two_agent_open(t, a=2.0, x0=(1.0, 2.0)):
    """ Closed-form open-loop state for a > 0
    """
    t = np.asarray(t, dtype=np.float64)
    x2 = np.full_like(t, x0[1])
    x1 = x0[1] + (x0[0] - x0[1]) * np.exp(-a * t)
    return np.stack([x1, x2], axis=-1)


def two_agent_closed_error(t, a=2.0, k=0.5, e0=(0.0, 3.0)):
    """ Closed-form e = x - x_d under the targeted law for a > 0, a != k
    """
    t = np.asarray(t, dtype=np.float64)
    e2 = e0[1] * np.exp(-k * t)
    e1 = e0[0] * np.exp(-a * t) \
        + a * e0[1] * (np.exp(-k * t) - np.exp(-a * t)) / (a - k)
    return np.stack([e1, e2], axis=-1)


def single_snapshot_scenario(weights, n, x0, gains, kappa_lower, roots=None,
                             horizon=10.0, dt=1e-3, delta=0.1, window=1.0,
                             x_target=None):
    snapshot = GraphSnapshot(n, tuple(weights))
    schedule = SwitchingSchedule((snapshot,), (window,))
    x_target = (0.0,) * n if x_target is None else x_target
    return Scenario(schedule, delta, window, x0, x_target,
                    GainSchedule(gains, kappa_lower), horizon, dt,
                    None if roots is None else frozenset(roots))


@pytest.fixture(scope='session')
def scenario_8():
    return parse_scenario(SCENARIO_8)


@pytest.fixture(scope='session')
def scenario_2():
    return parse_scenario(SCENARIO_2)


@pytest.fixture(scope='session')
def certificate_8(scenario_8):
    """ Certification of the bundled scenario, computed once
    """
    return certify(scenario_8)


@pytest.fixture
def rng():
    return set_random_seed(20240607)
