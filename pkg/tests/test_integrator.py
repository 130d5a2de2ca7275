import numpy as np
import pytest

from core_scripts.dynamics.control_law import (ConstantInput, OpenLoop,
                                               TargetedControl,
                                               control_input,
                                               state_derivative)
from core_scripts.dynamics.integrator import (f_build_grid,
                                              f_resolve_root_set,
                                              f_rk4_step_operator, integrate)
from core_scripts.dynamics.scenario import GainSchedule
from core_scripts.errors import (IntegrationDivergedError,
                                 RootSetMismatchError, StructuralError)
from core_scripts.graph_tools.signed_graph import (GraphSnapshot,
                                                   SwitchingSchedule)
from tests.conftest import (ROOTS_8, single_snapshot_scenario,
                            two_agent_closed_error, two_agent_open,
                            two_agent_scenario)


class TestGrid:
    def test_switches_are_grid_points(self, scenario_8):
        short = scenario_8.replace(horizon=20.0, dt=0.3)
        times, bounds, mask = f_build_grid(short)
        for s in short.schedule.switch_instants(0.0, 20.0):
            idx = np.argmin(np.abs(times - s))
            assert times[idx] == pytest.approx(s, abs=1e-12)
            assert mask[idx]
        assert times[0] == 0.0
        assert times[-1] == 20.0
        assert np.all(np.diff(times) > 0)
        assert np.max(np.diff(times)) <= 0.3 + 1e-12
        # every segment lies inside one snapshot
        for lo, hi in bounds:
            mid = 0.5 * (times[lo] + times[hi])
            idx = short.schedule.snapshot_index_at(times[lo])
            assert short.schedule.snapshot_index_at(mid) == idx

    def test_extra_events(self, scenario_2):
        times, _, mask = f_build_grid(scenario_2, extra_events=(0.12345,))
        idx = int(np.argmin(np.abs(times - 0.12345)))
        assert times[idx] == 0.12345
        assert mask[idx]


class TestStepOperator:
    def test_matches_rk4_stages(self, rng):
        amat = rng.normal(size=(4, 4))
        bvec = rng.normal(size=4)
        x = rng.normal(size=4)
        h = 0.05
        f = lambda v: amat @ v + bvec
        k1 = f(x)
        k2 = f(x + h / 2 * k1)
        k3 = f(x + h / 2 * k2)
        k4 = f(x + h * k3)
        expected = x + h / 6 * (k1 + 2 * k2 + 2 * k3 + k4)
        phi, psi = f_rk4_step_operator(amat, bvec, h)
        np.testing.assert_allclose(phi @ x + psi, expected, rtol=1e-13)


class TestLaws:
    def test_state_derivative_summation_form(self):
        snap = GraphSnapshot(3, ((0, 1, -2.0), (2, 0, 1.0)))
        x = np.array([1.0, 3.0, -1.0])
        xdot = state_derivative(snap, x)
        np.testing.assert_allclose(xdot, [2.0 * (-3.0 - 1.0), 0.0, 2.0])
        np.testing.assert_allclose(xdot, -snap.laplacian @ x)

    def test_control_input(self, scenario_8):
        x = np.arange(8.0)
        x_d = scenario_8.x_target_array()
        u = control_input(scenario_8.schedule, scenario_8.gains, x, x_d, 0.5)
        lap = scenario_8.schedule.snapshots[0].laplacian
        expected = lap @ x_d - scenario_8.gains.gains_at(0.5) * (x - x_d)
        np.testing.assert_allclose(u, expected)

    def test_feedback_matches_control(self, scenario_8):
        law = TargetedControl()
        lap = scenario_8.schedule.snapshots[2].laplacian
        gains = scenario_8.gains.values
        origin = scenario_8.x_target_array()
        x = np.linspace(-3, 3, 8)
        fmat, gvec = law.feedback(lap, np.asarray(gains), origin)
        np.testing.assert_allclose(
            fmat @ x + gvec,
            law.control(lap, np.asarray(gains), (x - origin)[None], origin)[0])


class TestIntegrate:
    def test_two_agent_open_closed_form(self, scenario_2):
        traj = integrate(scenario_2, closed_loop=False)
        expected = two_agent_open(traj.times)
        np.testing.assert_allclose(traj.states, expected, atol=1e-8)
        assert traj.root_set == frozenset({1})
        np.testing.assert_array_equal(traj.controls, 0.0)

    def test_two_agent_closed_form(self, scenario_2):
        traj = integrate(scenario_2, closed_loop=True)
        expected = two_agent_closed_error(traj.times)
        np.testing.assert_allclose(traj.errors, expected, atol=1e-8)
        np.testing.assert_allclose(traj.states,
                                   expected + scenario_2.x_target_array(),
                                   atol=1e-8)

    def test_closed_loop_controls(self, scenario_2):
        traj = integrate(scenario_2, closed_loop=True)
        lap = scenario_2.schedule.snapshots[0].laplacian
        gains = scenario_2.gains.gains_at(0.0)
        x_d = scenario_2.x_target_array()
        k = traj.n_points // 2
        expected = lap @ x_d - gains * (traj.states[k] - x_d)
        np.testing.assert_allclose(traj.controls[k], expected, atol=1e-12)

    def test_monitors_follow_root_set(self, scenario_2):
        traj = integrate(scenario_2, closed_loop=False)
        np.testing.assert_allclose(traj.c, np.abs(traj.states[:, 1]))
        np.testing.assert_allclose(traj.h, np.abs(traj.states[:, 0]))
        np.testing.assert_allclose(
            traj.h_e, np.abs(traj.states[:, 0] - scenario_2.x_target[0]))

    def test_outputs_are_read_only(self, scenario_2):
        traj = integrate(scenario_2)
        with pytest.raises(ValueError):
            traj.states[0, 0] = 1.0

    def test_deterministic(self, scenario_8):
        short = scenario_8.replace(horizon=12.0)
        first = integrate(short, True)
        second = integrate(short, True)
        np.testing.assert_array_equal(first.states, second.states)

    def test_gain_pieces_add_events(self):
        base = two_agent_scenario(horizon=3.0)
        gains = GainSchedule((0.0, 0.5), 0.5, ((1.5, (0.0, 1.0)),))
        scenario = base.replace(gains=gains)
        traj = integrate(scenario, True)
        idx = traj.index_at(1.5)
        assert traj.times[idx] == 1.5
        assert traj.event_mask[idx]
        e2 = 3.0 * np.exp(-0.5 * 1.5) * np.exp(-1.0 * 1.5)
        assert traj.errors[-1, 1] == pytest.approx(e2, rel=1e-9)

    def test_superposition_with_constant_input(self, scenario_8):
        short = scenario_8.replace(horizon=15.0)
        w = np.linspace(-1.0, 1.0, 8)
        zero_start = short.replace(x0=(0.0,) * 8)
        free = integrate(short, law=OpenLoop(), root_set=ROOTS_8)
        forced = integrate(zero_start, law=ConstantInput(w), root_set=ROOTS_8)
        both = integrate(short, law=ConstantInput(w), root_set=ROOTS_8)
        np.testing.assert_allclose(both.states, free.states + forced.states,
                                   atol=1e-9)
        np.testing.assert_allclose(both.controls[-1], w)

    def test_divergence_reports_partial_trajectory(self):
        # a step of 0.5 on a rate of 1e6 is far outside RK4 stability
        scenario = single_snapshot_scenario(
            ((1, 0, 1e6),), 2, (1.0, -1.0), (1.0, 0.0), 1.0, roots={0},
            horizon=200.0, dt=0.5, window=1.0)
        with pytest.raises(IntegrationDivergedError) as info:
            integrate(scenario)
        err = info.value
        assert err.partial is not None
        assert not err.partial.complete
        assert err.partial.times[-1] == err.last_valid_time
        assert np.all(np.isfinite(err.partial.states))


class TestRootSet:
    def test_detected(self, scenario_8):
        assert f_resolve_root_set(scenario_8.replace(root_set=None)) == \
            ROOTS_8

    def test_mismatch(self, scenario_8):
        with pytest.raises(RootSetMismatchError):
            f_resolve_root_set(scenario_8.replace(root_set=frozenset({0})))

    def test_no_fixed_root(self):
        snap = GraphSnapshot(3, ((2, 0, 1.0),))
        scenario = single_snapshot_scenario(
            snap.weights, 3, (1.0, 2.0, 3.0), (0.0, 0.0, 0.0), 1.0)
        with pytest.raises(StructuralError):
            integrate(scenario)
