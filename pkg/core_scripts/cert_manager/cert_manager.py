#!/usr/bin/env python
"""
cert_manager

Structural analysis and certification of a scenario.

f_structural_stage collects connectivity, root set, persistent balance,
gain conditions and path lengths. certify runs the structural stage,
computes the theorem constants, integrates open and closed loop and
evaluates every inequality check.
"""
from __future__ import absolute_import

from dataclasses import dataclass, field
from typing import FrozenSet, Optional, Tuple

import numpy as np

import core_scripts.cert_manager.cert_manager_tools as nii_cert_tools
from core_scripts.cert_manager.cert_manager_conf import CheckName
from core_scripts.cert_manager.theorem_constants import (TheoremConstants,
                                                         compute_constants)
from core_scripts.config_parse.config_parse import RunOptions
from core_scripts.dynamics.integrator import Trajectory, integrate
from core_scripts.dynamics.scenario import f_gain_violations
from core_scripts.errors import (CapacityError, InconsistencyError,
                                 PreconditionError)
from core_scripts.graph_tools.balance import (BalanceVerdict,
                                              check_persistent_balance)
from core_scripts.graph_tools.connectivity import (
    ConnectivityVerdict, check_uniform_qs_connectivity)
from core_scripts.graph_tools.scc import (boundary_roots, graph_longest_path,
                                          longest_path_from_roots)
from core_scripts.graph_tools.signed_graph import union_graph
from core_scripts.other_tools.str_tools import f_node_set_str


@dataclass(frozen=True)
class StructuralReport:
    """ Structural part of a certificate

    root_set:      root set used downstream (detected, or declared when
                   detection is impossible); None if neither exists
    detected_root: fixed root set found by the window check
    failures:      human-readable reasons; empty when all checks hold
    """
    connectivity: ConnectivityVerdict
    declared_root: Optional[FrozenSet[int]]
    detected_root: Optional[FrozenSet[int]]
    root_set: Optional[FrozenSet[int]]
    balance: Optional[BalanceVerdict]
    gain_violations: Tuple[str, ...]
    d0: Optional[int]
    d_max: Optional[int]
    boundary_roots: Optional[FrozenSet[int]]
    M0: float
    period: float
    failures: Tuple[str, ...]

    @property
    def passed(self):
        return not self.failures


@dataclass(frozen=True)
class CertificationReport:
    structural: StructuralReport
    constants: Optional[TheoremConstants]
    inequalities: Tuple[nii_cert_tools.InequalityReport, ...]
    final_error: Optional[float]
    polarization: Optional[nii_cert_tools.PolarizationSummary]
    convergence_verdict: bool
    reasons: Tuple[str, ...]
    final_threshold: float
    constants_failure: Optional[str] = None
    constants_chi1: Optional[TheoremConstants] = None
    open_trajectory: Optional[Trajectory] = field(
        default=None, compare=False, repr=False)
    closed_trajectory: Optional[Trajectory] = field(
        default=None, compare=False, repr=False)

    @property
    def passed(self):
        return self.convergence_verdict


#############################################################
# structural stage
#

def f_structural_stage(scenario, options: RunOptions = RunOptions()):
    """ report = f_structural_stage(scenario, options)
    """
    schedule = scenario.schedule
    n = scenario.n_agents
    failures = []

    connectivity = check_uniform_qs_connectivity(
        schedule, scenario.delta, scenario.window_T, options.grid_per_dwell)
    if not connectivity.holds:
        failures.append(
            "not uniformly quasi-strongly connected: window at t = {:.6g} "
            "has no root".format(connectivity.fails_at))
    elif not connectivity.fixed_root:
        failures.append("root set changes across windows")
    detected = connectivity.root_set

    declared = scenario.root_set
    if declared is not None and detected is not None and declared != detected:
        failures.append("declared root set {} differs from detected {}".format(
            f_node_set_str(declared), f_node_set_str(detected)))
    roots = detected if detected is not None else declared

    balance = None
    gain_messages = ()
    d0 = d_max = v0 = None
    if roots is not None:
        balance = check_persistent_balance(schedule, scenario.delta, roots)
        if not balance.balanced:
            i, j, sign = balance.conflict
            failures.append(
                "root set not persistently balanced: arc a_{:d},{:d} of sign "
                "{:+d} closes an odd cycle".format(i + 1, j + 1, sign))
        gain_messages = tuple(f_gain_violations(scenario.gains, roots, n))
        failures.extend(gain_messages)

        full = union_graph(schedule, scenario.delta, schedule.t_start,
                           schedule.t_start + schedule.period)
        edges = full.flow_edges()
        try:
            d0 = longest_path_from_roots(edges, roots, n,
                                         options.path_node_cap)
            d_max = graph_longest_path(edges, n, options.path_node_cap)
        except (PreconditionError, CapacityError) as err:
            failures.append("d0: {}".format(err))
        v0 = boundary_roots(edges, roots)
    else:
        failures.append("no root set available")

    return StructuralReport(connectivity, declared, detected, roots, balance,
                            gain_messages, d0, d_max, v0,
                            schedule.max_abs_weight, schedule.period,
                            tuple(failures))


def f_constants_stage(scenario, structural,
                      options: RunOptions = RunOptions()):
    """ constants, failure = f_constants_stage(scenario, structural, options)
    """
    if structural.root_set is None or structural.d0 is None:
        return None, None
    try:
        constants = compute_constants(scenario, structural.root_set,
                                      structural.d0, options.chi)
    except InconsistencyError as err:
        return None, str(err)
    bad = constants.interval_violations()
    if bad:
        return constants, "constants outside their intervals: " + \
            ", ".join(bad)
    return constants, None


#############################################################
# certification
#

def _window_instants(scenario, constants):
    if constants is None or constants.K0 <= 0:
        return ()
    n_win = int(np.floor(scenario.horizon / constants.K0 + 1e-9))
    return tuple(scenario.t_start + s * constants.K0
                 for s in range(1, n_win + 1))


def _run_checks(scenario, constants, open_traj, closed_traj, options):
    reports = [
        nii_cert_tools.check_dini_h(open_traj, constants,
                                    options.dini_factor),
        nii_cert_tools.check_dini_c(open_traj, False, constants,
                                    options.tol_rel),
        nii_cert_tools.check_dini_c(closed_traj, True, constants,
                                    options.tol_rel)]
    K0 = constants.K0
    if K0 > 0 and scenario.horizon >= 2 * K0 * (1 - 1e-9):
        reports.append(nii_cert_tools.check_window_bounds(
            open_traj, constants, K0, options.tol_win))
        reports.append(nii_cert_tools.check_window_bounds(
            closed_traj, constants, K0, options.tol_win))
    else:
        for name in (CheckName.window_open, CheckName.window_closed):
            status = nii_cert_tools.STATUS_NOT_APPLICABLE if K0 <= 0 \
                else nii_cert_tools.STATUS_INSUFFICIENT
            reports.append(nii_cert_tools.f_skipped_report(
                name, status, "horizon shorter than 2 K0"))
    reports.append(nii_cert_tools.check_contraction(
        closed_traj, constants, options.tol_rel, CheckName.contraction))
    if constants.applicable:
        reports.append(nii_cert_tools.check_contraction(
            closed_traj, constants.with_chi(1.0), options.tol_rel,
            CheckName.contraction_chi1))
    reports.append(nii_cert_tools.check_abs_identity(
        open_traj, scenario, options.residual_tol))
    reports.append(nii_cert_tools.check_abs_identity(
        closed_traj, scenario, options.residual_tol))
    return tuple(reports)


def certify(scenario, options: RunOptions = RunOptions()):
    """ report = certify(scenario, options)

    input
    -----
      scenario: Scenario
      options:  RunOptions

    output
    ------
      report:   CertificationReport; trajectories are attached for output

    IntegrationDivergedError propagates to the caller.
    """
    reasons = []
    structural = f_structural_stage(scenario, options)
    reasons.extend(structural.failures)

    constants, failure = f_constants_stage(scenario, structural, options)
    if failure:
        reasons.append(failure)

    roots = structural.root_set
    open_traj = closed_traj = None
    final_error = polarization = None
    inequalities = ()
    if roots is not None:
        extra = _window_instants(scenario, constants)
        open_traj = integrate(scenario, False, root_set=roots,
                              verbose=options.verbose, extra_events=extra)
        closed_traj = integrate(scenario, True, root_set=roots,
                                verbose=options.verbose, extra_events=extra)
        final_error = float(np.max(np.abs(closed_traj.errors[-1])))
        if structural.balance is not None and structural.balance.balanced:
            polarization = nii_cert_tools.polarization_summary(
                open_traj, structural.balance.bipartition)
        if structural.passed and constants is not None and not failure:
            inequalities = _run_checks(scenario, constants, open_traj,
                                       closed_traj, options)

    for report in inequalities:
        if not report.passed:
            if report.violations:
                reasons.append("{}: {:d} violations".format(
                    report.name, report.violations))
            else:
                reasons.append("{}: {}".format(report.name, report.note))
    if final_error is None:
        reasons.append("no trajectory was integrated")
    elif final_error > options.final_threshold:
        reasons.append("final error {:.3g} above threshold {:.3g}".format(
            final_error, options.final_threshold))

    return CertificationReport(
        structural, constants, inequalities, final_error, polarization,
        not reasons, tuple(reasons), options.final_threshold, failure,
        None if constants is None or not constants.applicable
        else constants.with_chi(1.0),
        open_traj, closed_traj)


def f_verdict_kind(report):
    """ 'pass', 'structural' or 'inequality'
    """
    if report.convergence_verdict:
        return 'pass'
    if not report.structural.passed or report.constants_failure:
        return 'structural'
    return 'inequality'


if __name__ == "__main__":
    print("Certification manager")
