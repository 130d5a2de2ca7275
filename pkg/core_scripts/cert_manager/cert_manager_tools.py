#!/usr/bin/env python
"""
cert_manager_tools

Numerical checks of the convergence inequalities on integrated
trajectories. Every check returns an InequalityReport; tolerances only
relax the proven direction of an inequality.
"""
from __future__ import absolute_import

import math
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

import core_scripts.cert_manager.cert_manager_conf as nii_cconf
import core_scripts.math_tools.stats as nii_stats
from core_scripts.cert_manager.cert_manager_conf import CheckName
from core_scripts.dynamics.residuals import (abs_dynamics_residual,
                                             abs_error_dynamics_residual)
from core_scripts.errors import DomainError, MisuseError
from core_scripts.graph_tools.signed_graph import adjacency_at

# report status
STATUS_CHECKED = 'checked'
STATUS_NOT_APPLICABLE = 'not-applicable'
STATUS_INSUFFICIENT = 'insufficient-horizon'


@dataclass(frozen=True)
class InequalityReport:
    """ Outcome of one inequality check

    worst_margin is min(bound - value) over the samples, negative when the
    inequality is exceeded somewhere; tolerance_used describes the slack.
    """
    name: str
    samples_checked: int
    violations: int
    worst_margin: Optional[float]
    tolerance_used: float
    status: str = STATUS_CHECKED
    note: str = ''
    extra: dict = field(default_factory=dict)

    @property
    def passed(self):
        return self.status != STATUS_INSUFFICIENT and self.violations == 0


def _report(name, stats, tolerance, note='', **extra):
    count, violations, worst = stats
    return InequalityReport(name, count, violations, worst, float(tolerance),
                            STATUS_CHECKED, note, extra)


def f_skipped_report(name, status, note):
    return InequalityReport(name, 0, 0, None, 0.0, status, note)


def _smooth_steps(traj):
    """ Step indices k whose interval [t_k, t_k+1] touches no event
    """
    mask = ~(traj.event_mask[:-1] | traj.event_mask[1:])
    return np.flatnonzero(mask)


def _horizon(traj):
    return float(traj.times[-1] - traj.times[0])


def _window_count(traj, K0):
    return int(math.floor(_horizon(traj) / K0 + 1e-9))


#############################################################
# first-order (Dini) inequalities
#

def check_dini_h(traj, constants,
                 dini_factor=nii_cconf.default_dini_factor):
    """ report = check_dini_h(traj, constants, dini_factor)
    (h(t+dt) - h(t)) / dt <= M_s (c(t) - h(t)) + tol_dini away from events,
    tol_dini = dini_factor * dt * (M0 N)^2 * max|x(t_start)|
    """
    if traj.closed_loop:
        raise MisuseError("the h inequality holds only without control")
    if not traj.monitor.has_receivers:
        return f_skipped_report(CheckName.dini_h, STATUS_NOT_APPLICABLE,
                                "receiver set is empty")
    scale = float(np.max(np.abs(traj.states[0])))
    tol = dini_factor * traj.dt * (constants.M0 * constants.N) ** 2 * scale
    steps = _smooth_steps(traj)
    h, c, t = traj.h, traj.c, traj.times
    quotient = (h[steps + 1] - h[steps]) / (t[steps + 1] - t[steps])
    bound = constants.M_s * (c[steps] - h[steps])
    return _report(CheckName.dini_h,
                   nii_stats.f_margin_stats(bound, quotient, tol), tol)


def check_dini_c(traj, closed_loop, constants,
                 tol_rel=nii_cconf.default_tol_rel):
    """ report = check_dini_c(traj, closed_loop, constants, tol_rel)

    open loop:   c(t_k+1) <= c(t_k) (1 + tol_rel)
    closed loop: c_e(t_k+1) <= c_e(t_k) exp(-kappa (t_k+1 - t_k)) (1 + tol_rel)
                 and c_e(t) <= c_e(t_start) exp(-kappa (t - t_start))
                 (1 + tol_rel) at every sample
    """
    if bool(closed_loop) != traj.closed_loop:
        raise MisuseError("closed_loop flag does not match the trajectory")
    t = traj.times
    if not closed_loop:
        c = traj.c
        stats = nii_stats.f_margin_stats(c[:-1], c[1:], tol_rel * c[:-1])
        return _report(CheckName.dini_c, stats, tol_rel)
    kappa = constants.kappa_lower
    ce = traj.c_e
    step_bound = ce[:-1] * np.exp(-kappa * np.diff(t))
    envelope = ce[0] * np.exp(-kappa * (t - t[0]))
    stats = nii_stats.f_merge_stats(
        nii_stats.f_margin_stats(step_bound, ce[1:], tol_rel * step_bound),
        nii_stats.f_margin_stats(envelope, ce, tol_rel * envelope))
    return _report(CheckName.dini_c_e, stats, tol_rel)


#############################################################
# window inequalities
#

def check_window_bounds(traj, constants, K0,
                        tol_win=nii_cconf.default_tol_win):
    """ report = check_window_bounds(traj, constants, K0, tol_win)

    For every full window [t0 + s K0, t0 + (s+1) K0]:
      c(t) <= c(t0 + s K0)
      h(t) <= h(t0 + s K0) + c(t0 + s K0)
    on x in open loop and on e = x - x_d in closed loop. The tolerance is
    tol_win times the bound.
    """
    name = CheckName.window_closed if traj.closed_loop \
        else CheckName.window_open
    if K0 <= 0:
        return f_skipped_report(name, STATUS_NOT_APPLICABLE, "K0 is zero")
    if _horizon(traj) < 2 * K0 * (1 - 1e-9):
        raise DomainError("horizon {:g} is shorter than 2 K0 = {:g}".format(
            _horizon(traj), 2 * K0))
    if traj.closed_loop:
        h, c = traj.h_e, traj.c_e
    else:
        h, c = traj.h, traj.c
    t0 = traj.times[0]
    stats = []
    for s in range(_window_count(traj, K0)):
        i0 = traj.index_at(t0 + s * K0)
        i1 = traj.index_at(t0 + (s + 1) * K0)
        bound = c[i0]
        stats.append(nii_stats.f_margin_stats(
            bound, c[i0:i1 + 1], tol_win * bound))
        if h is not None:
            bound = h[i0] + c[i0]
            stats.append(nii_stats.f_margin_stats(
                bound, h[i0:i1 + 1], tol_win * bound))
    return _report(name, nii_stats.f_merge_stats(*stats), tol_win,
                   windows=len(stats) // (2 if h is not None else 1))


#############################################################
# contraction across K0 windows
#

def _envelope_log_margin(log_factor, c_last, h_final):
    """ log_bound, log_margin = _envelope_log_margin(log_factor, c, h)
    log_bound = log_factor + log c, log_margin = log_bound - log h;
    +inf when h is 0 and -inf when only c is 0
    """
    if h_final <= 0:
        return (-math.inf if c_last <= 0 else log_factor + math.log(c_last),
                math.inf)
    if c_last <= 0:
        return -math.inf, -math.inf
    log_bound = log_factor + math.log(c_last)
    return log_bound, log_bound - math.log(h_final)


def check_contraction(traj, constants, tol_rel=nii_cconf.default_tol_rel,
                      name=CheckName.contraction):
    """ report = check_contraction(traj, constants, tol_rel, name)

    With h_n = h_e(t0 + n K0), c_n = c_e(t0 + n K0), n = 0 ... n_max:
      h_n <= alpha1 h_n-1 + (2 - alpha2) c_n-1
      c_n <= beta^n c_0
      c_n / c_n-1 <= beta + tol_rel
    and the final value against the envelope, in log form
      log h_e(t_end) <= log((3 - alpha2 - alpha1) / (1 - alpha1))
                        + log c_n_max + log(1 + tol_rel)
    whose log bound and margin are reported as extra.
    """
    if not traj.closed_loop:
        raise MisuseError("contraction is checked on closed-loop runs")
    if not constants.applicable or not traj.monitor.has_receivers:
        return f_skipped_report(name, STATUS_NOT_APPLICABLE,
                                "receiver set is empty")
    K0 = constants.K0
    n_max = _window_count(traj, K0)
    if n_max < nii_cconf.min_contraction_windows:
        return f_skipped_report(name, STATUS_INSUFFICIENT,
                                "{:d} K0 windows, {:d} needed".format(
                                    n_max, nii_cconf.min_contraction_windows))

    t0 = traj.times[0]
    idx = [traj.index_at(t0 + n * K0) for n in range(n_max + 1)]
    he = np.asarray([traj.h_e[i] for i in idx])
    ce = np.asarray([traj.c_e[i] for i in idx])
    alpha1, alpha2 = constants.alpha1, constants.alpha2
    beta = constants.beta_tilde

    rec_bound = alpha1 * he[:-1] + (2.0 - alpha2) * ce[:-1]
    decay_bound = ce[0] * np.exp(constants.log_beta_tilde
                                 * np.arange(1, n_max + 1))
    positive = ce[:-1] > 0
    ratios = ce[1:][positive] / ce[:-1][positive]

    # final h_e against the envelope factor times c_e at the last window
    log_bound, log_margin = _envelope_log_margin(
        constants.envelope_factor_log(), ce[-1], traj.h_e[-1])
    envelope_stats = (1, int(log_margin < -math.log1p(tol_rel)), None)

    stats = nii_stats.f_merge_stats(
        nii_stats.f_margin_stats(rec_bound, he[1:], tol_rel * rec_bound),
        nii_stats.f_margin_stats(decay_bound, ce[1:], tol_rel * decay_bound),
        nii_stats.f_margin_stats(beta, ratios, tol_rel),
        envelope_stats)
    return _report(name, stats, tol_rel,
                   windows=n_max,
                   chi=constants.chi,
                   max_ratio=float(np.max(ratios)) if ratios.size else None,
                   beta_tilde=beta,
                   envelope_log_bound=log_bound,
                   envelope_log_margin=log_margin)


#############################################################
# pointwise identities
#

def _sample_indices(traj, n_samples):
    return np.unique(np.linspace(0, traj.n_points - 1,
                                 min(n_samples, traj.n_points)).astype(int))


def check_abs_identity(traj, scenario,
                       residual_tol=nii_cconf.default_residual_tol,
                       n_samples=nii_cconf.residual_samples):
    """ report = check_abs_identity(traj, scenario, residual_tol, n_samples)
    Absolute-value identity on sampled grid points; the error form is
    used for closed-loop trajectories. Zero entries are excluded.
    """
    values = []
    for idx in _sample_indices(traj, n_samples):
        t = float(traj.times[idx])
        snapshot = adjacency_at(scenario.schedule, t)
        if traj.closed_loop:
            sample = abs_error_dynamics_residual(
                snapshot, traj.errors[idx], scenario.gains.gains_at(t))
        else:
            sample = abs_dynamics_residual(snapshot, traj.states[idx])
        values.append(np.abs(sample.residual[sample.valid]))
    values = np.concatenate(values) if values else np.zeros(0)
    name = CheckName.abs_error_identity if traj.closed_loop \
        else CheckName.abs_identity
    return _report(name, nii_stats.f_margin_stats(0.0, values, residual_tol),
                   residual_tol)


#############################################################
# polarization
#

@dataclass(frozen=True)
class PolarizationSummary:
    """ spread:      max_{i,j in S} ||x_i| - |x_j|| at the final time
        signs_agree: signs are nonzero, equal within parts and opposite
                     across parts
    """
    spread: float
    signs_agree: bool
    time: float


def polarization_summary(traj, bipartition) -> PolarizationSummary:
    """ summary = polarization_summary(traj, bipartition)
    """
    final = traj.states[-1]
    nodes = sorted(bipartition.nodes)
    gauged = [np.sign(final[i]) * bipartition.side(i) for i in nodes]
    agree = bool(gauged) and all(g != 0 for g in gauged) and \
        len(set(gauged)) == 1
    return PolarizationSummary(nii_stats.f_max_abs_spread(final[nodes]),
                               agree, float(traj.times[-1]))


if __name__ == "__main__":
    print("Inequality checks of the convergence certificate")
