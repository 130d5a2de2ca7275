#!/usr/bin/env python
"""
control_law

Right-hand side of the signed Laplacian dynamics and the control laws
that can close the loop.

A law gives, on every constant segment (Laplacian L, gains k), an affine
feedback u = F x + g and the deviation field xi' = A xi + b in
coordinates xi = x - origin. The integrator only ever sees (A, b).
"""
from __future__ import annotations

import numpy as np

import core_scripts.dynamics.conf as nii_dyconf
from core_scripts.errors import DomainError
from core_scripts.graph_tools.signed_graph import laplacian_at


def _check_dims(n, *arrays):
    for arr in arrays:
        if arr.shape[-1] != n:
            raise DomainError("vector of length {:d}, expected {:d}".format(
                arr.shape[-1], n))


def state_derivative(snapshot, x, u=None):
    """ xdot = state_derivative(snapshot, x, u)

    xdot_i = sum_j |a_ij| (sgn(a_ij) x_j - x_i) + u_i

    input
    -----
      snapshot: GraphSnapshot
      x:        np.array, (N,)
      u:        np.array, (N,) or None for zero input

    output
    ------
      xdot:     np.array, (N,)
    """
    x = np.asarray(x, dtype=nii_dyconf.h_dtype)
    mat = snapshot.matrix
    u = np.zeros_like(x) if u is None else np.asarray(
        u, dtype=nii_dyconf.h_dtype)
    _check_dims(snapshot.n_agents, x, u)
    pull = np.sign(mat) * x[None, :] - x[:, None]
    return np.sum(np.abs(mat) * pull, axis=1) + u


def control_input(schedule, gains, x, x_d, t):
    """ u = control_input(schedule, gains, x, x_d, t)
    u = L(t) x_d - K(t) (x - x_d)
    """
    x = np.asarray(x, dtype=nii_dyconf.h_dtype)
    x_d = np.asarray(x_d, dtype=nii_dyconf.h_dtype)
    _check_dims(schedule.n_agents, x, x_d)
    if gains.n_agents != schedule.n_agents:
        raise DomainError("gain vector does not match the agent count")
    lap = laplacian_at(schedule, t)
    return lap @ x_d - gains.gains_at(t) * (x - x_d)


class ControlLaw:
    """ Base class: zero input, origin at 0
    """
    closed_loop = False
    name = 'open'

    def origin(self, scenario):
        return np.zeros(scenario.n_agents, dtype=nii_dyconf.h_dtype)

    def feedback(self, lap, gains, origin):
        """ (F, g) with u = F x + g on a segment
        """
        n = lap.shape[0]
        return np.zeros([n, n]), np.zeros(n)

    def deviation_system(self, lap, gains, origin):
        """ (A, b) with xi' = A xi + b, xi = x - origin
        """
        fmat, gvec = self.feedback(lap, gains, origin)
        amat = fmat - lap
        return amat, amat @ origin + gvec

    def control(self, lap, gains, xi, origin):
        """ u on rows of deviations xi, shape (M, N)
        """
        fmat, gvec = self.feedback(lap, gains, origin)
        return (xi + origin) @ fmat.T + gvec


class OpenLoop(ControlLaw):
    """ u = 0
    """
    def deviation_system(self, lap, gains, origin):
        return -np.array(lap), np.zeros(lap.shape[0])

    def control(self, lap, gains, xi, origin):
        return np.zeros_like(xi)


class ConstantInput(ControlLaw):
    """ u = w, a fixed exogenous input
    """
    name = 'constant'

    def __init__(self, w):
        self.w = np.asarray(w, dtype=nii_dyconf.h_dtype)

    def feedback(self, lap, gains, origin):
        _check_dims(lap.shape[0], self.w)
        n = lap.shape[0]
        return np.zeros([n, n]), self.w

    def control(self, lap, gains, xi, origin):
        return np.broadcast_to(self.w, xi.shape).copy()


class TargetedControl(ControlLaw):
    """ u = L(t) x_d - K(t) (x - x_d)

    Integrated in error coordinates e = x - x_d, where the field is
    e' = -(L + K) e with no constant term.
    """
    closed_loop = True
    name = 'closed'

    def origin(self, scenario):
        return scenario.x_target_array()

    def feedback(self, lap, gains, origin):
        lap = np.asarray(lap)
        return -np.diag(gains), lap @ origin + gains * origin

    def deviation_system(self, lap, gains, origin):
        return -(np.array(lap) + np.diag(gains)), np.zeros(lap.shape[0])

    def control(self, lap, gains, xi, origin):
        return origin @ np.asarray(lap).T - xi * gains


def f_select_law(closed_loop):
    return TargetedControl() if closed_loop else OpenLoop()


if __name__ == "__main__":
    print("Definition of control laws")
