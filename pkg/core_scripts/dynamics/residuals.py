#!/usr/bin/env python
"""
residuals

Pointwise identities for the absolute opinions |x_i| and absolute errors
|e_i|, with the sign convention sgn(0) = 0.

  sgn(x_i) x_i'  =  sum_j |a_ij| (theta_ij |x_j| - |x_i|),
  theta_ij = sgn(x_i) sgn(a_ij) sgn(x_j)               (u = 0)

  sgn(e_i) e_i'  =  sum_j |a_ij| (theta_ij |e_j| - |e_i|) - k_i |e_i|
                                                        (targeted control)
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

import core_scripts.dynamics.conf as nii_dyconf
from core_scripts.dynamics.control_law import state_derivative


@dataclass(frozen=True)
class ResidualSample:
    """ lhs, rhs, residual = lhs - rhs per agent; valid marks agents with a
    nonzero value, the only ones that count for pass/fail
    """
    lhs: np.ndarray
    rhs: np.ndarray
    residual: np.ndarray
    valid: np.ndarray

    def max_valid(self):
        if not np.any(self.valid):
            return 0.0
        return float(np.max(np.abs(self.residual[self.valid])))


def _abs_rhs(mat, v):
    sgn = np.sign(v)
    theta = sgn[:, None] * np.sign(mat) * sgn[None, :]
    return np.sum(np.abs(mat) * (theta * np.abs(v)[None, :]
                                 - np.abs(v)[:, None]), axis=1)


def abs_dynamics_residual(snapshot, x) -> ResidualSample:
    """ sample = abs_dynamics_residual(snapshot, x)
    """
    x = np.asarray(x, dtype=nii_dyconf.h_dtype)
    lhs = np.sign(x) * state_derivative(snapshot, x)
    rhs = _abs_rhs(snapshot.matrix, x)
    return ResidualSample(lhs, rhs, lhs - rhs, x != 0)


def abs_error_dynamics_residual(snapshot, e, gains) -> ResidualSample:
    """ sample = abs_error_dynamics_residual(snapshot, e, gains)

    e:     error x - x_d
    gains: np.array, k_i on the segment
    """
    e = np.asarray(e, dtype=nii_dyconf.h_dtype)
    gains = np.asarray(gains, dtype=nii_dyconf.h_dtype)
    e_dot = state_derivative(snapshot, e) - gains * e
    lhs = np.sign(e) * e_dot
    rhs = _abs_rhs(snapshot.matrix, e) - gains * np.abs(e)
    return ResidualSample(lhs, rhs, lhs - rhs, e != 0)


if __name__ == "__main__":
    print("Absolute-value dynamics identities")
