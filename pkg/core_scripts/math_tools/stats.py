#!/usr/bin/env python
"""
stats.py

Tools to calculate statistics of inequality margins

"""
from __future__ import absolute_import

import numpy as np

import core_scripts.dynamics.conf as nii_dyconf


def f_margin_stats(bound, value, tolerance):
    """ count, violations, worst = f_margin_stats(bound, value, tolerance)

    Margins of the one-sided inequality value <= bound.

    Args:
      bound:     np.array or scalar
      value:     np.array
      tolerance: np.array or scalar, >= 0, only relaxes the bound
    Return:
      count:      number of samples
      violations: samples with value > bound + tolerance
      worst:      min(bound - value), None when there are no samples
    """
    value = np.asarray(value, dtype=nii_dyconf.h_dtype)
    bound = np.broadcast_to(np.asarray(bound, dtype=nii_dyconf.h_dtype),
                            value.shape)
    tolerance = np.broadcast_to(
        np.asarray(tolerance, dtype=nii_dyconf.h_dtype), value.shape)
    if value.size == 0:
        return 0, 0, None
    margin = bound - value
    violations = int(np.count_nonzero(margin < -tolerance))
    return int(value.size), violations, float(np.min(margin))


def f_merge_stats(*stats):
    """ count, violations, worst = f_merge_stats((c1, v1, w1), ...)
    """
    count = sum(s[0] for s in stats)
    violations = sum(s[1] for s in stats)
    worsts = [s[2] for s in stats if s[2] is not None]
    return count, violations, (min(worsts) if worsts else None)


def f_max_abs_spread(values):
    """ spread = f_max_abs_spread(values)
    max_{i,j} | |v_i| - |v_j| |
    """
    mags = np.abs(np.asarray(values, dtype=nii_dyconf.h_dtype))
    if mags.size == 0:
        return 0.0
    return float(np.max(mags) - np.min(mags))


if __name__ == "__main__":
    pass
