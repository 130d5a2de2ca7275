#!/usr/bin/env python
"""
op_process_monitor

Monitors of a trajectory: the largest absolute opinion over the root set
(c) and over the receivers (h), and their analogues on the error x - x_d.

"""
from __future__ import absolute_import

from dataclasses import dataclass
from typing import Optional

import numpy as np

import core_scripts.dynamics.conf as nii_dyconf
import core_scripts.other_tools.list_tools as nii_list_tools
from core_scripts.errors import DomainError


def _max_abs(rows, idx):
    if not idx:
        return None
    return np.max(np.abs(rows[..., list(idx)]), axis=-1)


def monitors(x, x_d, S):
    """ h, c, h_e, c_e = monitors(x, x_d, S)

    Args:
      x:   np.array, (N,) state
      x_d: np.array, (N,) target
      S:   nonempty collection of 0-based root nodes
    Return:
      h, h_e are None when S covers every agent
    """
    x = np.asarray(x, dtype=nii_dyconf.h_dtype)
    x_d = np.asarray(x_d, dtype=nii_dyconf.h_dtype)
    if x.shape != x_d.shape:
        raise DomainError("state and target dimensions differ")
    roots = sorted(S)
    if not roots:
        raise DomainError("root set is empty")
    rest = nii_list_tools.f_complement(roots, x.shape[-1])
    err = x - x_d
    as_float = lambda v: None if v is None else float(v)
    return (as_float(_max_abs(x, rest)), as_float(_max_abs(x, roots)),
            as_float(_max_abs(err, rest)), as_float(_max_abs(err, roots)))


@dataclass(frozen=True)
class MonitorSeries:
    """ Per-grid-point monitor values; h and h_e are None when R is empty
    """
    h: Optional[np.ndarray]
    c: np.ndarray
    h_e: Optional[np.ndarray]
    c_e: np.ndarray

    @classmethod
    def from_rows(cls, states, errors, S):
        """ series = MonitorSeries.from_rows(states, errors, S)

        states: np.array, (M, N)
        errors: np.array, (M, N), deviation from the target
        """
        roots = sorted(S)
        if not roots:
            raise DomainError("root set is empty")
        rest = nii_list_tools.f_complement(roots, states.shape[1])
        series = [_max_abs(states, rest), _max_abs(states, roots),
                  _max_abs(errors, rest), _max_abs(errors, roots)]
        for arr in series:
            if arr is not None:
                arr.setflags(write=False)
        return cls(*series)

    @property
    def has_receivers(self):
        return self.h is not None

    def at(self, idx):
        """ (h, c, h_e, c_e) at grid index idx
        """
        pick = lambda arr: None if arr is None else float(arr[idx])
        return pick(self.h), pick(self.c), pick(self.h_e), pick(self.c_e)


if __name__ == "__main__":
    print("Definition of trajectory monitors")
