#!/usr/bin/env python
"""
config.py

Default configurations for the dynamics engine

"""
from __future__ import absolute_import

import numpy as np

# host data type of states, controls and monitors
h_dtype = np.float64

# default integration step (seconds)
default_dt = 1e-3

# dt must not exceed this fraction of the shortest dwell time
max_dt_per_dwell = 0.5

# a uniform grid point closer than dt * grid_snap to an event instant
# is dropped in favor of the event instant
grid_snap = 1e-6
