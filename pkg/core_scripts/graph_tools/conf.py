#!/usr/bin/env python
"""
config.py

Default configurations for graph_tools

Note: these defaults apply only when RunOptions (config file or
command line) does not set the value
"""
from __future__ import absolute_import

# window starts checked per shortest dwell time, on top of switch instants
grid_per_dwell = 10

# maximum node count for the exhaustive longest-simple-path search
path_node_cap = 20

# two time instants closer than this are the same instant
time_eps = 1e-9

# relative slack on the delta-arc threshold so that exact ties
# (integral == delta * length) survive floating-point rounding
delta_arc_rtol = 1e-12

# refuse window checks that would need more window starts than this
max_window_starts = 1000000

# schedule rotation flags
ROTATION_CYCLIC = 'cyclic'
ROTATION_ROTATING = 'rotating-cyclic'
