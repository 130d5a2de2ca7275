#!/usr/bin/env python
"""
config.py

Configurations for data_io

"""
from __future__ import absolute_import

import numpy as np

# ---------------------------
# Numerical configuration
# ---------------------------
# data type for host arrays
h_dtype = np.float64

# float format of the trajectory CSV (17 significant digits)
csv_float_fmt = '%.17g'


# ---------------------------
# File name configuration
# ---------------------------
# trajectory table written by simulate
trajectory_file = 'trajectory_{mode}.csv'
# line plot of x_i(t)
plot_file = 'trajectory_{mode}.svg'
# certificate written by certify
report_file = 'certificate.yaml'
# structural report written by analyze
analysis_file = 'analysis.yaml'
# default output directory
default_out_dir = './output'


# ---------------------------
# Scenario document configuration
# ---------------------------
# mandatory top-level keys of a scenario file
scenario_keys = ('agents', 'delta', 'window_T', 'horizon', 'dt',
                 'x0', 'x_target', 'gains', 'schedule')
# optional top-level keys
scenario_optional_keys = ('root_set', 't_start')
# accepted schedule rotation names
rotation_names = ('cyclic', 'rotating-cyclic')
