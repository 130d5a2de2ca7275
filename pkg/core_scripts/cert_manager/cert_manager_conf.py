#!/usr/bin/env python
"""
cert_manager_conf

A few definitions of cert_manager

"""
from __future__ import print_function

####
# Process exit status of the command line
####
class ExitStatus:
    ok = 0
    parse_error = 2
    structural_fail = 3
    inequality_fail = 4
    diverged = 5


####
# Top-level sections of the certificate document, in output order
####
class ReportKey:
    structural = 'structural'
    constants = 'constants'
    inequalities = 'inequalities'
    verdict = 'verdict'


####
# Names of the inequality reports
####
class CheckName:
    dini_h = 'dini-h'
    dini_c = 'dini-c'
    dini_c_e = 'dini-c-e'
    window_open = 'window-bounds-open'
    window_closed = 'window-bounds-closed'
    contraction = 'contraction'
    contraction_chi1 = 'contraction-chi1'
    abs_identity = 'abs-dynamics-identity'
    abs_error_identity = 'abs-error-dynamics-identity'


####
# Default tolerances
#  tol_rel:         relative slack of multiplicative bounds
#  tol_win:         relative slack of the window bounds, scaled by the
#                   magnitude of the bound
#  dini_factor:     tol_dini = dini_factor * dt * (M0 * N)^2 * max|x0|
#  final_threshold: ||x(horizon) - x_d||_inf allowed for a pass
#  residual_tol:    absolute tolerance of the pointwise identities
####
default_tol_rel = 1e-6
default_tol_win = 1e-6
default_dini_factor = 10.0
default_final_threshold = 1e-2
default_residual_tol = 1e-9

# grid points sampled per run for the pointwise identities
residual_samples = 200

# contraction recursion needs at least this many K0 windows
min_contraction_windows = 3
