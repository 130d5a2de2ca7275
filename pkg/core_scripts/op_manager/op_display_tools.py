#!/usr/bin/env python
"""
op_display_tools

Functions to print structural analysis, constants and inequality reports
on the console

"""
from __future__ import print_function

import core_scripts.other_tools.display as nii_display
from core_scripts.other_tools.str_tools import f_node_set_str

_RULE = 78


def _fmt(value):
    if value is None:
        return '-'
    if isinstance(value, (int, bool)):
        return str(value)
    return "{:.4g}".format(value)


def print_structural(structural):
    """ Print the structural verdicts
    """
    conn = structural.connectivity
    mes = []
    if conn.holds:
        mes.append("connectivity: every window has a root, fixed root set: "
                   "{}".format('yes' if conn.fixed_root else 'no'))
    else:
        mes.append("connectivity: fails at window t = {:.6g}".format(
            conn.fails_at))
    mes.append("root set S: {} (declared {}, detected {})".format(
        f_node_set_str(structural.root_set),
        f_node_set_str(structural.declared_root),
        f_node_set_str(structural.detected_root)))
    balance = structural.balance
    if balance is not None:
        if balance.balanced:
            part = balance.bipartition
            mes.append("balance: yes, parts {} / {}{}".format(
                f_node_set_str(part.part1), f_node_set_str(part.part2),
                '' if balance.unique else ' (not unique)'))
        else:
            mes.append("balance: no")
    mes.append("d0 = {}, D_max = {}, M0 = {}, V0 = {}".format(
        _fmt(structural.d0), _fmt(structural.d_max), _fmt(structural.M0),
        f_node_set_str(structural.boundary_roots)))
    for line in mes:
        nii_display.f_print_message(line)
    for failure in structural.failures:
        nii_display.f_print(failure, 'warning')
    return '\n'.join(mes) + '\n'


def print_constants(constants, failure=None):
    """ Print the theorem constants
    """
    if constants is None:
        mes = "constants: unavailable" + (
            '' if failure is None else ' ({})'.format(failure))
        nii_display.f_print(mes, 'warning')
        return mes + '\n'
    c = constants
    mes = ["K0 = {}, M_s = {}, beta_tilde = {}".format(
        _fmt(c.K0), _fmt(c.M_s), _fmt(c.beta_tilde))]
    if c.applicable:
        mes.append("log zeta = {}, log xi0 = {}, log chi = {}".format(
            _fmt(c.log_zeta), _fmt(c.log_xi0), _fmt(c.log_chi)))
        mes.append("log(1 - alpha1) = {}, log alpha2 = {}".format(
            _fmt(c.log_one_minus_alpha1), _fmt(c.log_alpha2)))
    else:
        mes.append("receiver set is empty, window constants not used")
    for line in mes:
        nii_display.f_print_message(line)
    if failure:
        nii_display.f_print(failure, 'warning')
    return '\n'.join(mes) + '\n'


def print_report_head():
    """ Print the head of the inequality table
    """
    nii_display.f_print_message("{:->{w}s}".format("", w=_RULE))
    mes = "{:>28s} | ".format("Check")
    mes += "{:>9s} | ".format("Samples")
    mes += "{:>6s} | ".format("Viol.")
    mes += "{:>12s} | ".format("Worst margin")
    mes += "{:>8s}".format("Status")
    nii_display.f_print_message(mes)
    nii_display.f_print_message("{:->{w}s}".format("", w=_RULE), flush=True)
    return mes + '\n'


def print_report_row(report):
    """ Print one InequalityReport
    """
    mes = "{:>28s} | ".format(report.name)
    mes += "{:>9d} | ".format(report.samples_checked)
    mes += "{:>6d} | ".format(report.violations)
    mes += "{:>12s} | ".format(_fmt(report.worst_margin))
    if report.status == 'checked':
        mes += "{:>8s}".format('ok' if report.passed else 'FAIL')
    else:
        mes += report.status
    nii_display.f_print(mes, 'normal' if report.passed else 'error')
    return mes + '\n'


def print_report_table(reports):
    """ Print all inequality reports as a table
    """
    mes = print_report_head()
    for report in reports:
        mes += print_report_row(report)
    nii_display.f_print_message("{:->{w}s}".format("", w=_RULE))
    return mes


if __name__ == "__main__":
    print("Op_display_tools")
