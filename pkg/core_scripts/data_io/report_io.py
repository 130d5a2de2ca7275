#!/usr/bin/env python
"""
report_io

Convert structural reports, constants and certificates into plain
dictionaries and write them as YAML documents.

Agent indices are 1-based; sections of a certificate appear in the order
structural, constants, inequalities, verdict. README.md documents the
schema.
"""
from __future__ import absolute_import

import math

import numpy as np

import core_scripts.data_io.io_tools as nii_io_tk
import core_scripts.other_tools.list_tools as nii_list_tools
from core_scripts.cert_manager.cert_manager import f_verdict_kind
from core_scripts.cert_manager.cert_manager_conf import ReportKey


def _num(value):
    """ Python float / int / None, non-finite floats become strings
    """
    if value is None or isinstance(value, (bool, np.bool_)):
        return None if value is None else bool(value)
    if isinstance(value, (int, np.integer)):
        return int(value)
    value = float(value)
    if math.isfinite(value):
        return value
    return str(value)


def _nodes(nodes):
    return None if nodes is None else nii_list_tools.f_to_one_based(nodes)


def f_structural_dict(structural):
    """ dic = f_structural_dict(structural)
    """
    conn = structural.connectivity
    balance = structural.balance
    dic = {
        'passed': structural.passed,
        'connectivity': {
            'holds': conn.holds,
            'fails_at': _num(conn.fails_at),
            'fixed_root': conn.fixed_root,
            'windows': [{'start': _num(t), 'root_set': _nodes(roots)}
                        for t, roots in conn.windows]},
        'declared_root_set': _nodes(structural.declared_root),
        'detected_root_set': _nodes(structural.detected_root),
        'root_set': _nodes(structural.root_set),
        'balance': None,
        'gain_violations': list(structural.gain_violations),
        'd0': structural.d0,
        'd_max': structural.d_max,
        'boundary_roots': _nodes(structural.boundary_roots),
        'M0': _num(structural.M0),
        'period': _num(structural.period),
        'failures': list(structural.failures)}
    if balance is not None:
        part = balance.bipartition
        dic['balance'] = {
            'balanced': balance.balanced,
            'part1': None if part is None else _nodes(part.part1),
            'part2': None if part is None else _nodes(part.part2),
            'unique': balance.unique,
            'conflict': None if balance.conflict is None else {
                'i': balance.conflict[0] + 1,
                'j': balance.conflict[1] + 1,
                'sign': balance.conflict[2]}}
    return dic


def f_constants_dict(constants, chi1=None, failure=None):
    """ dic = f_constants_dict(constants, chi1=None, failure=None)
    Both linear and log forms; entries are null when the receiver set is
    empty. chi1 holds the alternative constants computed with chi = 1.
    """
    if constants is None:
        return {'available': False, 'failure': failure}
    c = constants
    dic = {
        'available': True,
        'applicable': c.applicable,
        'N': c.N,
        'N_s': c.N_s,
        'M0': _num(c.M0),
        'M_s': _num(c.M_s),
        'd0': c.d0,
        'T': _num(c.T),
        'delta': _num(c.delta),
        'kappa_lower': _num(c.kappa_lower),
        'K0': _num(c.K0),
        'zeta': _num(c.zeta),
        'log_zeta': _num(c.log_zeta),
        'xi0': _num(c.xi0),
        'log_xi0': _num(c.log_xi0),
        'chi': _num(c.chi),
        'log_chi': _num(c.log_chi),
        'chi_is_zeta': c.chi_is_zeta,
        'alpha1': _num(c.alpha1),
        'log_one_minus_alpha1': _num(c.log_one_minus_alpha1),
        'alpha2': _num(c.alpha2),
        'log_alpha2': _num(c.log_alpha2),
        'beta_tilde': _num(c.beta_tilde),
        'log_beta_tilde': _num(c.log_beta_tilde),
        'failure': failure}
    if chi1 is not None:
        dic['chi1'] = {
            'alpha1': _num(chi1.alpha1),
            'log_one_minus_alpha1': _num(chi1.log_one_minus_alpha1),
            'alpha2': _num(chi1.alpha2),
            'log_alpha2': _num(chi1.log_alpha2)}
    return dic


def f_inequality_dict(report):
    dic = {'name': report.name,
           'status': report.status,
           'passed': report.passed,
           'samples_checked': report.samples_checked,
           'violations': report.violations,
           'worst_margin': _num(report.worst_margin),
           'tolerance_used': _num(report.tolerance_used)}
    if report.note:
        dic['note'] = report.note
    if report.extra:
        dic['extra'] = {key: _num(value)
                        for key, value in report.extra.items()}
    return dic


def f_certificate_dict(report, exit_status=None):
    """ dic = f_certificate_dict(report, exit_status=None)
    """
    polar = report.polarization
    verdict = {
        'passed': report.convergence_verdict,
        'kind': f_verdict_kind(report),
        'final_error': _num(report.final_error),
        'final_threshold': _num(report.final_threshold),
        'reasons': list(report.reasons),
        'polarization': None if polar is None else {
            'spread': _num(polar.spread),
            'signs_agree': polar.signs_agree,
            'time': _num(polar.time)}}
    if exit_status is not None:
        verdict['exit_status'] = int(exit_status)
    return {
        ReportKey.structural: f_structural_dict(report.structural),
        ReportKey.constants: f_constants_dict(
            report.constants, report.constants_chi1,
            report.constants_failure),
        ReportKey.inequalities: [f_inequality_dict(x)
                                 for x in report.inequalities],
        ReportKey.verdict: verdict}


def f_analysis_dict(structural, constants, failure=None):
    """ dic = f_analysis_dict(structural, constants, failure=None)
    Document written by the analyze command
    """
    return {ReportKey.structural: f_structural_dict(structural),
            ReportKey.constants: f_constants_dict(constants, None, failure)}


def write_certificate(report, file_path, exit_status=None):
    return nii_io_tk.write_yaml(f_certificate_dict(report, exit_status),
                                file_path)


def write_analysis(structural, constants, file_path, failure=None):
    return nii_io_tk.write_yaml(
        f_analysis_dict(structural, constants, failure), file_path)


def read_report(file_path):
    """ dic = read_report(file_path)
    """
    _, data, _ = nii_io_tk.read_yaml(file_path)
    return data


if __name__ == "__main__":
    print("Report documents")
