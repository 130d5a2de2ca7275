#!/usr/bin/env python
"""
arg_parse

Argument parse of the command line

  main.py analyze  --scenario <path> [<path> ...] [--out <dir>]
  main.py simulate --scenario <path> --mode open|closed [--dt <real>]
                   [--horizon <real>] [--out <dir>]
  main.py certify  --scenario <path> [--chi <real>] [--out <dir>]
"""
from __future__ import absolute_import

import argparse

import core_scripts.data_io.conf as nii_dconf


def _common_parser():
    parser = argparse.ArgumentParser(add_help=False)

    mes = 'scenario YAML file(s); several files are processed one by one, '
    mes += 'each into <out>/<scenario-stem>/'
    parser.add_argument('--scenario', type=str, nargs='+', required=True,
                        help=mes)

    mes = 'output directory (default: {})'.format(nii_dconf.default_out_dir)
    parser.add_argument('--out', type=str,
                        default=nii_dconf.default_out_dir, help=mes)

    mes = 'INI file with numerical options, sections [graph] and [certify] '
    mes += '(default: none, built-in defaults)'
    parser.add_argument('--config', type=str, default=None, help=mes)

    mes = 'number of worker processes when several scenarios are given '
    mes += '(default: 1, sequential)'
    parser.add_argument('--num-workers', type=int, default=1, help=mes)

    mes = 'do not show progress bars'
    parser.add_argument('--quiet', action='store_true', default=False,
                        help=mes)
    return parser


def _integration_options(parser):
    mes = 'integration step, overrides the scenario dt'
    parser.add_argument('--dt', type=float, default=None, help=mes)

    mes = 'simulated time span, overrides the scenario horizon'
    parser.add_argument('--horizon', type=float, default=None, help=mes)

    mes = 'do not write SVG plots'
    parser.add_argument('--no-plot', action='store_true', default=False,
                        help=mes)


#############################################################
# argparser
#
def f_args_parsed(argument_input=None):
    """ args = f_args_parsed(argument_input=None)
    Parse argument_input (list of str) or sys.argv
    """
    parser = argparse.ArgumentParser(
        description='Signed switching-network opinion simulator and '
        'convergence certifier')
    common = _common_parser()
    commands = parser.add_subparsers(dest='command', metavar='command')
    commands.required = True

    mes = 'structural analysis and theorem constants'
    commands.add_parser('analyze', parents=[common], help=mes,
                        description=mes)

    mes = 'integrate open or closed loop, write CSV and SVG'
    sim = commands.add_parser('simulate', parents=[common], help=mes,
                              description=mes)
    sim.add_argument('--mode', type=str, choices=['open', 'closed'],
                     required=True, help='open: u = 0; closed: targeted law')
    _integration_options(sim)

    mes = 'full certification with a report document'
    cert = commands.add_parser('certify', parents=[common], help=mes,
                               description=mes)
    mes = 'window constant chi in (0, 1] (default: chi = zeta)'
    cert.add_argument('--chi', type=float, default=None, help=mes)
    _integration_options(cert)

    #
    # done
    if argument_input is not None:
        return parser.parse_args(argument_input)
    else:
        return parser.parse_args()


if __name__ == "__main__":
    pass
