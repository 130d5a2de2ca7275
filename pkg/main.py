#!/usr/bin/env python
"""
main.py

Command line of the signed switching-network opinion simulator

  python main.py analyze  --scenario scenario_config_8agents.yaml
  python main.py simulate --scenario scenario_config_8agents.yaml --mode closed
  python main.py certify  --scenario scenario_config_8agents.yaml --out out

Every scenario writes into <out>/<scenario-stem>/. The exit status is
0 pass, 2 parse error, 3 structural failure, 4 inequality violation or
final error above threshold, 5 divergence; the maximum over all
scenarios when several are given.
"""
from __future__ import absolute_import

import os
import sys
from multiprocessing import Pool

import core_scripts.data_io.conf as nii_dconf
import core_scripts.data_io.io_tools as nii_io_tk
import core_scripts.data_io.plot_tools as nii_plot
import core_scripts.data_io.report_io as nii_report
import core_scripts.op_manager.op_display_tools as nii_op_display
import core_scripts.other_tools.display as nii_display
from core_scripts.cert_manager.cert_manager import (certify,
                                                    f_constants_stage,
                                                    f_structural_stage,
                                                    f_verdict_kind)
from core_scripts.cert_manager.cert_manager_conf import ExitStatus
from core_scripts.config_parse.arg_parse import f_args_parsed
from core_scripts.config_parse.config_parse import f_run_options
from core_scripts.data_io.scenario_io import parse_scenario
from core_scripts.dynamics.integrator import f_resolve_root_set, integrate
from core_scripts.errors import (DomainError, IntegrationDivergedError,
                                 RootSetMismatchError, ScenarioParseError,
                                 SignedOpinionError, StructuralError)
from core_scripts.other_tools.str_tools import (f_node_set_str,
                                                f_scenario_stem)

_VERDICT_STATUS = {'pass': ExitStatus.ok,
                   'structural': ExitStatus.structural_fail,
                   'inequality': ExitStatus.inequality_fail}


def _write_trajectory(traj, out_dir, mode, plot, schedule):
    csv_path = os.path.join(out_dir, nii_dconf.trajectory_file.format(
        mode=mode))
    nii_io_tk.f_write_trajectory_csv(traj, csv_path)
    nii_display.f_print_message("trajectory: {}".format(csv_path))
    if plot and traj.n_points > 1:
        svg_path = os.path.join(out_dir, nii_dconf.plot_file.format(
            mode=mode))
        nii_plot.f_plot_trajectory(
            traj, svg_path,
            schedule.switch_instants(float(traj.times[0]),
                                     float(traj.times[-1])),
            '{} loop'.format(mode))
        nii_display.f_print_message("plot: {}".format(svg_path))
    return csv_path


#############################################################
# commands
#

def cmd_analyze(scenario, out_dir, options):
    """ status = cmd_analyze(scenario, out_dir, options)
    Print and write the structural report and the theorem constants
    """
    nii_display.f_print_w_date("Structural analysis " + scenario.name, 'm')
    structural = f_structural_stage(scenario, options)
    constants, failure = f_constants_stage(scenario, structural, options)
    nii_op_display.print_structural(structural)
    nii_op_display.print_constants(constants, failure)

    path = nii_report.write_analysis(
        structural, constants,
        os.path.join(out_dir, nii_dconf.analysis_file), failure)
    nii_display.f_print_message("analysis: {}".format(path))
    passed = structural.passed and not failure
    nii_display.f_print_verdict(passed, "structural hypotheses")
    return ExitStatus.ok if passed else ExitStatus.structural_fail


def cmd_simulate(scenario, mode, out_dir, options, plot=True):
    """ status = cmd_simulate(scenario, mode, out_dir, options, plot=True)
    Integrate one loop and write its CSV (and SVG plot)
    """
    try:
        roots = f_resolve_root_set(scenario, options.grid_per_dwell)
    except RootSetMismatchError:
        raise
    except StructuralError as err:
        nii_display.f_print(
            "{}; monitors use all agents as root set".format(err), 'warning')
        roots = frozenset(range(scenario.n_agents))

    nii_display.f_print_w_date(
        "Integration {} ({} loop)".format(scenario.name, mode), 'm')
    closed = mode == 'closed'
    try:
        traj = integrate(scenario, closed, root_set=roots,
                         verbose=options.verbose,
                         grid_per_dwell=options.grid_per_dwell)
    except IntegrationDivergedError as err:
        nii_display.f_print_error(err)
        if err.partial is not None:
            _write_trajectory(err.partial, out_dir, mode, False,
                              scenario.schedule)
        return ExitStatus.diverged

    _write_trajectory(traj, out_dir, mode, plot, scenario.schedule)
    final = float(abs(traj.errors[-1]).max())
    nii_display.f_print_message(
        "root set {}, ||x(t_end) - x_d||_inf = {:.6g}".format(
            f_node_set_str(roots), final))
    return ExitStatus.ok


def cmd_certify(scenario, out_dir, options, plot=True):
    """ status = cmd_certify(scenario, out_dir, options, plot=True)
    Run the certification and write the certificate document
    """
    nii_display.f_print_w_date("Certification " + scenario.name, 'm')
    try:
        report = certify(scenario, options)
    except IntegrationDivergedError as err:
        nii_display.f_print_error(err)
        if err.partial is not None:
            mode = 'closed' if err.partial.closed_loop else 'open'
            _write_trajectory(err.partial, out_dir, mode, False,
                              scenario.schedule)
        return ExitStatus.diverged

    nii_op_display.print_structural(report.structural)
    nii_op_display.print_constants(report.constants,
                                   report.constants_failure)
    if report.inequalities:
        nii_op_display.print_report_table(report.inequalities)
    for mode, traj in (('open', report.open_trajectory),
                       ('closed', report.closed_trajectory)):
        if traj is not None:
            _write_trajectory(traj, out_dir, mode, plot, scenario.schedule)

    status = _VERDICT_STATUS[f_verdict_kind(report)]
    path = nii_report.write_certificate(
        report, os.path.join(out_dir, nii_dconf.report_file), status)
    nii_display.f_print_message("certificate: {}".format(path))
    for reason in report.reasons:
        nii_display.f_print(reason, 'warning')
    nii_display.f_print_verdict(report.passed, "convergence certificate")
    return status


#############################################################
# driver
#

def _run_job(job):
    """ status = _run_job((command, scenario_path, out_root, options, extra))
    """
    command, path, out_root, options, extra = job
    try:
        scenario = parse_scenario(path)
        changes = {key: extra[key] for key in ('dt', 'horizon')
                   if extra.get(key) is not None}
        if changes:
            scenario = scenario.replace(**changes)
    except (ScenarioParseError, DomainError) as err:
        nii_display.f_print_error("{}: {}".format(path, err))
        return ExitStatus.parse_error

    out_dir = nii_io_tk.f_make_dir(
        os.path.join(out_root, f_scenario_stem(path)))
    plot = not extra.get('no_plot', False)
    try:
        if command == 'analyze':
            return cmd_analyze(scenario, out_dir, options)
        if command == 'simulate':
            return cmd_simulate(scenario, extra['mode'], out_dir, options,
                                plot)
        return cmd_certify(scenario, out_dir, options, plot)
    except SignedOpinionError as err:
        # e.g. a schedule whose window starts exceed the supported count
        nii_display.f_print_error("{}: {}".format(path, err))
        return ExitStatus.structural_fail


def main(argument_input=None):
    """ status = main(argument_input=None)
    """
    args = f_args_parsed(argument_input)
    parallel = args.num_workers > 1 and len(args.scenario) > 1
    try:
        options = f_run_options(args.config, chi=getattr(args, 'chi', None),
                                verbose=not (args.quiet or parallel))
    except DomainError as err:
        nii_display.f_print_error(err)
        return ExitStatus.parse_error

    if not args.quiet:
        nii_display.f_print_w_date(
            "{} {:d} scenario(s)".format(args.command, len(args.scenario)),
            level='h')
    extra = {'mode': getattr(args, 'mode', None),
             'dt': getattr(args, 'dt', None),
             'horizon': getattr(args, 'horizon', None),
             'no_plot': getattr(args, 'no_plot', False)}
    jobs = [(args.command, path, args.out, options, extra)
            for path in args.scenario]
    if parallel:
        with Pool(min(args.num_workers, len(jobs))) as pool:
            statuses = pool.map(_run_job, jobs)
    else:
        statuses = [_run_job(job) for job in jobs]
    return max(statuses)


if __name__ == "__main__":
    sys.exit(main())
