#!/usr/bin/env python
"""
scenario_io

Parse and serialize scenario documents (YAML, 1-based agent indices).

  agents: 8
  delta: 0.04
  window_T: 10.0
  horizon: 120.0
  dt: 0.001
  t_start: 0.0                 # optional
  root_set: [1, 2, 3]          # optional
  x0: [...]
  x_target: [...]
  gains:
    kappa_lower: 0.6
    k: {set: S, value: 0.6}    # or a list of N gains
    pieces:                    # optional, later gain pieces
      - {start: 50.0, k: [...]}
  schedule:
    rotation: rotating-cyclic  # or cyclic
    graphs:
      - dwell: 2.0
        edges:
          - {from: 1, to: 2, weight: -1.0}   # sets a_21

Every rejected document raises ScenarioParseError(key, constraint, line).
"""
from __future__ import absolute_import

import math
import os

import yaml

import core_scripts.data_io.conf as nii_dconf
import core_scripts.data_io.io_tools as nii_io_tk
import core_scripts.dynamics.conf as nii_dyconf
import core_scripts.other_tools.list_tools as nii_list_tools
from core_scripts.dynamics.scenario import (GainSchedule, Scenario,
                                            f_gain_violations)
from core_scripts.errors import (DomainError, ScenarioParseError,
                                 UnsupportedScheduleError)
from core_scripts.graph_tools.connectivity import \
    check_uniform_qs_connectivity
from core_scripts.graph_tools.signed_graph import (GraphSnapshot,
                                                   SwitchingSchedule)
from core_scripts.other_tools.str_tools import f_scenario_stem


class _LineIndex:
    """ Map of key paths, e.g. ('schedule', 'graphs', 0, 'dwell'), to the
    1-based line where they appear in the document
    """
    def __init__(self, node):
        self.lines = {}
        if node is not None:
            self._walk(node, ())

    def _walk(self, node, path):
        self.lines.setdefault(path, node.start_mark.line + 1)
        if isinstance(node, yaml.MappingNode):
            for key_node, value_node in node.value:
                sub = path + (key_node.value,)
                self.lines[sub] = key_node.start_mark.line + 1
                self._walk(value_node, sub)
        elif isinstance(node, yaml.SequenceNode):
            for idx, item in enumerate(node.value):
                self._walk(item, path + (idx,))

    def line(self, path):
        path = tuple(path)
        while path and path not in self.lines:
            path = path[:-1]
        return self.lines.get(path)


def _key_str(path):
    out = ''
    for part in path:
        if isinstance(part, int):
            out += '[{:d}]'.format(part)
        else:
            out += ('.' if out else '') + str(part)
    return out or '<document>'


class _Reader:
    """ Typed access to the loaded document with located errors
    """
    def __init__(self, data, lines):
        self.data = data
        self.lines = lines

    def fail(self, path, constraint):
        raise ScenarioParseError(_key_str(path), constraint,
                                 self.lines.line(path))

    def get(self, path, required=True):
        value = self.data
        for part in path:
            if isinstance(part, int):
                if not isinstance(value, list) or part >= len(value):
                    self.fail(path, "missing entry")
                value = value[part]
            else:
                if not isinstance(value, dict):
                    self.fail(path[:-1], "must be a mapping")
                if part not in value:
                    if required:
                        self.fail(path, "required key is missing")
                    return None
                value = value[part]
        return value

    def number(self, path, positive=False, required=True):
        value = self.get(path, required)
        if value is None and not required:
            return None
        if isinstance(value, bool):
            self.fail(path, "must be a number")
        try:
            out = float(value)
        except (TypeError, ValueError):
            self.fail(path, "must be a number")
        if not math.isfinite(out):
            self.fail(path, "must be finite")
        if positive and out <= 0:
            self.fail(path, "must be positive")
        return out

    def integer(self, path, low=None, high=None):
        value = self.get(path)
        if isinstance(value, bool) or not isinstance(value, int):
            self.fail(path, "must be an integer")
        if (low is not None and value < low) or \
           (high is not None and value > high):
            self.fail(path, "must lie in [{}, {}]".format(low, high))
        return value

    def sequence(self, path, length=None, nonempty=False):
        value = self.get(path)
        if not isinstance(value, list):
            self.fail(path, "must be a list")
        if length is not None and len(value) != length:
            self.fail(path, "has {:d} entries, expected {:d}".format(
                len(value), length))
        if nonempty and not value:
            self.fail(path, "must not be empty")
        return value

    def vector(self, path, length):
        self.sequence(path, length)
        return tuple(self.number(path + (idx,)) for idx in range(length))

    def mapping(self, path, allowed):
        value = self.get(path)
        if not isinstance(value, dict):
            self.fail(path, "must be a mapping")
        for key in value:
            if key not in allowed:
                self.fail(path + (key,), "unknown key")
        return value


def _parse_schedule(reader, n, t_start):
    reader.mapping(('schedule',), ('rotation', 'graphs'))
    rotation = reader.get(('schedule', 'rotation'))
    if rotation not in nii_dconf.rotation_names:
        reader.fail(('schedule', 'rotation'), "must be one of {}".format(
            ', '.join(nii_dconf.rotation_names)))
    graphs = reader.sequence(('schedule', 'graphs'), nonempty=True)
    snapshots, dwells = [], []
    for g_idx in range(len(graphs)):
        g_path = ('schedule', 'graphs', g_idx)
        reader.mapping(g_path, ('dwell', 'edges'))
        dwells.append(reader.number(g_path + ('dwell',), positive=True))
        edges = reader.sequence(g_path + ('edges',))
        weights, seen = [], set()
        for e_idx in range(len(edges)):
            e_path = g_path + ('edges', e_idx)
            reader.mapping(e_path, ('from', 'to', 'weight'))
            src = reader.integer(e_path + ('from',), 1, n) - 1
            dst = reader.integer(e_path + ('to',), 1, n) - 1
            weight = reader.number(e_path + ('weight',))
            if src == dst:
                reader.fail(e_path, "A2: self-loop a_ii must be 0")
            if (dst, src) in seen:
                reader.fail(e_path, "duplicated edge")
            seen.add((dst, src))
            # information flows from -> to, so the edge sets a_{to, from}
            weights.append((dst, src, weight))
        snapshots.append(GraphSnapshot(n, tuple(weights)))
    return SwitchingSchedule(tuple(snapshots), tuple(dwells), rotation,
                             t_start)


class _RootSet:
    """ Declared root set, or the one detected from the schedule when
    a {set: S} gain first needs it
    """
    def __init__(self, declared, schedule, delta, window):
        self.value = declared
        self._args = (schedule, delta, window)

    def get(self, reader, path):
        if self.value is not None:
            return self.value
        try:
            verdict = check_uniform_qs_connectivity(*self._args)
        except (DomainError, UnsupportedScheduleError) as err:
            reader.fail(path, "{{set: S}}: root set detection failed: "
                        "{}".format(err))
        if verdict.root_set is None:
            reader.fail(path, "{set: S} without root_set needs a fixed "
                        "detected root set")
        self.value = verdict.root_set
        return self.value


def _parse_gain_values(reader, path, n, roots):
    value = reader.get(path)
    if isinstance(value, dict):
        reader.mapping(path, ('set', 'value'))
        if reader.get(path + ('set',)) != 'S':
            reader.fail(path + ('set',), "only the root set 'S' is supported")
        gain = reader.number(path + ('value',))
        members = roots.get(reader, path)
        return tuple(gain if idx in members else 0.0 for idx in range(n))
    values = reader.vector(path, n)
    for idx, gain in enumerate(values):
        if gain < 0:
            reader.fail(path + (idx,), "P2: gains must be nonnegative")
    return values


def _parse_gains(reader, n, roots):
    reader.mapping(('gains',), ('kappa_lower', 'k', 'pieces'))
    kappa = reader.number(('gains', 'kappa_lower'))
    if kappa <= 0:
        reader.fail(('gains', 'kappa_lower'),
                    "P2: kappa_lower must be positive")
    values = _parse_gain_values(reader, ('gains', 'k'), n, roots)
    pieces = []
    if reader.get(('gains', 'pieces'), required=False) is not None:
        items = reader.sequence(('gains', 'pieces'))
        for p_idx in range(len(items)):
            p_path = ('gains', 'pieces', p_idx)
            reader.mapping(p_path, ('start', 'k'))
            start = reader.number(p_path + ('start',))
            if pieces and start <= pieces[-1][0]:
                reader.fail(p_path + ('start',),
                            "piece start times must increase")
            pieces.append((start, _parse_gain_values(
                reader, p_path + ('k',), n, roots)))
    gains = GainSchedule(values, kappa, tuple(pieces))
    if roots.value is not None:
        violations = f_gain_violations(gains, roots.value, n)
        if violations:
            reader.fail(('gains',), '; '.join(violations))
    return gains


def f_scenario_from_document(data, node=None, name='scenario'):
    """ scenario = f_scenario_from_document(data, node=None, name)
    Build a Scenario from a loaded document (node gives line numbers)
    """
    reader = _Reader(data, _LineIndex(node))
    if not isinstance(data, dict):
        reader.fail((), "document must be a mapping")
    reader.mapping((), nii_dconf.scenario_keys
                   + nii_dconf.scenario_optional_keys)
    for key in nii_dconf.scenario_keys:
        reader.get((key,))

    n = reader.integer(('agents',), 2)
    delta = reader.number(('delta',), positive=True)
    window = reader.number(('window_T',), positive=True)
    horizon = reader.number(('horizon',), positive=True)
    dt = reader.number(('dt',), positive=True)
    t_start = reader.number(('t_start',), required=False)
    t_start = 0.0 if t_start is None else t_start
    x0 = reader.vector(('x0',), n)
    x_target = reader.vector(('x_target',), n)

    roots = None
    if reader.get(('root_set',), required=False) is not None:
        items = reader.sequence(('root_set',), nonempty=True)
        indices = [reader.integer(('root_set', idx), 1, n)
                   for idx in range(len(items))]
        if len(set(indices)) != len(indices):
            reader.fail(('root_set',), "duplicated agent index")
        roots = frozenset(nii_list_tools.f_to_zero_based(indices))

    schedule = _parse_schedule(reader, n, t_start)
    limit = schedule.min_dwell * nii_dyconf.max_dt_per_dwell
    if dt > limit:
        reader.fail(('dt',), "must not exceed half the shortest dwell "
                    "time ({:g})".format(limit))
    gains = _parse_gains(reader, n,
                         _RootSet(roots, schedule, delta, window))
    try:
        return Scenario(schedule, delta, window, x0, x_target, gains,
                        horizon, dt, roots, name)
    except DomainError as err:
        reader.fail((), str(err))


def parse_scenario(path):
    """ scenario = parse_scenario(path)

    input
    -----
      path: str, scenario YAML file

    output
    ------
      scenario: Scenario named after the file stem
    """
    try:
        _, data, node = nii_io_tk.read_yaml(path)
    except OSError as err:
        raise ScenarioParseError(path, "cannot read file: {}".format(
            err.strerror)) from err
    except yaml.YAMLError as err:
        mark = getattr(err, 'problem_mark', None)
        raise ScenarioParseError(
            '<document>', "malformed YAML: {}".format(
                getattr(err, 'problem', None) or err),
            None if mark is None else mark.line + 1) from err
    return f_scenario_from_document(data, node, f_scenario_stem(path))


def f_scenario_to_document(scenario):
    """ dic = f_scenario_to_document(scenario)
    Plain dictionary that f_scenario_from_document reads back unchanged
    """
    schedule = scenario.schedule
    graphs = []
    for snapshot, dwell in zip(schedule.snapshots, schedule.dwell_times):
        graphs.append({
            'dwell': dwell,
            'edges': [{'from': j + 1, 'to': i + 1, 'weight': w}
                      for i, j, w in snapshot.weights]})
    gains = {'kappa_lower': scenario.gains.kappa_lower,
             'k': list(scenario.gains.values)}
    if scenario.gains.pieces:
        gains['pieces'] = [{'start': t, 'k': list(vals)}
                           for t, vals in scenario.gains.pieces]
    doc = {'agents': scenario.n_agents,
           'delta': scenario.delta,
           'window_T': scenario.window_T,
           'horizon': scenario.horizon,
           'dt': scenario.dt,
           't_start': scenario.t_start}
    if scenario.root_set is not None:
        doc['root_set'] = nii_list_tools.f_to_one_based(scenario.root_set)
    doc['x0'] = list(scenario.x0)
    doc['x_target'] = list(scenario.x_target)
    doc['gains'] = gains
    doc['schedule'] = {'rotation': schedule.rotation, 'graphs': graphs}
    return doc


def serialize_scenario(scenario):
    """ text = serialize_scenario(scenario)
    """
    return yaml.safe_dump(f_scenario_to_document(scenario), sort_keys=False,
                          default_flow_style=None)


def write_scenario(scenario, file_path):
    nii_io_tk.write_yaml(f_scenario_to_document(scenario), file_path)
    return file_path


def f_parse_scenario_text(text, name='scenario'):
    """ scenario = f_parse_scenario_text(text, name)
    Same as parse_scenario on an in-memory document
    """
    try:
        data, node = yaml.safe_load(text), yaml.compose(text)
    except yaml.YAMLError as err:
        mark = getattr(err, 'problem_mark', None)
        raise ScenarioParseError(
            '<document>', "malformed YAML",
            None if mark is None else mark.line + 1) from err
    return f_scenario_from_document(data, node, name)


if __name__ == "__main__":
    print("Scenario document reader and writer")
