import pytest

from core_scripts.data_io.scenario_io import (f_parse_scenario_text,
                                              parse_scenario,
                                              serialize_scenario,
                                              write_scenario)
from core_scripts.dynamics.scenario import GainSchedule
from core_scripts.errors import ScenarioParseError
from tests.conftest import ROOTS_8, SCENARIO_8, TARGET_8

SMALL = """\
agents: 3
delta: 0.1
window_T: 2.0
horizon: 10.0
dt: 1e-3
root_set: [1]
x0: [1.0, -2.0, 3.0]
x_target: [0.0, 1.0, 2.0]
gains:
  kappa_lower: 0.5
  k: {set: S, value: 0.5}
schedule:
  rotation: cyclic
  graphs:
    - dwell: 1.0
      edges:
        - {from: 1, to: 2, weight: -1.0}
        - {from: 2, to: 3, weight: 0.5}
"""


def _parse_error(text):
    with pytest.raises(ScenarioParseError) as info:
        f_parse_scenario_text(text)
    return info.value


def test_bundled_scenario(scenario_8):
    assert scenario_8.n_agents == 8
    assert scenario_8.schedule.dwell_times == (2.0, 2.0, 3.0, 1.0, 2.0)
    assert scenario_8.schedule.rotation == 'rotating-cyclic'
    assert scenario_8.root_set == ROOTS_8
    assert scenario_8.x_target == TARGET_8
    assert scenario_8.gains.values == (0.6, 0.6, 0.6, 0, 0, 0, 0, 0)
    assert scenario_8.gains.kappa_lower == 0.6
    assert scenario_8.dt == 1e-3
    assert scenario_8.name == 'scenario_config_8agents'
    # from 1 to 2 with weight -1 sets a_21
    assert scenario_8.schedule.snapshots[0].weight(1, 0) == -1.0


def test_numeric_strings_are_numbers():
    scenario = f_parse_scenario_text(SMALL)
    assert scenario.dt == 1e-3
    assert scenario.gains.values == (0.5, 0.0, 0.0)


def test_explicit_gain_list_and_pieces():
    text = SMALL.replace(
        "  k: {set: S, value: 0.5}",
        "  k: [0.7, 0, 0]\n  pieces:\n    - {start: 4.0, k: [0.9, 0, 0]}")
    scenario = f_parse_scenario_text(text)
    assert scenario.gains == GainSchedule((0.7, 0, 0), 0.5,
                                          ((4.0, (0.9, 0, 0)),))


def test_zero_gain_on_root_cites_p2():
    text = SMALL.replace("  k: {set: S, value: 0.5}", "  k: [0.0, 0, 0]")
    err = _parse_error(text)
    assert 'P2' in str(err)
    assert err.key == 'gains'


def test_gain_outside_root_set_cites_p2():
    text = SMALL.replace("  k: {set: S, value: 0.5}", "  k: [0.5, 0.5, 0]")
    assert 'P2' in str(_parse_error(text))


def test_nonpositive_kappa_cites_p2():
    err = _parse_error(SMALL.replace("kappa_lower: 0.5", "kappa_lower: 0"))
    assert 'P2' in err.constraint
    assert err.line == 10


def test_self_loop_cites_a2():
    text = SMALL.replace("{from: 2, to: 3, weight: 0.5}",
                         "{from: 3, to: 3, weight: 0.5}")
    err = _parse_error(text)
    assert 'A2' in err.constraint
    assert err.line == 18
    assert err.key == 'schedule.graphs[0].edges[1]'


def test_dimension_mismatch_names_key_and_line():
    err = _parse_error(SMALL.replace("x0: [1.0, -2.0, 3.0]", "x0: [1.0]"))
    assert err.key == 'x0'
    assert err.line == 7
    assert 'line 7' in str(err)


@pytest.mark.parametrize('key, bad', [
    ('delta: 0.1', 'delta: -0.1'),
    ('window_T: 2.0', 'window_T: 0'),
    ('dt: 1e-3', 'dt: 0.0'),
    ('- dwell: 1.0', '- dwell: 0.0'),
])
def test_nonpositive_values_rejected(key, bad):
    err = _parse_error(SMALL.replace(key, bad))
    assert 'positive' in err.constraint


def test_dt_above_half_dwell():
    err = _parse_error(SMALL.replace("dt: 1e-3", "dt: 0.6"))
    assert err.key == 'dt'


def test_missing_and_unknown_keys():
    err = _parse_error(SMALL.replace("horizon: 10.0\n", ""))
    assert err.key == 'horizon'
    err = _parse_error(SMALL + "colour: blue\n")
    assert err.key == 'colour'


def test_set_gains_use_detected_root_set():
    scenario = f_parse_scenario_text(SMALL.replace("root_set: [1]\n", ""))
    assert scenario.root_set is None
    assert scenario.gains.values == (0.5, 0.0, 0.0)


def test_bundled_scenario_without_root_set(scenario_8):
    with open(SCENARIO_8) as file_ptr:
        lines = [x for x in file_ptr if not x.startswith('root_set:')]
    scenario = f_parse_scenario_text(''.join(lines))
    assert scenario.root_set is None
    assert scenario.gains == scenario_8.gains
    assert scenario == scenario_8.replace(root_set=None)


def test_set_gains_need_a_detectable_root_set():
    # agent 3 loses its only in-arc, so two components have no in-arcs
    text = SMALL.replace("root_set: [1]\n", "").replace(
        "        - {from: 2, to: 3, weight: 0.5}\n", "")
    err = _parse_error(text)
    assert err.key == 'gains.k'
    assert 'root_set' in err.constraint


def test_detected_root_set_drives_p2():
    text = SMALL.replace("root_set: [1]\n", "").replace(
        "  kappa_lower: 0.5\n  k: {set: S, value: 0.5}",
        "  kappa_lower: 0.5\n  k: {set: S, value: 0.5}\n  pieces:\n"
        "    - {start: 4.0, k: [0.5, 0.2, 0]}")
    err = _parse_error(text)
    assert err.key == 'gains'
    assert 'P2' in err.constraint


def test_agent_index_range():
    text = SMALL.replace("{from: 1, to: 2,", "{from: 4, to: 2,")
    err = _parse_error(text)
    assert err.key == 'schedule.graphs[0].edges[0].from'


def test_malformed_yaml():
    err = _parse_error("agents: [1, 2\n")
    assert 'malformed' in err.constraint


def test_missing_file(tmp_path):
    with pytest.raises(ScenarioParseError):
        parse_scenario(str(tmp_path / 'absent.yaml'))


def test_serialize_round_trip(scenario_8, tmp_path):
    again = f_parse_scenario_text(serialize_scenario(scenario_8))
    assert again == scenario_8
    path = write_scenario(scenario_8, str(tmp_path / 'copy.yaml'))
    assert parse_scenario(path) == scenario_8


def test_round_trip_with_pieces():
    text = SMALL.replace(
        "  k: {set: S, value: 0.5}",
        "  k: [0.7, 0, 0]\n  pieces:\n    - {start: 4.0, k: [0.9, 0, 0]}")
    scenario = f_parse_scenario_text(text)
    assert f_parse_scenario_text(serialize_scenario(scenario)) == scenario
