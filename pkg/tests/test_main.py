"""
Command line: exit statuses and the files written per scenario
"""
import os
import shutil

import numpy as np
import pytest

import main
from core_scripts.data_io.io_tools import f_read_trajectory_csv
from core_scripts.data_io.report_io import read_report
from tests.conftest import SCENARIO_2

NO_ROOT = """\
agents: 3
delta: 0.1
window_T: 1.0
horizon: 2.0
dt: 0.01
x0: [1.0, 2.0, 3.0]
x_target: [0.0, 0.0, 0.0]
gains:
  kappa_lower: 0.5
  k: [0.5, 0.0, 0.0]
schedule:
  rotation: cyclic
  graphs:
    - dwell: 1.0
      edges:
        - {from: 1, to: 3, weight: 1.0}
"""

STIFF = """\
agents: 2
delta: 0.1
window_T: 1.0
horizon: 200.0
dt: 0.5
root_set: [1]
x0: [1.0, -1.0]
x_target: [0.0, 0.0]
gains:
  kappa_lower: 0.5
  k: [0.5, 0.0]
schedule:
  rotation: cyclic
  graphs:
    - dwell: 1.0
      edges:
        - {from: 1, to: 2, weight: 1.0e+6}
"""


# 1e-4 and 100 s dwells need more window starts than are supported
FINE_GRID = """\
agents: 2
delta: 0.1
window_T: 10.0
horizon: 1.0
dt: 1.0e-5
root_set: [1]
x0: [1.0, -1.0]
x_target: [0.0, 0.0]
gains:
  kappa_lower: 0.5
  k: [0.5, 0.0]
schedule:
  rotation: rotating-cyclic
  graphs:
    - dwell: 1.0e-4
      edges:
        - {from: 1, to: 2, weight: 1.0}
    - dwell: 100.0
      edges:
        - {from: 1, to: 2, weight: 1.0}
"""


@pytest.fixture
def two_agent_file(tmp_path):
    path = str(tmp_path / 'pair.yaml')
    shutil.copy(SCENARIO_2, path)
    return path


def _write(tmp_path, name, text):
    path = tmp_path / name
    path.write_text(text)
    return str(path)


def _run(*argv):
    return main.main(list(argv))


def test_simulate_writes_trajectory(two_agent_file, tmp_path):
    out = str(tmp_path / 'out')
    status = _run('simulate', '--scenario', two_agent_file, '--mode', 'open',
                  '--out', out, '--dt', '0.01', '--horizon', '2', '--quiet')
    assert status == 0
    header, data = f_read_trajectory_csv(
        os.path.join(out, 'pair', 'trajectory_open.csv'))
    assert header == ['t', 'x_1', 'x_2', 'u_1', 'u_2', 'h', 'c', 'h_e',
                      'c_e']
    assert data.shape == (201, 9)
    assert data[-1, 0] == 2.0
    np.testing.assert_array_equal(data[:, 2], 2.0)
    np.testing.assert_array_equal(data[:, 3:5], 0.0)
    assert os.path.isfile(os.path.join(out, 'pair', 'trajectory_open.svg'))


def test_simulate_without_plot(two_agent_file, tmp_path):
    out = str(tmp_path / 'out')
    assert _run('simulate', '--scenario', two_agent_file, '--mode', 'closed',
                '--out', out, '--horizon', '1', '--no-plot', '--quiet') == 0
    assert os.listdir(os.path.join(out, 'pair')) == ['trajectory_closed.csv']


def test_certify_statuses(two_agent_file, tmp_path):
    out = str(tmp_path / 'out')
    # at t = 5 the root error is still 3 exp(-2.5)
    assert _run('certify', '--scenario', two_agent_file, '--out', out,
                '--no-plot', '--quiet') == 4
    report = read_report(os.path.join(out, 'pair', 'certificate.yaml'))
    assert list(report) == ['structural', 'constants', 'inequalities',
                            'verdict']
    assert report['verdict']['exit_status'] == 4
    assert report['verdict']['kind'] == 'inequality'

    assert _run('certify', '--scenario', two_agent_file, '--out', out,
                '--horizon', '20', '--no-plot', '--quiet') == 0
    report = read_report(os.path.join(out, 'pair', 'certificate.yaml'))
    assert report['verdict']['passed']
    assert report['structural']['root_set'] == [2]
    assert report['constants']['K0'] == 1.0
    names = [x['name'] for x in report['inequalities']]
    assert 'contraction' in names
    for mode in ('open', 'closed'):
        assert os.path.isfile(os.path.join(
            out, 'pair', 'trajectory_{}.csv'.format(mode)))


def test_analyze_document(two_agent_file, tmp_path):
    out = str(tmp_path / 'out')
    assert _run('analyze', '--scenario', two_agent_file, '--out', out) == 0
    report = read_report(os.path.join(out, 'pair', 'analysis.yaml'))
    assert report['structural']['passed']
    assert report['structural']['d0'] == 1
    assert report['constants']['available']


def test_structural_failure(tmp_path):
    path = _write(tmp_path, 'loose.yaml', NO_ROOT)
    out = str(tmp_path / 'out')
    assert _run('analyze', '--scenario', path, '--out', out) == 3
    assert _run('certify', '--scenario', path, '--out', out,
                '--no-plot', '--quiet') == 3
    # simulate falls back to all agents as root set
    assert _run('simulate', '--scenario', path, '--mode', 'open',
                '--out', out, '--no-plot', '--quiet') == 0


def test_parse_error(tmp_path, capsys):
    path = _write(tmp_path, 'broken.yaml', "agents: [1, 2\n")
    assert _run('analyze', '--scenario', path,
                '--out', str(tmp_path / 'out')) == 2
    assert 'broken.yaml' in capsys.readouterr().err
    assert _run('analyze', '--scenario', str(tmp_path / 'absent.yaml'),
                '--out', str(tmp_path / 'out')) == 2


def test_bad_override_is_a_parse_error(two_agent_file, tmp_path):
    assert _run('simulate', '--scenario', two_agent_file, '--mode', 'open',
                '--dt', '0.9', '--out', str(tmp_path / 'out'),
                '--quiet') == 2


def test_divergence_writes_partial_csv(tmp_path):
    path = _write(tmp_path, 'stiff.yaml', STIFF)
    out = str(tmp_path / 'out')
    assert _run('simulate', '--scenario', path, '--mode', 'open',
                '--out', out, '--quiet') == 5
    _, data = f_read_trajectory_csv(
        os.path.join(out, 'stiff', 'trajectory_open.csv'))
    assert 0 < data.shape[0] < 401
    assert np.all(np.isfinite(data[:, 1:3]))


def test_several_scenarios_report_the_worst(two_agent_file, tmp_path):
    broken = _write(tmp_path, 'broken.yaml', "agents: 1\n")
    out = str(tmp_path / 'out')
    status = _run('analyze', '--scenario', two_agent_file, broken,
                  '--out', out, '--num-workers', '2')
    assert status == 2
    assert os.path.isfile(os.path.join(out, 'pair', 'analysis.yaml'))


def test_config_file(two_agent_file, tmp_path):
    config = _write(tmp_path, 'options.ini',
                    "[certify]\nfinal_threshold = 0.5\n")
    out = str(tmp_path / 'out')
    assert _run('certify', '--scenario', two_agent_file, '--out', out,
                '--config', config, '--no-plot', '--quiet') == 0
    assert _run('certify', '--scenario', two_agent_file, '--out', out,
                '--config', str(tmp_path / 'absent.ini'), '--quiet') == 2


def test_missing_subcommand():
    with pytest.raises(SystemExit):
        main.main([])


def test_unsupported_schedule_is_structural(tmp_path, capsys):
    path = _write(tmp_path, 'fine.yaml', FINE_GRID)
    out = str(tmp_path / 'out')
    assert _run('analyze', '--scenario', path, '--out', out) == 3
    assert 'window starts' in capsys.readouterr().err
    assert _run('certify', '--scenario', path, '--out', out,
                '--no-plot', '--quiet') == 3
    assert 'window starts' in capsys.readouterr().err
    assert _run('simulate', '--scenario', path, '--mode', 'open',
                '--out', out, '--no-plot', '--quiet') == 3


def test_unsupported_schedule_in_a_batch(two_agent_file, tmp_path):
    path = _write(tmp_path, 'fine.yaml', FINE_GRID)
    out = str(tmp_path / 'out')
    status = _run('analyze', '--scenario', two_agent_file, path,
                  '--out', out, '--num-workers', '2', '--quiet')
    assert status == 3
    assert os.path.isfile(os.path.join(out, 'pair', 'analysis.yaml'))
