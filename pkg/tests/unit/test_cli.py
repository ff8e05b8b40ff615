import json
from unittest.mock import patch

import pytest

from nvdd import cli
from nvdd.errors import ShiftFailed
from nvdd.wire import decode_upstream


def run(capsys, *argv):
    code = cli.main(list(argv))
    return code, capsys.readouterr().out


def test_anonymize_json(capsys):
    code, out = run(capsys, 'anonymize', '--model', 'III', '--n', '6', '--x', '5000',
                    '--y', '4000', '--r', '1000', '--seed', '7')
    assert code == cli.EXIT_OK
    doc = json.loads(out)
    assert doc['model'] == 'III'
    assert doc['n'] == 6
    assert doc['seed'] == [5000.0, 4000.0]
    assert doc['trace'] == ['S0', 'P2', 'R1', 'P1', 'R0']
    assert len(doc['concealing']) == 6
    assert doc['psi'] >= doc['gamma'] > 0
    assert doc['upstream_bytes'] == 48 + 8 * 6
    assert len(bytes.fromhex(doc['upstream_hex'])) == doc['upstream_bytes']


def test_anonymize_is_reproducible(capsys):
    _, first = run(capsys, 'anonymize', '--seed', '3')
    _, second = run(capsys, 'anonymize', '--seed', '3')
    assert first == second


def test_anonymize_square_cell_hides_in_whole_cell(capsys):
    _, out = run(capsys, 'anonymize', '--n', '4')
    doc = json.loads(out)
    assert doc['psi'] == pytest.approx(doc['gamma'])


def test_anonymize_hex(capsys):
    code, out = run(capsys, 'anonymize', '--n', '5', '--uid', '99', '--category', '4',
                    '--format', 'hex')
    assert code == cli.EXIT_OK
    assert out.endswith('\n')
    query = decode_upstream(bytes.fromhex(out.strip()))
    assert (query.uid, query.poi_category, query.n) == (99, 4, 5)


def test_anonymize_svg_to_file(capsys, tmp_path):
    path = tmp_path / 'scene.svg'
    code, out = run(capsys, 'anonymize', '--format', 'svg', '--out', str(path))
    assert code == cli.EXIT_OK
    assert out == ''
    assert path.read_text().startswith('<?xml')


def test_render(capsys):
    code, out = run(capsys, 'render', '--model', 'IIIa', '--n', '7', '--kappa', '0.1')
    assert code == cli.EXIT_OK
    assert 'id="zone"' in out


def test_sweep_to_stdout(capsys):
    code, out = run(capsys, 'sweep', '--model', 'I', '--n', '5', '--r', '1000',
                    '--iterations', '2')
    assert code == cli.EXIT_OK
    lines = out.splitlines()
    assert lines[0] == 'model,n,kappa,r,mean_psi,mean_gamma,mean_ratio,upstream_bytes,' \
                       'trials,failures'
    assert len(lines) == 2
    assert lines[1].startswith('I,5,0,1000,')


def test_attack_to_file(capsys, tmp_path):
    path = tmp_path / 'attack.csv'
    code, out = run(capsys, 'attack', '--n', '5', '--iterations', '3', '--out', str(path))
    assert code == cli.EXIT_OK
    lines = path.read_text().splitlines()
    assert len(lines) == 2
    assert lines[1].startswith('II,5,3,')
    assert 'circle_hit_fraction' in out


def test_compare(capsys):
    code, out = run(capsys, 'compare', '--n', '5', '--iterations', '1')
    assert code == cli.EXIT_OK
    assert [line.split(',')[0] for line in out.splitlines()[1:]] == ['I', 'nCD']


def test_config_file_supplies_defaults(capsys, tmp_path):
    path = tmp_path / 'nvdd.properties'
    path.write_text('kind = II\nvertices = 7\n')
    _, out = run(capsys, 'anonymize', '--config', str(path))
    doc = json.loads(out)
    assert (doc['model'], doc['n']) == ('II', 7)
    _, out = run(capsys, 'anonymize', '--config', str(path), '--n', '5')
    assert json.loads(out)['n'] == 5


@pytest.mark.parametrize('argv', [
    [],
    ['anonymize', '--model', 'IV'],
    ['anonymize', '--n', 'five'],
    ['anonymize', '--n', '2'],
    ['anonymize', '--r', '-5'],
    ['sweep', '--iterations', '0'],
])
def test_usage_errors(capsys, argv):
    assert cli.main(argv) == cli.EXIT_USAGE


def test_unknown_model_in_config_file(capsys, tmp_path):
    path = tmp_path / 'nvdd.properties'
    path.write_text('model = IV\n')
    assert cli.main(['anonymize', '--config', str(path)]) == cli.EXIT_USAGE


def test_runtime_failure(capsys):
    with patch('nvdd.cli.anonymize_query', side_effect=ShiftFailed('no draw')):
        assert cli.main(['anonymize']) == cli.EXIT_FAILURE


def test_unwritable_output(capsys, tmp_path):
    path = tmp_path / 'missing' / 'out.json'
    assert cli.main(['anonymize', '--out', str(path)]) == cli.EXIT_FAILURE


def test_conflicting_options_in_config_file(tmp_path):
    path = tmp_path / 'nvdd.properties'
    path.write_text('n = 5\nvertices = 7\n')
    assert cli.main(['anonymize', '--config', str(path)]) == cli.EXIT_USAGE
