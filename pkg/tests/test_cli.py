import json

import pytest
from click.testing import CliRunner

from embed3.cli import main
from embed3.constants import ExitCode
from embed3.corpus import corpus
from embed3.utils.serializer import write_json


@pytest.fixture
def runner(tmp_path, monkeypatch):
    monkeypatch.setenv('XDG_CONFIG_HOME', str(tmp_path / 'config'))
    monkeypatch.setenv('XDG_CACHE_HOME', str(tmp_path / 'cache'))
    monkeypatch.setattr('platform.system', lambda: 'Linux')
    monkeypatch.setattr('embed3.config.main._config_instances', {})
    return CliRunner()


@pytest.fixture
def complex_file(tmp_path):

    def write(name):
        path = tmp_path / f'{name}.json'
        write_json(str(path), corpus(name).to_dict())
        return str(path)

    return write


def test_corpus(runner):
    result = runner.invoke(main, ['corpus', 'tetrahedron'])
    assert result.exit_code == 0
    doc = json.loads(result.output)
    assert len(doc['faces']) == 4

    result = runner.invoke(main, ['corpus', 'sphere'])
    assert result.exit_code == ExitCode.InputError
    assert 'Unknown corpus name' in result.output


def test_check_and_verify(runner, complex_file, tmp_path):
    cert = str(tmp_path / 'cert.json')
    result = runner.invoke(main, ['check', complex_file('octahedron'), '-k', 'gf3',
                                  '--certificate', cert])
    assert result.exit_code == ExitCode.Certified
    assert 'EMBEDDABLE_CERTIFIED over gf3' in result.output

    result = runner.invoke(main, ['verify', cert])
    assert result.exit_code == 0
    assert 'Certificate valid' in result.output


def test_check_exit_codes(runner, complex_file, tmp_path):
    result = runner.invoke(main, ['check', complex_file('cone(K5)')])
    assert result.exit_code == ExitCode.HypothesisFailed

    result = runner.invoke(main, ['check', complex_file('torus7')])
    assert result.exit_code == ExitCode.Inconclusive

    result = runner.invoke(main, ['check', str(tmp_path / 'missing.json')])
    assert result.exit_code == ExitCode.IOError

    result = runner.invoke(main, ['check', complex_file('tetrahedron'), '-k', 'gf4'])
    assert result.exit_code == ExitCode.InputError
    assert 'Unknown field' in result.output

    bad = tmp_path / 'bad.json'
    bad.write_text('{"vertices": [0, 1], "edges": [["a", 0, 0]], "faces": []}')
    result = runner.invoke(main, ['check', str(bad)])
    assert result.exit_code == ExitCode.InputError


def test_check_structured(runner, complex_file):
    result = runner.invoke(main, ['check', complex_file('cone(K5)'), '--format',
                                  'structured'])
    doc = json.loads(result.output)
    assert doc['status'] == 'HYPOTHESIS_FAILED'
    assert doc['exit_code'] == result.exit_code == 2


def test_check_structured_errors(runner, complex_file, tmp_path):
    result = runner.invoke(main, ['check', str(tmp_path / 'missing.json'), '--format',
                                  'structured'])
    assert result.exit_code == ExitCode.IOError
    doc = json.loads(result.output)
    assert doc['format'] == 'embed3-report'
    assert doc['status'] is None
    assert doc['exit_code'] == ExitCode.IOError
    assert doc['error']['type'] == 'FileError'
    assert doc['error']['title'].startswith('Cannot access')

    result = runner.invoke(main, ['check', complex_file('tetrahedron'), '-k', 'gf4',
                                  '--format', 'structured'])
    assert result.exit_code == ExitCode.InputError
    doc = json.loads(result.output)
    assert doc['exit_code'] == ExitCode.InputError
    assert doc['error']['type'] == 'InputError'
    assert doc['error']['title'] == 'Unknown field'
    assert 'Embed3Error' in doc['error']['inherits']


def test_check_cross_field(runner, complex_file):
    result = runner.invoke(main, ['check', complex_file('tetrahedron'), '--cross-field'])
    assert result.exit_code == 0
    assert 'dual matroids are pairwise isomorphic' in result.output


def test_verify_rejects_garbage(runner, tmp_path):
    path = tmp_path / 'cert.json'
    path.write_text('{"format": "something"}')
    result = runner.invoke(main, ['verify', str(path)])
    assert result.exit_code == ExitCode.InputError
    assert 'Not a certificate' in result.output


def test_matroid(runner, complex_file, tmp_path):
    result = runner.invoke(main, ['matroid', complex_file('octahedron'), '--realize'])
    assert result.exit_code == 0
    assert 'Rank:        1' in result.output
    assert 'Graphic, realized by 2 vertices' in result.output

    path = tmp_path / 'u24.json'
    path.write_text(json.dumps({'field': 'gf3', 'columns': ['a', 'b', 'c', 'd'],
                                'rows': [[1, 0, 1, 1], [0, 1, 1, 2]]}))
    result = runner.invoke(main, ['matroid', str(path), '--realize'])
    assert result.exit_code == ExitCode.NotEmbeddable
    assert 'Not graphic.' in result.output


def test_maclane(runner, complex_file):
    result = runner.invoke(main, ['maclane', complex_file('tetrahedron'), '-k', 'rational'])
    assert result.exit_code == 0
    assert 'Sparse generating set with 2 vectors over rational' in result.output


def test_log_level_and_configs(runner):
    result = runner.invoke(main, ['log', 'level'])
    assert result.output == 'Log level: INFO\n'

    result = runner.invoke(main, ['log', 'level', 'DEBUG'])
    assert result.exit_code == 0
    result = runner.invoke(main, ['log', 'level'])
    assert result.output == 'Log level: DEBUG\n'

    result = runner.invoke(main, ['configs'])
    assert result.output == 'embed3\n'

    result = runner.invoke(main, ['log', 'clear'])
    assert result.output == 'Cleared the log.\n'


def test_about(runner):
    result = runner.invoke(main, ['about'])
    assert result.exit_code == 0
    assert 'Version:' in result.output
