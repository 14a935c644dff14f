import json
from pathlib import Path

import pytest

from config.config_manager import CAP_ENV_VAR
from main import render, run

ROOT = Path(__file__).resolve().parent.parent

SIGMA1 = str(ROOT / 'conf' / 'surfaces' / 'sigma1.json')
DERIVATION = str(ROOT / 'conf' / 'derivations' / 'x_times_d_sigma0.json')


@pytest.fixture
def cli(config_file, capsys, monkeypatch):
    monkeypatch.delenv(CAP_ENV_VAR, raising=False)

    def invoke(*argv):
        code = run(['-c', str(config_file), *argv])
        captured = capsys.readouterr()
        return code, captured.out.rstrip('\n'), captured.err
    return invoke


@pytest.mark.parametrize("argv, expected", [
    (['normalize', 'Z^2'], "(X^2 - 1)*Y"),
    (['eval', '(Z + 1)^2'], "value: 2*Z + (X^2 - 1)*Y + 1\nin_kx: none"),
    (['eval', '(Z^2 - (X^2 - 1)*Y + X)^2'], "value: X^2\nin_kx: X^2"),
    (['derive', 'Y'], "2*Z"),
    (['derive', '--spec', DERIVATION, 'Z'], "X^3 - X"),
    (['kernel', 'X^5 - 3'], "true"),
    (['kernel', 'Z'], "false"),
    (['auto', 'apply', 'H[h=1]', 'Z'], "Z + X^2 - 1"),
    (['auto', 'equal', 'T[lambda=-1];T[lambda=-1]', 'id'], "true"),
    (['fadic', 'X^3'], "h0: X\nh1: X"),
    (['weight', '--mu', '1', '--nu', '5', 'Y'], "8"),
    (['leading', '--mu', '1', '--nu', '100', 'Y'], "(Z^2)/f"),
    (['nilpotency', 'Y'], "index: 3\ncap: 64"),
    (['--cap', '2', 'nilpotency', 'Y'], "index: none\ncap: 2"),
    (['classify-lnd', DERIVATION], "kind: LND_with_h\nh: X\nirreducible: false"),
    (['--surface', SIGMA1, 'decompose-unity', 'X^22 + 2*X^18 + X^10 - 2*X^2'], "i: 2\ns: 4\nh: X^5 + 2*X^4 + X^2 - 2"),
])
def test_commands(cli, argv, expected):
    code, out, _ = cli(*argv)
    assert code == 0
    assert out == expected


def test_cap_from_environment(cli, monkeypatch):
    monkeypatch.setenv(CAP_ENV_VAR, '1')
    assert cli('nilpotency', 'Y')[1] == "index: none\ncap: 1"
    assert cli('--cap', '5', 'nilpotency', 'Y')[1] == "index: 3\ncap: 5"


def test_auto_invert(cli):
    code, out, _ = cli('auto', 'invert', 'R[lambda=3]')
    assert code == 0
    assert "word: R[lambda=1/3]" in out.splitlines()
    assert "z: 1/3*Z" in out.splitlines()


def test_T_over_gaussian_field(cli):
    code, out, _ = cli('--surface', SIGMA1, '--modulus', 't^2 + 1', 'auto', 'make', 'T[lambda=t]')
    assert code == 0
    assert "y: -Y" in out.splitlines()


def test_center(cli, tmp_path):
    surface = tmp_path / 'shifted.json'
    surface.write_text(json.dumps({'f': 'X^2 + 2*X + 1', 'phi': 'Z^2'}), encoding='utf-8')
    code, out, _ = cli('--surface', str(surface), 'center')
    assert code == 0
    assert out.splitlines() == ["f: X^2", "phi: Z^2", "a: 0", "b: 1"]


def test_invariants_are_deterministic(cli):
    code, first, _ = cli('invariants')
    assert code == 0
    assert "ml_invariant: K[x]" in first.splitlines()
    assert "kernel_agreements: 20" in first.splitlines()
    assert cli('invariants')[1] == first


def test_example_check(cli):
    code, out, _ = cli('example-check')
    assert code == 0
    assert out.splitlines()[0] == "status: PASS"


def test_verify(cli):
    code, out, _ = cli('verify', '--suite', 'root_of_unity_identity')
    assert code == 0
    assert out.splitlines() == [
        "root_of_unity_identity: PASS trials=1 violations=0",
        "executed: 1",
        "passed: 1",
        "failed: 0",
        "status: PASS",
    ]


def test_domain_error_exit_code(cli):
    code, out, err = cli('auto', 'make', 'T[lambda=2]')
    assert code == 1
    assert out == ""
    assert err.splitlines()[-1].startswith("NotRootOfUnity:")


def test_not_applicable_exit_code(cli):
    code, _, err = cli('--surface', SIGMA1, 'auto', 'make', 'R[lambda=2]')
    assert code == 1
    assert "NotApplicable:" in err


@pytest.mark.parametrize("argv", [
    ['normalize', 'X +'],
    ['normalize', 'X^100000000'],
    ['auto', 'make', 'Q[h=1]'],
    ['no-such-command'],
    ['weight', 'Y'],
])
def test_usage_and_syntax_errors(cli, argv):
    assert cli(*argv)[0] == 2


def test_missing_surface_file(cli, tmp_path):
    code, _, err = cli('--surface', str(tmp_path / 'missing.json'), 'normalize', 'Z')
    assert code == 1
    assert "ConfigError:" in err


def test_json_output(cli):
    code, out, _ = cli('--output', 'json', 'normalize', 'Z^2')
    assert code == 0
    assert json.loads(out) == {'normal_form': "(X^2 - 1)*Y"}

    code, out, _ = cli('--output', 'json', 'auto', 'make', 'T[lambda=2]')
    assert code == 1
    assert json.loads(out)['error'] == 'NotRootOfUnity'


def test_render():
    assert render({'equal': True}, 'text') == "true"
    assert render({'index': None, 'cap': 4}, 'text') == "index: none\ncap: 4"
    assert json.loads(render({'index': None}, 'json')) == {'index': None}


def test_runs_outside_repository(tmp_path, monkeypatch, capsys):
    monkeypatch.chdir(tmp_path)
    monkeypatch.delenv(CAP_ENV_VAR, raising=False)
    assert run(['decompose-unity', 'X^2 - 1']) == 0
    assert capsys.readouterr().out.rstrip('\n') == "i: 0\ns: 2\nh: X - 1"
    assert run(['normalize', 'Z^2']) == 0
    assert capsys.readouterr().out.rstrip('\n') == "(X^2 - 1)*Y"
    assert (tmp_path / 'conf' / 'config.yaml').exists()


def test_relative_surface_file_in_config(tmp_path, monkeypatch, capsys):
    conf = tmp_path / 'conf'
    (conf / 'surfaces').mkdir(parents=True)
    (conf / 'surfaces' / 'sigma1.json').write_text(Path(SIGMA1).read_text(encoding='utf-8'), encoding='utf-8')
    (conf / 'config.yaml').write_text(
        "surface:\n  file: surfaces/sigma1.json\nlogging:\n  level: WARNING\n", encoding='utf-8')
    elsewhere = tmp_path / 'elsewhere'
    elsewhere.mkdir()
    monkeypatch.chdir(elsewhere)
    assert run(['-c', str(conf / 'config.yaml'), 'normalize', 'Z^3 + Z + 1']) == 0
    assert capsys.readouterr().out.rstrip('\n') == "(X^22 + 2*X^18 + X^10 - 2*X^2)*Y"
