import json
import subprocess
import sys

import pytest


def run_cli(*args, env_extra=None):
    import os
    env = dict(os.environ)
    if env_extra:
        env.update(env_extra)
    proc = subprocess.run([sys.executable, "-m", "umzv.cli", *args],
                          capture_output=True, text=True, env=env)
    return proc


def test_zeta_json_and_determinism():
    a = run_cli("zeta", "--r", "3", "--index", "2", "--prec", "20")
    b = run_cli("zeta", "--r", "3", "--index", "2", "--prec", "20")
    assert a.returncode == 0
    assert a.stdout == b.stdout  # byte-identical for identical config
    payload = json.loads(a.stdout)
    assert payload["command"] == "zeta"
    v = payload["value"]
    assert v["uniformizer"] == "1/theta" and v["prec"] == 20
    assert v["coeffs"][0] == [1]  # zeta_A(2) = 1 + ...


def test_zeta_u_json():
    p = run_cli("zeta-u", "--r", "3", "--index", "2,1", "--nmax", "2",
                "--prec", "25")
    assert p.returncode == 0
    payload = json.loads(p.stdout)
    assert len(payload["gammas"]) == 3
    assert payload["step"] == 2
    assert payload["schema_version"] == 1


def test_finite_zeta_csv():
    p = run_cli("finite-zeta", "--r", "2", "--index", "1", "--dmax", "3",
                "--format", "csv")
    assert p.returncode == 0
    lines = p.stdout.strip().splitlines()
    assert lines[0] == "v,value"
    assert len(lines) == 1 + 5  # 5 monic irreducibles of degree <= 3 over F_2


def test_t_expansion_command():
    p = run_cli("t-expansion", "--r", "3", "--index", "1", "--terms", "8")
    payload = json.loads(p.stdout)
    assert payload["coeffs"][0] == [[1]]
    assert len(payload["coeffs"]) == 8


def test_unknown_suite_error_record():
    p = run_cli("verify", "--suite", "nope")
    assert p.returncode == 2
    payload = json.loads(p.stdout)
    assert payload["error"]["type"] == "UnknownSuite"


def test_verify_suite_runs_and_exit_code():
    p = run_cli("verify", "--suite", "vanishing-reven", "--r", "3")
    assert p.returncode == 0
    payload = json.loads(p.stdout)
    assert payload["pass"] is True
    assert all(c["pass"] for c in payload["cases"])


def test_env_override():
    p = run_cli("zeta", "--index", "2",
                env_extra={"CARLITZ_R": "2", "CARLITZ_PREC": "12"})
    payload = json.loads(p.stdout)
    assert payload["r"] == 2
    assert payload["value"]["prec"] == 12


def test_flag_beats_env_and_config(tmp_path):
    cfgfile = tmp_path / "cfg.json"
    cfgfile.write_text(json.dumps({"r": 2, "prec": 10}))
    p = run_cli("zeta", "--index", "1", "--config", str(cfgfile),
                "--prec", "15", env_extra={"CARLITZ_PREC": "11"})
    payload = json.loads(p.stdout)
    assert payload["r"] == 2          # from config file
    assert payload["value"]["prec"] == 15  # flag wins over env and file


def test_output_file(tmp_path):
    out = tmp_path / "z.json"
    p = run_cli("zeta", "--r", "2", "--index", "1", "--prec", "10",
                "--out", str(out))
    assert p.returncode == 0 and p.stdout == ""
    payload = json.loads(out.read_text())
    assert payload["command"] == "zeta"
