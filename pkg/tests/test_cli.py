import json
import subprocess
import sys

import pytest

from flagaut.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_aut_json_c3(capsys):
    code, out, _ = run(capsys, "aut", "C3:p3:a1:T,a2:G1", "--json")
    assert code == 0
    rep = json.loads(out)
    assert rep["schema"] == 1
    assert set(rep) >= {"input", "normal_form", "phi", "picard_rank", "aut", "notes"}
    assert rep["aut"]["infinitesimal"] == {"hat": "A5", "m": 1}
    assert rep["aut"]["lie_dim"] == 35


def test_aut_q2(capsys):
    code, out, _ = run(capsys, "aut", "G2:p2:Q2", "--json")
    rep = json.loads(out)
    assert code == 0 and rep["aut"]["lie_dim"] == 14 and rep["aut"]["is_reduced"] is True


def test_verify_mu_incidence(capsys):
    code, out, _ = run(capsys, "verify", "mu-incidence", "--case", "bn-frob", "--n", "2", "--m", "1")
    assert code == 0 and "preserved: false" in out
    code, out, _ = run(capsys, "verify", "mu-incidence", "--case", "g2-so7", "--identity")
    assert code == 0 and "preserved: true" in out


@pytest.mark.parametrize("argv", [["aut", "C3:p3:a1:X"], ["aut", "C3"], ["nonsense"], ["aut"],
                                  ["verify", "frobnicate"]])
def test_parse_errors_exit_1(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 1 and "error" in err


@pytest.mark.parametrize("argv,name", [
    (["aut", "B3:p3:a1:N0"], "no-very-special-isogeny"),
    (["aut", "B3:p3:Q1"], "no-exotic"),
    (["contract", "C3:p3:a1:T", "--alpha", "2"], "not-a-factor"),
    (["verify", "mu-incidence", "--case", "bn-veryspecial", "--base", "literal"], "bad-scenario"),
])
def test_domain_errors_exit_2(capsys, argv, name):
    code, out, err = run(capsys, *argv, "--json")
    assert code == 2
    assert json.loads(out)["error"] == name and name in err


@pytest.mark.parametrize("spec", ["C3:p3:a2:G1,a1:T", "G2:p2:Q1*F1,a2:G2", "B3:p2:a3:T,a1:N1",
                                  "G2:p3:a2:T,a1:G1", "A4:p5:a2:G2"])
def test_json_roundtrip(capsys, spec):
    _, out, _ = run(capsys, "classify", spec, "--json")
    first = json.loads(out)
    _, out, _ = run(capsys, "classify", first["normal_form"], "--json")
    second = json.loads(out)
    first.pop("input"), second.pop("input")
    assert first == second


def test_other_subcommands(capsys, tmp_path):
    assert run(capsys, "phi", "G2:p2:Q1")[0] == 0
    code, out, _ = run(capsys, "contract", "C3:p5:a1:T,a2:G1")
    assert code == 0 and "C3:p5:a2:G1" in out
    code, out, _ = run(capsys, "chain", "B3", "2", "--compare", "N0", "G1", "--json")
    rep = json.loads(out)
    assert rep["compare"] == -1 and rep["composition_is_frobenius"]
    code, out, _ = run(capsys, "verify", "exotic", "--json")
    assert json.loads(out)["dims"] == [10, 11]
    code, out, _ = run(capsys, "verify", "normalizer", "--n", "3", "--json")
    assert json.loads(out)["dim_normalizer_mod_center"] == 21
    path = tmp_path / "r.json"
    assert run(capsys, "aut", "A2:p2:a1:T", "-o", str(path))[0] == 0
    assert json.loads(path.read_text())["aut"]["reduced_type"] == "A2"
    code, out, _ = run(capsys, "catalog", "--list")
    assert code == 0 and len(out.splitlines()) >= 500


def test_catalog_subset(capsys):
    code, out, _ = run(capsys, "catalog", "--criteria", "1", "3")
    assert code == 0
    assert out.count("[PASS]") == 2


def test_module_entry_point():
    r = subprocess.run([sys.executable, "-m", "flagaut", "aut", "G2:p2:Q1,a2:G1"],
                       capture_output=True, text=True)
    assert r.returncode == 0 and "1(A5)·G2" in r.stdout
