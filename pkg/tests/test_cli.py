import json
import subprocess
import sys

import pytest

from fregdeform import cli, family


def call(capsys, *argv):
    code = cli.run(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def strip_timings(reports):
    for r in reports:
        del r["timings"]
    return reports


def fresh_process(*argv):
    proc = subprocess.run([sys.executable, "-m", "fregdeform", *argv], capture_output=True, text=True)
    return proc.returncode, proc.stdout


def test_list_claims_matches_catalog(capsys):
    code, out, _ = call(capsys, "list-claims")
    assert code == 0
    rows = json.loads(out)
    assert [r["claim"] for r in rows] == list(family.CLAIMS)
    assert all(r["statement"] for r in rows)


def test_verify_json_round_trip(capsys):
    code, out, _ = call(capsys, "verify", "lemma-4.2", "--p", "5", "--m", "4", "--n", "3", "--k", "2")
    assert code == 0
    (rep,) = json.loads(out)
    assert rep["claim"] == "lemma-4.2" and rep["verdict"] == "verified"
    assert rep["witnesses"]["exponent"] == 17
    assert "wall_seconds" in rep["timings"]


def test_output_deterministic_apart_from_timings():
    argv = ("sweep", "--m", "4", "--n", "3", "--primes", "3,5")
    _, a = fresh_process(*argv)
    _, b = fresh_process(*argv)
    assert strip_timings(json.loads(a)) == strip_timings(json.loads(b))


def test_bundle_at_flagship_prime(capsys):
    code, out, _ = call(capsys, "verify", "thm-1.1", "--p", "17", "--m", "4", "--n", "3", "--k", "2")
    assert code == 0
    (rep,) = json.loads(out)
    assert rep["claim"] == "thm-1.1-bundle" and rep["verdict"] == "verified"
    assert [p["verdict"] for p in rep["witnesses"]["parts"]] == ["verified"] * 5


def test_prefix_resolution(capsys):
    assert cli.resolve_claim("thm-1.1") == "thm-1.1-bundle"
    assert cli.resolve_claim("lemma-4.2") == "lemma-4.2"
    code, _, err = call(capsys, "verify", "prop-4", "--p", "5", "--m", "4", "--n", "3")
    assert code == 2 and "unknown claim" in err


def test_invalid_instance_exit_code(capsys):
    code, out, _ = call(capsys, "verify", "lemma-4.2", "--p", "5", "--m", "3", "--n", "3", "--k", "1")
    assert code == 5
    assert json.loads(out)[0]["verdict"] == "invalid-instance"


def test_usage_errors(capsys):
    assert call(capsys, "verify", "lemma-4.2", "--p", "5")[0] == 2
    assert call(capsys, "verify", "lemma-4.2", "--p", "6", "--m", "4", "--n", "3", "--k", "2")[0] == 2
    assert call(capsys, "divisor", "dims", "--E", "1/2")[0] == 2
    assert call(capsys, "divisor", "dims", "--E=-1@P")[0] == 2
    with pytest.raises(SystemExit) as info:
        cli.run(["frobnicate"])
    assert info.value.code == 2


def test_budget_exit_code(capsys):
    code, _, err = call(capsys, "gb", "basis", "--m", "4", "--n", "3", "--p", "17",
                        "--ideal", "a^17; d^17", "--budget", "50")
    assert code == 3 and "budget" in err


def test_divisor_dims(capsys):
    code, out, _ = call(capsys, "divisor", "dims", "--E", "1/2@VX, 1/2@VY, 1/4@VXY")
    assert code == 0
    dims = json.loads(out)["section_dims"]
    assert len(dims) == 21 and all(isinstance(d, int) for d in dims)


def test_divisor_other_actions(capsys):
    E = "1/2@VX, 1/2@VY, 1/4@VXY"
    out = json.loads(call(capsys, "divisor", "floor", "--E", E)[1])
    assert out["floor_degree"] == 0 and out["h0"] == 1
    out = json.loads(call(capsys, "divisor", "identity", "--E", E, "--range=-5,5")[1])
    assert out["holds"] and out["failures"] == []
    out = json.loads(call(capsys, "divisor", "heuristic", "--E", E, "--p", "5")[1])
    assert out["k_plus_fractional_degree"] == "-1/4"
    assert out["p_multiple_degree"] == "-5/4"


def test_gb_commands(capsys):
    out = json.loads(call(capsys, "gb", "basis", "--vars", "x,y", "--ideal", "x^2; x*y + y^2",
                          "--order", "lex")[1])
    assert set(out["basis"]) == {"x^2", "x*y + y^2", "y^3"}
    out = json.loads(call(capsys, "gb", "member", "--m", "4", "--n", "3", "--p", "17",
                          "--ideal", "a; d", "--poly", "b^3*t^3")[1])
    assert out["member"] is False
    out = json.loads(call(capsys, "gb", "dim", "--m", "4", "--n", "3", "--p", "5")[1])
    assert out["dimension"] == 3
    out = json.loads(call(capsys, "gb", "hilbert", "--vars", "x", "--ideal", "x^2", "--p", "5",
                          "--up-to", "3")[1])
    assert out["hilbert_function"] == [1, 1, 0, 0]


def test_text_format_and_out_file(capsys, tmp_path):
    target = tmp_path / "report.txt"
    code, out, _ = call(capsys, "sweep", "--m", "4", "--n", "3", "--primes", "3,5",
                        "--format", "text", "--out", str(target))
    assert code == 0 and out == ""
    lines = target.read_text().splitlines()
    assert len(lines) == 2 and all("verified" in line for line in lines)


def test_module_entry_point():
    code, out = fresh_process("list-claims", "--format", "text")
    assert code == 0
    assert len(out.splitlines()) == len(family.CLAIMS)
