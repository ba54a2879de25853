import io
import json
import subprocess
import sys

import pytest

from frobcoh import algfile
from frobcoh.cli import run_command


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code, report = run_command(list(argv), out, err)
    return code, out.getvalue(), err.getvalue(), report


def test_check_complex_json():
    code, text, _, _ = run("check", "--builtin", "complex", "--json")
    assert code == 0
    doc = json.loads(text)
    assert set(doc) == {"command", "algebra", "field", "results", "version"}
    assert doc["results"]["delta0"] == "2"
    assert doc["results"]["symmetric"] is True


def test_cohomology_z2_gf2():
    code, text, _, _ = run("cohomology", "--builtin", "group:Z2", "--field", "GF2",
                           "--max-degree", "2", "--json")
    assert code == 0
    deg = json.loads(text)["results"]["degrees"]
    assert deg["1"]["H"] == 1
    assert deg["2"]["Z"] == 6
    assert deg["2"]["H"] == deg["2"]["Z"] - deg["2"]["B"]


def test_skein_case_i_without_scalar_handle():
    code, text, _, report = run("ybe", "--builtin", "poly:2", "--construction", "skein", "--case", "i")
    assert code == 1
    assert report["results"]["error"] == "NoScalarHandle"
    assert "NoScalarHandle" in text


def test_case_ii_z2():
    code, text, _, _ = run("ybe", "--builtin", "group:Z2", "--construction", "skein",
                           "--case", "ii", "--C", "1", "--T", "1", "--json")
    assert code == 0
    sol = json.loads(text)["results"]["solutions"][0]
    assert sol["inverse"]["C"] == "-1/3" and sol["inverse"]["T"] == "1"
    assert sol["ybe"] and sol["inverse_ok"]


def test_ybe_failure_exits_1_with_witness():
    code, _, _, report = run("ybe", "--builtin", "poly:2", "--construction", "skein",
                             "--A", "1", "--C", "1", "--json")
    assert code == 1
    assert report["results"]["ybe"] is False
    assert "witness" in report["results"]


@pytest.mark.parametrize("argv", [
    ["check", "--builtin", "nope"],
    ["check", "--builtin", "complex", "--field", "GF2"],
    ["check", "--builtin", "poly:0"],
    ["check", "--file", "/nonexistent.frob"],
    ["cohomology", "--builtin", "qpoly:i", "--max-degree", "3"],
    ["frobnicate"],
    ["check"],
])
def test_input_errors_exit_2(argv):
    code, _, err, _ = run(*argv)
    assert code == 2
    assert "Traceback" not in err


def test_math_error_exit_1():
    code, _, _, report = run("deform", "--builtin", "group:S3")
    assert code == 1 and report["results"]["error"] == "NotCommutative"


def test_json_deterministic():
    argv = ("deform", "--builtin", "group:Z2", "--sample", "3", "--seed", "5", "--json")
    first = run(*argv)[1]
    assert first == run(*argv)[1]
    assert json.dumps(json.loads(first), sort_keys=True, indent=2) + "\n" == first


def test_table_and_json_agree():
    _, table, _, _ = run("check", "--builtin", "group:Z2")
    _, js, _, _ = run("check", "--builtin", "group:Z2", "--json")
    assert "delta0" in table and json.loads(js)["results"]["delta0"] in table


def test_file_matches_builtin():
    path = str(algfile.DATA_DIR / "z2.frob")
    _, a, _, _ = run("cohomology", "--file", path, "--json")
    _, b, _, _ = run("cohomology", "--builtin", "group:Z2", "--json")
    assert json.loads(a)["results"] == json.loads(b)["results"]


def test_fmt(tmp_path):
    src = tmp_path / "z2.frob"
    src.write_text("field Q\nbasis 1 x\nunit 1\nmul x x = 1 # square\nmul 1 1 = 1\n"
                   "mul 1 x = x\nmul x 1 = x\ncounit 1 = 1\ncounit x = 0\n")
    assert run("fmt", str(src), "--check")[0] == 1
    code, text, _, _ = run("fmt", str(src))
    assert code == 0 and text == (algfile.DATA_DIR / "z2.frob").read_text()
    assert run("fmt", str(src), "--write")[0] == 0
    assert run("fmt", str(src), "--check")[0] == 0
    bad = tmp_path / "bad.frob"
    bad.write_text("field GF 4\n")
    code, _, err, _ = run("fmt", str(bad))
    assert code == 2 and "line 1" in err


def test_console_script():
    proc = subprocess.run([sys.executable, "-m", "frobcoh.cli", "check", "--builtin", "complex"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and "delta0" in proc.stdout
