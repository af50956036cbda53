"""Command line behavior: formats, exit codes, determinism."""

import json
import subprocess
import sys

import pytest

from nwgb import polynomial_from_json
from nwgb.cli import main
from nwgb.polynomials import determinant


def run_cli(args):
    proc = subprocess.run(
        [sys.executable, "-m", "nwgb", *args],
        capture_output=True,
        text=True,
    )
    return proc.returncode, proc.stdout, proc.stderr


def write_spec(tmp_path, name, data):
    path = tmp_path / name
    path.write_text(json.dumps(data))
    return str(path)


@pytest.fixture
def spec_231(tmp_path):
    return write_spec(tmp_path, "s231.json", {"n": 3, "permutation": "2 3 1"})


@pytest.fixture
def spec_312(tmp_path):
    return write_spec(tmp_path, "s312.json", {"n": 3, "permutation": "3 1 2"})


def test_diagram_text(capsys):
    assert main(["diagram", "2 1 4 3"]) == 0
    out = capsys.readouterr().out
    assert "e 1 . ." in out
    assert "essential: (1,1) rank 0; (3,3) rank 2" in out
    assert out.rstrip().endswith("1 2 3 4")


def test_diagram_json(capsys):
    assert main(["diagram", "2 1 4 3", "--format=json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["diagram"] == {"cells": [[1, 1], [3, 3]]}


def test_diagram_parse_error_exits_2(capsys):
    assert main(["diagram", "1 1 2"]) == 2
    assert "error" in capsys.readouterr().err


def test_fulton_text(spec_231, capsys):
    assert main(["fulton", spec_231]) == 0
    assert capsys.readouterr().out == "1*m[1,1]\n1*m[2,1]\n"


def test_fulton_identity_empty(tmp_path, capsys):
    path = write_spec(tmp_path, "id.json", {"n": 3, "permutation": "1 2 3"})
    assert main(["fulton", path]) == 0
    assert capsys.readouterr().out == ""


def test_fulton_missing_file(capsys):
    assert main(["fulton", "/no/such/file.json"]) == 2


def test_fulton_bad_spec(tmp_path, capsys):
    path = write_spec(tmp_path, "bad.json", {"n": 3, "permutation": "1 1 2"})
    assert main(["fulton", path]) == 2


def test_groebner_subcommand(spec_231, capsys):
    # reduced basis prints in ascending leading-monomial order
    assert main(["groebner", spec_231]) == 0
    assert capsys.readouterr().out == "1*m[2,1]\n1*m[1,1]\n"


def test_union_text_output(spec_231, spec_312, capsys):
    assert main(["union", spec_231, spec_312]) == 0
    assert capsys.readouterr().out == (
        "1*m[1,1]\n1*m[1,1]*m[1,2]\n1*m[1,1]*m[2,1]\n1*m[1,2]*m[2,1]\n"
    )


def test_union_json_round_trip(spec_231, spec_312, capsys):
    assert main(["union", spec_231, spec_312, "--format=json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert len(data) == 4
    assert data[3]["factors"] == [
        {"rows": [1], "cols": [2]},
        {"rows": [2], "cols": [1]},
    ]
    polys = [polynomial_from_json(entry["poly"]) for entry in data]
    assert polys[0] == determinant([1], [1])


def test_union_membership_verification(spec_231, spec_312, capsys):
    assert main(["union", spec_231, spec_312, "--verify=membership"]) == 0
    assert "membership: 8 checks, 0 failures" in capsys.readouterr().err


def test_union_full_oracle(spec_231, spec_312, capsys):
    assert main(["union", spec_231, spec_312, "--verify=full-oracle"]) == 0
    err = capsys.readouterr().err
    assert "groebner criterion: ok" in err
    assert "ideal equality vs oracle intersection: ok" in err


def test_union_dimension_mismatch(tmp_path, spec_231, capsys):
    other = write_spec(tmp_path, "s4.json", {"n": 4, "permutation": "2 1 4 3"})
    assert main(["union", spec_231, other]) == 2


def test_union_size_guard(tmp_path, capsys):
    big = write_spec(
        tmp_path,
        "big.json",
        {"n": 6, "conditions": [{"i": 1, "j": 1, "r": 0}], "label": "big"},
    )
    assert main(["union", big, big, "--verify=full-oracle"]) == 2
    capsys.readouterr()
    assert main(["union", big, big, "--verify=full-oracle", "--max-oracle-n=6"]) == 0


def test_union_out_file(tmp_path, spec_231, spec_312):
    target = tmp_path / "basis.txt"
    assert main(["union", spec_231, spec_312, f"--out={target}"]) == 0
    assert target.read_text().splitlines()[0] == "1*m[1,1]"


def test_verify_suite(capsys):
    assert main(["verify", "order-axioms", "--cases=50"]) == 0
    out = capsys.readouterr().out
    assert "order-axioms: 50 cases, 0 failures [PASS]" in out


def test_verify_unknown_suite(capsys):
    assert main(["verify", "nonsense"]) == 2


def test_byte_identical_output_across_runs(spec_231, spec_312):
    first = run_cli(["union", spec_231, spec_312, "--format=json"])
    second = run_cli(["union", spec_231, spec_312, "--format=json"])
    assert first == second
    assert first[0] == 0


def test_module_entry_point():
    code, out, err = run_cli(["diagram", "2 1 4 3"])
    assert code == 0
    assert "e 1 . ." in out


def test_usage_error_exit_code():
    code, out, err = run_cli([])
    assert code == 2
