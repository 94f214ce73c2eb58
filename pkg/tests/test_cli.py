import json
import subprocess
import sys

import pytest

from m2codes.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def run_json(capsys, *argv):
    code, out, _ = run(capsys, *argv, "--json")
    assert code == 0
    return json.loads(out)


def test_factor_n5(capsys):
    doc = run_json(capsys, "factor", "--n", "5")
    assert doc["schema"] == "m2codes.factor/1"
    assert sorted(f["factor"] for f in doc["factors"]) == ["x+1", "x^2+w*x+1", "x^2+w^2*x+1"]
    assert doc["selfdual_exists"] is False


def test_classify_n5_reports_nonexistence(capsys):
    code, out, err = run(capsys, "classify", "--n", "5")
    assert code == 0
    assert "no nontrivial self-dual" in err
    doc = run_json(capsys, "classify", "--n", "5")
    assert doc["classes"] == []


@pytest.mark.parametrize(
    "argv",
    [
        ["distance", "--n", "4", "--gen", "x+1"],
        ["distance", "--n", "3", "--gen", "x^2+1"],
        ["distance", "--n", "3", "--gen", "x+"],
        ["audit", "--n", "3", "--f", "x+w", "--h", "x+w"],
        ["bachoc", "--n", "3", "--f", "x+1", "--h", "x+1"],
        ["classify", "--n", "0"],
        ["distance", "--n", "3", "--gen", "x+w", "--cap", "0"],
    ],
)
def test_precondition_exit_code(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2
    assert err


def test_budget_exit_code(capsys):
    code, _, err = run(capsys, "distance", "--n", "41", "--gen", "1", "--method", "direct", "--cap", "4")
    assert code == 3
    assert "budget" in err


def test_compare_mismatch_exit_code(capsys):
    # reference values for n=31 disagree with exhaustive computation
    code, out, _ = run(capsys, "classify", "--n", "31", "--distances", "--compare", "--cap", "12")
    assert code == 4
    assert "VALUE-MISMATCH" in out


def test_compare_clean_exit_code(capsys):
    code, _, _ = run(capsys, "classify", "--n", "15", "--distances", "--compare")
    assert code == 0


@pytest.mark.parametrize(
    "argv,schema",
    [
        (["factor", "--n", "7"], "m2codes.factor/1"),
        (["distance", "--n", "3", "--gen", "x+w"], "m2codes.distance/1"),
        (["wenum", "--n", "3", "--gen", "x+w"], "m2codes.wenum/1"),
        (["classify", "--n", "7"], "m2codes.classify/1"),
        (["audit", "--n", "3", "--f", "x+w", "--h", "x+1"], "m2codes.audit/1"),
        (["bachoc", "--n", "3", "--f", "x+w", "--h", "x+1"], "m2codes.bachoc/1"),
    ],
)
def test_every_subcommand_has_versioned_json(capsys, argv, schema):
    assert run_json(capsys, *argv)["schema"] == schema


def test_distance_and_wenum_values(capsys):
    assert run_json(capsys, "distance", "--n", "3", "--gen", "x+w")["d"] == 2
    assert run_json(capsys, "distance", "--n", "7", "--gen", "1")["d"] == 1
    doc = run_json(capsys, "wenum", "--n", "3", "--gen", "x+w")
    assert doc["counts"] == {"0": "1", "2": "9", "3": "6"}


def test_macwilliams_roundtrip(capsys, tmp_path):
    src = tmp_path / "we.json"
    src.write_text(json.dumps({"length": 3, "cardinality": "16", "counts": {"0": "1", "2": "9", "3": "6"}}))
    doc = run_json(capsys, "macwilliams", "--json-file", str(src))
    assert doc["schema"] == "m2codes.wenum/1"
    assert doc["cardinality"] == "4"
    dual = run_json(capsys, "wenum", "--n", "3", "--gen", "x^2+w^2*x+w")  # (x+1)(x+w)
    assert doc["counts"] == dual["counts"]


def test_macwilliams_bachoc_fixed_point(capsys, tmp_path):
    bwe = run_json(capsys, "bachoc", "--n", "3", "--f", "x+w", "--h", "x+1")["bwe"]
    src = tmp_path / "bwe.json"
    src.write_text(json.dumps(bwe))
    doc = run_json(capsys, "macwilliams", "--json-file", str(src), "--check-fsd")
    assert doc["schema"] == "m2codes.bwe/1"


def test_macwilliams_rejects_non_enumerator(capsys, tmp_path):
    src = tmp_path / "bad.json"
    src.write_text(json.dumps({"length": 1, "cardinality": "3", "counts": {"0": "1", "1": "2"}}))
    code, _, _ = run(capsys, "macwilliams", "--json-file", str(src))
    assert code == 2


def test_output_file(capsys, tmp_path):
    dest = tmp_path / "out.json"
    code, out, _ = run(capsys, "factor", "--n", "3", "--json", "-o", str(dest))
    assert code == 0 and out == ""
    assert json.loads(dest.read_text())["n"] == 3


def test_classify_json_byte_identical_across_partitions(capsys):
    outs = []
    for parts in ("1", "8", "1"):
        code, out, _ = run(capsys, "classify", "--n", "15", "--distances", "--json", "--partitions", parts)
        assert code == 0
        outs.append(out)
    assert outs[0] == outs[1] == outs[2]


def test_partitions_env_var(monkeypatch, capsys):
    monkeypatch.setenv("M2CODES_PARTITIONS", "4")
    a = run(capsys, "distance", "--n", "15", "--gen", "x^5+1", "--json")
    monkeypatch.setenv("M2CODES_PARTITIONS", "bogus")
    b = run(capsys, "distance", "--n", "15", "--gen", "x^5+1", "--json")
    assert a[0] == 0 and b[0] == 2


def test_classify_formats(capsys):
    code, out, _ = run(capsys, "classify", "--n", "7", "--distances", "--format", "csv")
    assert code == 0
    header, *rows = out.strip().splitlines()
    assert "d_R" in header and len(rows) == 1
    doc = run_json(capsys, "classify", "--n", "7", "--all")
    assert len(doc["classes"]) == 2


def test_console_script_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "m2codes.cli", "factor", "--n", "3", "--json"],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["schema"] == "m2codes.factor/1"
