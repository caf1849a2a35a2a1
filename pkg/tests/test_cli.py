from __future__ import annotations

import json
from pathlib import Path

import pytest

from semiclassical.cli import main

FAMILIES = Path(__file__).resolve().parent.parent / "families"


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_suite_prop41_rational(capsys):
    code, out, err = run(capsys, "suite-prop41", "--mode", "rational", "--t", "1/2", "--N", "12")
    report = json.loads(out)
    assert code == 0 and report["pass"] is True
    assert report["suite"] == "prop41" and "timestamp" in report
    assert all(c["status"] == "pass" for c in report["checks"])
    assert "checks passed" in err


def test_band_offsets(capsys):
    code, out, _ = run(capsys, "band", "--family", str(FAMILIES / "prop41.json"), "--phi", "U2", "--N", "12")
    report = json.loads(out)
    assert code == 0
    assert set(report["artifacts"]["offsets"]) == {1, -1, -3}


def test_classify_family_file(capsys):
    code, out, _ = run(capsys, "classify", "--family", str(FAMILIES / "q_hermite_rational.json"),
                       "--phi", "1", "--N", "12")
    report = json.loads(out)
    assert code == 0 and report["artifacts"]["classification"]["verdict"] == "Classical"


def test_failing_suite_exits_one(capsys):
    code, out, err = run(capsys, "suite-cor43", "--mode", "rational", "--t", "1/2", "--n-hi", "8")
    assert code == 1 and json.loads(out)["pass"] is False
    assert "FAIL d_{n,4}" in err


def test_regularity_command(capsys):
    base = ["regularity", "--mode", "rational", "--t", "1/2", "--N", "10"]
    assert run(capsys, *base, "--phi", "1", "--psi", "x")[0] == 0
    code, out, _ = run(capsys, *base, "--phi", "x^2+1", "--psi", "0")
    assert code == 1 and json.loads(out)["checks"][0]["witness"]["reason"] == "d_n = 0"


def test_hahn_classify(capsys):
    code, out, _ = run(capsys, "hahn-classify", "--family", str(FAMILIES / "al_salam_carlitz_rational.json"),
                       "--c", "0", "--N", "10")
    assert code == 0 and json.loads(out)["artifacts"]["classification"]["verdict"] == "Classical"


@pytest.mark.parametrize("argv", [
    ["suite-prop41", "--mode", "rational"],
    ["suite-prop41", "--mode", "rational", "--t", "abc"],
    ["suite-prop41", "--N", "2"],
    ["band", "--family", "/nonexistent.json", "--phi", "U2"],
    ["regularity", "--mode", "rational", "--t", "1/2", "--phi", "x^^2", "--psi", "x"],
    ["no-such-command"],
])
def test_usage_errors_exit_two(capsys, argv):
    code, _, _ = run(capsys, *argv)
    assert code == 2


def test_deterministic_reports(capsys, tmp_path):
    argv = ["verify-lemma25", "--mode", "rational", "--t", "1/2", "--deg", "4", "--trials", "5",
            "--seed", "3", "--no-timestamps"]
    paths = []
    for i in range(2):
        p = tmp_path / f"r{i}.json"
        assert main(argv + ["--out", str(p)]) == 0
        paths.append(p)
    capsys.readouterr()
    assert paths[0].read_bytes() == paths[1].read_bytes()
    assert "timestamp" not in json.loads(paths[0].read_text())


def test_table_family_depth(capsys):
    table = str(FAMILIES / "table_example.json")
    code, out, _ = run(capsys, "band", "--family", table, "--phi", "1", "--no-timestamps")
    assert code == 0 and json.loads(out)["config"]["N"] == 8
    assert run(capsys, "band", "--family", table, "--phi", "1", "--N", "30")[0] == 2


def test_singular_family_file(capsys, tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"mode": "rational", "operator": "askey-wilson", "t": "1/2",
                               "B": ["0"] * 4, "C": ["0", "1", "0", "1"]}))
    code, _, err = run(capsys, "band", "--family", str(bad), "--phi", "1", "--N", "1")
    assert code == 2 and "C_2 vanishes" in err
