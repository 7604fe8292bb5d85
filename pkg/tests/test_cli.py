"""Command-line behaviour: output shapes, exit codes, golden stability."""

from __future__ import annotations

import json

from diffhom.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_dim_text(capsys):
    code, out, _ = run_cli(capsys, "dim", "--N", "1", "--d", "2", "--k", "1", "--basis")
    assert code == 0
    assert "dimension 4" in out
    assert "X0^(0)*X1^(1)" in out


def test_dim_json_schema(capsys):
    code, out, _ = run_cli(capsys, "dim", "--N", "1", "--d", "2", "--k", "1", "--json")
    assert code == 0
    payload = json.loads(out)
    assert set(payload) == {"N", "d", "k", "dimension", "basis"}
    assert payload["dimension"] == 4
    assert len(payload["basis"]) == 4


def test_tensor_inv(capsys):
    code, out, _ = run_cli(capsys, "tensor-inv", "--k", "1", "--d", "2", "--basis")
    assert code == 0
    assert "dimension 2" in out
    assert "harmonic image" in out


def test_harmonic_agreement(capsys):
    code, out, _ = run_cli(capsys, "harmonic", "--d", "4", "--k", "1")
    assert code == 0
    assert out.count("6") >= 3
    assert "pass" in out


def test_dcp(capsys):
    code, out, _ = run_cli(capsys, "dcp", "--d", "3", "--k", "1")
    assert code == 0
    assert "ideals coincide" in out


def test_harmonic_json_report(capsys):
    code, out, _ = run_cli(capsys, "harmonic", "--d", "3", "--k", "1", "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["status"] == "pass"
    assert payload["kernelDimension"] == payload["quotientDimension"] == 3


def test_dcp_json_report(capsys):
    code, out, _ = run_cli(capsys, "dcp", "--d", "2", "--k", "1", "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["status"] == "pass"
    assert payload["uncertifiedForward"] == []


def test_generators_counts_csv(capsys, tmp_path):
    csv_path = tmp_path / "counts.csv"
    code, _, _ = run_cli(
        capsys, "generators", "--N", "2", "--k", "2",
        "--counts-csv", str(csv_path), "--json", str(tmp_path / "cat.json"),
    )
    assert code == 0
    lines = csv_path.read_text().splitlines()
    assert lines[0] == "degree,expected,computed"
    assert lines[1:] == ["1,3,3", "2,3,3", "3,9,9"]


def test_tableaux(capsys):
    code, out, _ = run_cli(capsys, "tableaux", "--mu", "2,2")
    assert code == 0
    assert "2 standard tableaux" in out
    assert "vandermonde" in out


def test_tableaux_bad_partition(capsys):
    code, _, err = run_cli(capsys, "tableaux", "--mu", "x,y")
    assert code == 2
    assert "configuration error" in err


def test_generators_json_schema(capsys, tmp_path):
    out_path = tmp_path / "catalog.json"
    code, _, _ = run_cli(capsys, "generators", "--N", "1", "--k", "1", "--json", str(out_path))
    assert code == 0
    payload = json.loads(out_path.read_text())
    assert payload["N"] == 1 and payload["k"] == 1
    degrees = [fam["degree"] for fam in payload["families"]]
    assert degrees == [1, 2]
    counts = [fam["count"] for fam in payload["families"]]
    assert counts == [2, 1]
    generator = payload["families"][1]["generators"][0]
    assert set(generator) == {"index", "poly"}
    assert generator["poly"] == "X0^(0)*X1^(1) - X0^(1)*X1^(0)"


def test_verify_command(capsys):
    code, out, _ = run_cli(capsys, "verify", "--N", "1", "--k", "1", "--dmax", "3")
    assert code == 0
    assert "finite-generation d=3" in out
    assert "FAIL" not in out


def test_sigma(capsys):
    code, out, _ = run_cli(capsys, "sigma", "--d", "3", "--N", "1")
    assert code == 0
    assert "3 (d!/2 formula)" in out
    assert "nested indices for N=1" in out


def test_verify_all_roundtrip(capsys, tmp_path):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"d_values": [2], "format": "json"}))
    out_path = tmp_path / "report.json"
    code, out, _ = run_cli(capsys, "verify-all", "--config", str(cfg), "--out", str(out_path))
    assert code == 0
    payload = json.loads(out)
    assert payload["summary"] == {"fail": 0, "pass": 9, "skipped": 0}
    first = out_path.read_text()
    code, _, _ = run_cli(capsys, "verify-all", "--config", str(cfg), "--out", str(out_path))
    assert code == 0
    assert out_path.read_text() == first


def test_verify_all_csv(capsys, tmp_path):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"d_values": [2]}))
    code, out, _ = run_cli(capsys, "verify-all", "--config", str(cfg), "--format", "csv")
    assert code == 0
    assert out.splitlines()[0] == "checkId,formula,inputs,expected,computed,status"


def test_verify_all_env_caps_skip(capsys, tmp_path, monkeypatch):
    monkeypatch.setenv("DIFFHOM_MAX_BOX", "1")
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"d_values": [2]}))
    code, out, _ = run_cli(capsys, "verify-all", "--config", str(cfg))
    assert code == 0
    assert "skipped" in out


def test_verify_all_bad_config(capsys, tmp_path):
    cfg = tmp_path / "cfg.json"
    cfg.write_text('{"d_values": "two"}')
    code, _, err = run_cli(capsys, "verify-all", "--config", str(cfg))
    assert code == 2
    assert "configuration error" in err


def test_verify_all_missing_config(capsys, tmp_path):
    code, _, err = run_cli(capsys, "verify-all", "--config", str(tmp_path / "nope.json"))
    assert code == 2
    assert "cannot read configuration" in err
