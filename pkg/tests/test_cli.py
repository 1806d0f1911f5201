import json

import pytest

from wplus.cli import main
from wplus.report import VerificationReport

JSON_TOP_KEYS = {"schema", "p", "g_p", "g_plus", "pivots", "wt_inf",
                 "good_basis", "polys", "checks", "timings_ms", "status",
                 "error"}


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_verify_67(capsys, tmp_path):
    code, out = run(capsys, "--cache-dir", str(tmp_path), "verify", "67")
    assert code == 0
    assert "x^2 + 10x + 62" in out
    assert "status: ok" in out


def test_verify_67_json_schema(capsys, tmp_path):
    code, out = run(capsys, "--cache-dir", str(tmp_path), "verify", "67",
                    "--json")
    assert code == 0
    data = json.loads(out)
    assert set(data) == JSON_TOP_KEYS
    assert data["schema"] == 1
    assert data["p"] == 67 and data["g_p"] == 5 and data["g_plus"] == 2
    assert data["pivots"] == [1, 2] and data["wt_inf"] == 0
    assert data["good_basis"] is True
    assert set(data["polys"]) == set(VerificationReport.POLY_KEYS)
    # polynomials are coefficient lists, low degree first, mod p
    assert data["polys"]["H"] == [62, 10, 1]
    assert all(v is True for v in data["checks"].values())


def test_verify_paranoid(capsys, tmp_path):
    code, out = run(capsys, "--cache-dir", str(tmp_path), "verify", "67",
                    "--paranoid", "--json")
    assert code == 0
    data = json.loads(out)
    assert data["checks"]["square_divisor_direct"] is True


def test_verify_trivial_genus(capsys, tmp_path):
    code, out = run(capsys, "--cache-dir", str(tmp_path), "verify", "23")
    assert code == 0
    assert "quotient genus 0" in out


def test_verify_rejects_composite(capsys):
    with pytest.raises(SystemExit) as err:
        main(["verify", "68"])
    assert err.value.code == 2


def test_scan_range_json(capsys, tmp_path):
    code, out = run(capsys, "--cache-dir", str(tmp_path),
                    "scan", "67", "79", "--jobs", "1")
    assert code == 0
    data = json.loads(out)
    assert [r["p"] for r in data["results"]] == [67, 71, 73, 79]
    assert data["summary"]["ok"] == 4
    assert data["summary"]["wt_positive"] == []
    for r in data["results"]:
        assert set(r) == JSON_TOP_KEYS


def test_scan_empty_range(capsys):
    code, out = run(capsys, "--no-cache", "scan", "90", "96")
    assert code == 0
    assert json.loads(out)["results"] == []


def test_scan_out_file(capsys, tmp_path):
    out_file = tmp_path / "agg.json"
    code, out = run(capsys, "--cache-dir", str(tmp_path), "scan", "67", "71",
                    "--out", str(out_file), "--basis-only")
    assert code == 0
    data = json.loads(out_file.read_text())
    assert data["basis_only"] is True
    assert data["summary"]["count"] == 2


def test_ssing_67(capsys):
    code, out = run(capsys, "--no-cache", "ssing", "67")
    assert code == 0
    assert "(x + 1)" in out and "(x + 14)" in out
    assert "oracle agreement: True" in out


def test_hilbert_4(capsys):
    code, out = run(capsys, "--no-cache", "hilbert", "4")
    assert code == 0
    assert "x - 1728" in out


def test_basis_67(capsys, tmp_path):
    code, out = run(capsys, "--cache-dir", str(tmp_path), "basis", "67")
    assert code == 0
    assert "q - 3q^3 - 3q^4 - 3q^5" in out
    assert "pivots: [1, 2]" in out


def test_cache_delete_reproduces_result(capsys, tmp_path):
    import shutil
    code1, out1 = run(capsys, "--cache-dir", str(tmp_path), "verify", "67",
                      "--json")
    data1 = json.loads(out1)
    assert any(tmp_path.iterdir())
    code2, out2 = run(capsys, "--cache-dir", str(tmp_path), "verify", "67",
                      "--json")
    data2 = json.loads(out2)
    shutil.rmtree(tmp_path)
    code3, out3 = run(capsys, "--cache-dir", str(tmp_path), "verify", "67",
                      "--json")
    data3 = json.loads(out3)
    for d in (data1, data2, data3):
        d.pop("timings_ms")
    assert data1 == data2 == data3
