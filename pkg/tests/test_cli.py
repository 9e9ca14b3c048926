import json
from fractions import Fraction as Q
from pathlib import Path

import pytest

from axial.algebra import StructureAlgebra, three_c
from axial.cli import main
from axial.fusion import FusionRules
from axial.sakuma import POINT_TABLE

ROOT = Path(__file__).resolve().parent.parent
FIXTURE = ROOT / "fixtures" / "3c.json"


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_fusion_table_text(capsys):
    code, out = run(capsys, "fusion", "vir", "4", "3")
    assert code == 0
    assert "central charge 1/2" in out
    assert "1, 0, 1/4" in out  # the 1/32 * 1/32 cell
    assert "odd {1/32}" in out


def test_fusion_table_json_round_trips(capsys):
    code, out = run(capsys, "fusion", "vir", "5", "3", "--json")
    assert code == 0
    data = json.loads(out)
    rules = FusionRules.from_json(data)
    assert rules.central_charge == Q(-3, 5)
    assert [g for g in data["gradings"] if g["odd"]] == [
        {"even": ["0", "1", "1/10"], "odd": ["-1/40", "3/8"]}
    ]


def test_fusion_rejects_bad_pq(capsys):
    with pytest.raises(ValueError):
        main(["fusion", "vir", "4", "2"])


def test_algebra_check_fixture(capsys):
    code, out = run(capsys, "algebra", "check", str(FIXTURE), "--fusion", "vir:4,3")
    assert code == 0
    assert out.strip().endswith("PASS")


def test_algebra_check_json(capsys):
    code, out = run(capsys, "algebra", "check", str(FIXTURE), "--json")
    assert code == 0
    data = json.loads(out)
    assert data["passed"] is True
    assert set(data["axes"]) == {"a", "b", "c"}


def test_algebra_check_detects_broken_form(tmp_path, capsys):
    alg = three_c()
    data = alg.to_json()
    data["gram"][0][1] = "1/2"  # breaks symmetry with gram[1][0]
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps(data))
    with pytest.raises(ValueError):
        main(["algebra", "check", str(bad)])
    # a symmetric but non-associating form exits 1 instead
    data["gram"][0][1] = "1/2"
    data["gram"][1][0] = "1/2"
    bad.write_text(json.dumps(data))
    code, _ = run(capsys, "algebra", "check", str(bad))
    assert code == 1


def test_usage_error_exit_code():
    with pytest.raises(SystemExit) as err:
        main(["fusion", "vir", "4"])
    assert err.value.code == 2


def test_sakuma_solve(capsys):
    code, out = run(capsys, "sakuma", "solve")
    assert code == 0
    data = json.loads(out)
    assert data == [
        {"name": name, "lambda": str(lam), "mu": str(mu)}
        for name, lam, mu, _, _ in POINT_TABLE
    ]


def test_sakuma_table_json_round_trips_and_is_deterministic(capsys):
    code, out1 = run(capsys, "sakuma", "table", "--format", "json")
    assert code == 0
    code, out2 = run(capsys, "sakuma", "table", "--format", "json")
    assert out1 == out2
    data = json.loads(out1)
    back = StructureAlgebra.from_json(data)
    assert back.dim == 8


def test_sakuma_table_text(capsys):
    code, out = run(capsys, "sakuma", "table")
    assert code == 0
    assert "a0 * a1 = 1/32*a0 + 1/32*a1 + s1" in out
    assert "<a0, a1> = lam" in out


def test_sakuma_rederive(capsys):
    code, out = run(capsys, "sakuma", "rederive")
    assert code == 0
    assert "PASS" in out


def test_sakuma_classify(tmp_path, capsys):
    out_file = tmp_path / "report.json"
    code, out = run(capsys, "sakuma", "classify", "--out", str(out_file))
    assert code == 0
    assert "total dimension: 37" in out
    data = json.loads(out_file.read_text())
    assert data["passed"] is True
    assert [p["dim"] for p in data["points"]] == [1, 2, 3, 3, 4, 5, 5, 6, 8]
