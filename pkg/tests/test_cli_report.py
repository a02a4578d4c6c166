import json

import pytest

from ncresidue.cli import main
from ncresidue.report import build_report, emit_report, exit_code, parse_report


def test_single_case_text(capsysbinary):
    assert main(["verify", "--case", "8"]) == 0
    out = capsysbinary.readouterr().out.decode()
    assert "5/16 · SB · πΩ5" in out
    assert "[exact]" in out


def test_strict_mode_on_subset(tmp_path):
    out = tmp_path / "r.json"
    code = main(["verify", "--mode", "strict", "--case", "2", "--case", "3", "--format", "structured", "--out", str(out)])
    doc = parse_report(out.read_bytes())
    assert doc.case(3)["status"] == "discrepancy"
    assert doc.case(3)["oracle"]["agree"]
    assert code == 1


def test_report_mode_never_fails_on_stated_values(full_doc):
    assert exit_code(full_doc) == 0
    assert {c["status"] for c in full_doc.cases} <= {"exact", "discrepancy"}


def test_adjudicated_entries(full_doc):
    for cid in (10, 13, 14, 15):
        c = full_doc.case(cid)
        assert c["status"] == "discrepancy"
        assert c["oracle"]["agree"]
    assert full_doc.data["phi"]["status"] == "discrepancy"
    assert full_doc.data["phi"]["ledger_sum_matches"]
    assert full_doc.data["alternate_route"]["route"] == "parametrix"


def test_structured_roundtrip(full_doc):
    blob = emit_report(full_doc, "structured")
    assert parse_report(blob) == full_doc
    assert emit_report(parse_report(blob), "structured") == blob


def test_output_is_deterministic(full_doc):
    again = build_report()
    for fmt in ("text", "structured"):
        assert emit_report(again, fmt) == emit_report(full_doc, fmt)


def test_oracle_disagreement_exit_code(full_doc):
    data = json.loads(emit_report(full_doc, "structured"))
    data["cases"][0]["oracle"] = {"agree": False, "numeric": [1.0, 0.0], "exact": [0.0, 0.0]}
    assert exit_code(parse_report(json.dumps(data))) == 2


def test_reading_option(capsysbinary):
    assert main(["verify", "--case", "9", "--reading", "antisymmetric", "--format", "structured"]) == 0
    doc = parse_report(capsysbinary.readouterr().out)
    assert doc.data["reading"] == "antisymmetric"
    assert doc.case(9)["depends_on_reading"]


def test_bad_arguments():
    with pytest.raises(SystemExit):
        main(["verify", "--case", "16"])
    with pytest.raises(ValueError):
        parse_report("[]")


def test_internal_error_maps_to_two(monkeypatch, capsys):
    import ncresidue.cli as cli

    def boom(*a, **k):
        raise RuntimeError("broken")

    monkeypatch.setattr(cli, "build_report", boom)
    assert main(["verify", "--case", "1"]) == 2
    assert "internal error" in capsys.readouterr().err
