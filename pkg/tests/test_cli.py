import json

import pydot

from app.cli import EXIT_DISAGREEMENT, EXIT_OK, EXIT_USAGE, main
from app.services import classification_service
from app.services.closed_form_service import DEFAULT_TABLES, predict
from tests.conftest import GOLDEN, perturb


def test_classify_planar_pair(capsys) -> None:
    assert main(["classify", "--m", "36", "--n", "6", "--mode", "both"]) == EXIT_OK
    out = capsys.readouterr().out
    assert "G_6(Z_36)" in out
    assert "planar=true (case 7)" in out
    assert "ring=true (case 7)" in out
    assert "outerplanar=true (case 7)" in out
    assert "agreement=ok" in out


def test_classify_prints_witness(capsys) -> None:
    assert main(["classify", "--m", "128", "--n", "64"]) == EXIT_OK
    out = capsys.readouterr().out
    assert "planar=false" in out
    assert "witness=K5 {2,4,8,16,32}" in out


def test_classify_json(capsys) -> None:
    assert main(["classify", "--m", "18", "--n", "18", "--json"]) == EXIT_OK
    doc = json.loads(capsys.readouterr().out)
    assert doc["agreement"] is True
    assert doc["structural"]["planarity_certificate"]["kind"] == "embedding"


def test_classify_closed_form_only(capsys) -> None:
    assert main(["classify", "--m", "64", "--n", "32", "--mode", "closed-form"]) == EXIT_OK
    out = capsys.readouterr().out
    assert "planar=true (case 1)" in out
    assert "ring=false" in out


def test_classify_exits_nonzero_on_disagreement(capsys, monkeypatch) -> None:
    tables = perturb(DEFAULT_TABLES, "planar", 1, 0, "beta", 1)
    monkeypatch.setattr(classification_service, "predict", lambda pair: predict(pair, tables))
    assert main(["classify", "--m", "64", "--n", "64", "--mode", "both"]) == EXIT_DISAGREEMENT
    assert "agreement=FAILED" in capsys.readouterr().out


def test_classify_rejects_non_divisor(capsys) -> None:
    assert main(["classify", "--m", "12", "--n", "5"]) == EXIT_USAGE
    assert "NotAModule" in capsys.readouterr().err


def test_graph_edgelist(capsys) -> None:
    assert main(["graph", "--m", "18", "--n", "18", "--format", "edgelist"]) == EXIT_OK
    assert capsys.readouterr().out == (GOLDEN / "fig1.edgelist").read_text()


def test_graph_json_of_prime(capsys) -> None:
    assert main(["graph", "--m", "7", "--n", "7", "--format", "json"]) == EXIT_OK
    assert json.loads(capsys.readouterr().out)["vertices"] == []


def test_graph_dot_to_file(tmp_path) -> None:
    out = tmp_path / "g.dot"
    assert main(["graph", "--m", "30", "--n", "30", "--format", "dot", "--out", str(out)]) == EXIT_OK
    (dot,) = pydot.graph_from_dot_data(out.read_text())
    assert len(dot.get_edges()) == 9
    assert len(dot.get_nodes()) == 6


def test_sweep_rejects_small_bound() -> None:
    assert main(["sweep", "--max-m", "1"]) == EXIT_USAGE


def test_sweep_writes_report(tmp_path) -> None:
    out = tmp_path / "sweep.jsonl"
    assert main(["sweep", "--max-m", "30", "--out", str(out)]) == EXIT_OK
    lines = out.read_text().splitlines()
    records = [json.loads(line) for line in lines]
    assert all(r["record"] == "pair" for r in records[:-1])
    summary = records[-1]
    assert summary["record"] == "summary"
    assert summary["passed"] is True
    assert summary["mismatches"] == []
    assert "elapsed_seconds" not in summary

    again = tmp_path / "again.jsonl"
    assert main(["sweep", "--max-m", "30", "--out", str(again)]) == EXIT_OK
    assert again.read_text() == out.read_text()


def test_figures(tmp_path) -> None:
    assert main(["figures", "--p1", "2", "--p2", "3", "--p3", "5", "--out-dir", str(tmp_path)]) == EXIT_OK
    for k in range(1, 6):
        assert (tmp_path / f"fig{k}.edgelist").read_text() == (GOLDEN / f"fig{k}.edgelist").read_text()
        assert (tmp_path / f"fig{k}.dot").exists()
        assert (tmp_path / f"fig{k}.json").exists()
    assert len((tmp_path / "fig5.edgelist").read_text().splitlines()) == 3
    summaries = [json.loads(line) for line in (tmp_path / "figures.jsonl").read_text().splitlines()]
    assert [s["figure_id"] for s in summaries] == [1, 2, 3, 4, 5]
    assert all(s["agreement"] for s in summaries)


def test_figures_rejects_repeated_primes(tmp_path) -> None:
    assert main(["figures", "--p1", "2", "--p2", "2", "--p3", "5", "--out-dir", str(tmp_path)]) == EXIT_USAGE


def test_oracle(capsys) -> None:
    assert main(["oracle", "--m", "36", "--n", "6"]) == EXIT_OK
    out = capsys.readouterr().out
    assert out.startswith("d1 d2 oracle criterion\n")
    assert "2 4 true true" in out
    assert "2 9 false false" in out
    assert out.endswith("equivalent=true\n")


def test_unknown_command() -> None:
    assert main(["frobnicate"]) == EXIT_USAGE
