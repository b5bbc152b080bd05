import json

import pytest
from click.testing import CliRunner

from matchbound.cli import main


@pytest.fixture()
def runner():
    return CliRunner()


def test_corpus_listing(runner):
    res = runner.invoke(main, ["corpus"])
    assert res.exit_code == 0
    assert "dodecahedron" in res.output and "k4xk2" in res.output


def test_count_corpus_id(runner):
    res = runner.invoke(main, ["count", "octahedron", "--method", "both"])
    assert res.exit_code == 0
    assert "pfaffian=8" in res.output and "oracle=8" in res.output and "agree" in res.output


def test_count_unknown_target(runner):
    res = runner.invoke(main, ["count", "not-a-thing"])
    assert res.exit_code != 0


def test_gen_and_count_round_trip(runner, tmp_path):
    out = tmp_path / "p2.json"
    res = runner.invoke(main, ["gen", "pentacap", "2", "--out", str(out)])
    assert res.exit_code == 0
    data = json.loads(out.read_text())
    assert data["graph"]["n"] == 30 and "rotation" in data
    assert [len(r) for r in data["decomposition"]["rings"]] == [5, 10, 10, 5]

    res = runner.invoke(main, ["count", str(out), "--method", "both"])
    assert res.exit_code == 0 and "pfaffian=151" in res.output


def test_gen_classic_graph_only_file(runner, tmp_path):
    out = tmp_path / "k33.json"
    res = runner.invoke(main, ["gen", "classic", "K_rr", "3", "--out", str(out)])
    assert res.exit_code == 0
    data = json.loads(out.read_text())
    assert data == {"n": 6, "edges": [[1, 4], [1, 5], [1, 6], [2, 4], [2, 5],
                                      [2, 6], [3, 4], [3, 5], [3, 6]]}
    res = runner.invoke(main, ["count", str(out), "--method", "oracle"])
    assert res.exit_code == 0 and "oracle=6" in res.output


def test_gen_leapfrog_count(runner, tmp_path):
    out = tmp_path / "c60.json"
    res = runner.invoke(main, ["gen", "leapfrog", "pentacap", "1", "--out", str(out)])
    assert res.exit_code == 0
    res = runner.invoke(main, ["count", str(out)])
    assert res.exit_code == 0 and "pfaffian=12500" in res.output


def test_bounds_single_json(runner):
    res = runner.invoke(main, ["bounds", "k4"])
    assert res.exit_code == 0
    reports = json.loads(res.output)
    assert reports[0]["graph_id"] == "k4" and reports[0]["exact_count"] == "3"


def test_bounds_corpus_csv(runner, tmp_path):
    out = tmp_path / "report.csv"
    res = runner.invoke(main, ["bounds", "corpus", "--format", "csv",
                               "--out", str(out)])
    assert res.exit_code == 0
    lines = out.read_text().strip().splitlines()
    assert lines[0].startswith("graph_id,n,m,exact_count,bound")
    assert any(line.startswith("le_pentacap1,60,90,12500,") for line in lines)


def test_bounds_respects_max_oracle(runner):
    res = runner.invoke(main, ["bounds", "dodecahedron", "--max-oracle", "10"])
    assert res.exit_code == 0
    report = json.loads(res.output)[0]
    assert report["count_method"] == "pfaffian"   # oracle skipped by the guard


def test_identities_pass_table(runner):
    res = runner.invoke(main, ["identities", "10"])
    assert res.exit_code == 0
    assert "[PASS] lucas_det_matches_bareiss n=10" in res.output
    assert "[PASS] root_sequence_max_at_n6" in res.output
    assert res.output.strip().endswith("all identity checks passed")


def test_identities_minimum(runner):
    res = runner.invoke(main, ["identities", "8"])
    assert res.exit_code == 0


def test_validate_command(runner, tmp_path):
    out = tmp_path / "h1.json"
    runner.invoke(main, ["gen", "hexacap", "1", "--out", str(out)])
    res = runner.invoke(main, ["validate", str(out)])
    assert res.exit_code == 0
    assert '"is_fullerene": true' in res.output
