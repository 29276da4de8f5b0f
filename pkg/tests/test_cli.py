"""CLI surface: outputs, exit codes, round trips, report files."""

import json
import subprocess
import sys

from htiling.cli import main

CLI = [sys.executable, "-m", "htiling.cli"]


def run_cli(args: list[str], stdin: str = "") -> tuple[int, str, str]:
    proc = subprocess.run(CLI + args, input=stdin, capture_output=True, text=True)
    return proc.returncode, proc.stdout, proc.stderr


def test_xi_json(capsys):
    assert main(["xi", "--beta", "1/9", "--json"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["beta"] == "1/9" and doc["xi"] == "2/9"


def test_xi_blowup(capsys):
    assert main(["xi-blowup", "--t", "2", "--beta", "1/12", "--json"]) == 0
    assert json.loads(capsys.readouterr().out)["xi_blowup"] == "1/2"


def test_usage_errors():
    assert main(["xi", "--beta", "1/2"]) == 2  # outside domain
    assert main(["xi", "--beta", "0.111"]) == 2  # decimals rejected as input
    assert main(["xi", "--beta", "x/y"]) == 2
    assert main(["curve", "--from", "1/6", "--to", "0", "--steps", "5"]) == 2
    assert main(["no-such-command"]) == 2


def test_psi_star_and_grid(capsys):
    assert main(["psi-star", "--alpha", "1/10", "--json"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["psi_star"] == "21/100" and doc["argmax"] == ["0", "0", "0", "1/10"]
    assert main(["check-prop-opt", "--grid", "10", "--json"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["passed"] and len(doc["rows"]) == 11


def test_curve_landmarks(tmp_path):
    out = tmp_path / "xi.csv"
    assert main(["curve", "--from", "0", "--to", "1/6", "--steps", "30", "--out", str(out)]) == 0
    rows = {ln.split(",")[0]: ln.split(",") for ln in out.read_text().strip().splitlines()[1:]}
    assert rows["1/9"][1:] == ["0.222222222222", "2/9"]
    assert rows["2/15"][1:] == ["0.32", "8/25"]
    assert rows["1/6"][1:] == ["0.5", "1/2"]
    assert rows["0"][1:] == ["0", "0"]


def test_construct_nu_round_trip():
    code, edge_list, _ = run_cli(["construct", "--kind", "gnib", "--n", "20", "--beta", "1/10", "--i", "1"])
    assert code == 0
    code, out, _ = run_cli(["nu", "--graph", "-", "--pattern", "H", "--json"], stdin=edge_list)
    assert code == 0
    doc = json.loads(out)
    assert doc["nu"] == 2 and doc["exact"]
    # must match verify-construction's count for the same spec
    code, out, _ = run_cli(
        ["verify-construction", "--kind", "gnib", "--n", "20", "--beta", "1/10", "--i", "1", "--json"]
    )
    assert code == 1  # bound fails: the refutation witness
    assert json.loads(out)["nu"] == doc["nu"]


def test_refutation_demo_passes(capsys):
    assert main(["refutation-demo", "--json"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["passed"] and [r["holds"] for r in doc["scenarios"]] == [True, True, False]


def test_verify_lemma_report_file(tmp_path, capsys):
    out = tmp_path / "rep.json"
    rc = main(
        ["verify-lemma", "--id", "L54", "--mode", "sampled", "--count", "500",
         "--seed", "42", "--quiet", "--json", "--out", str(out)]
    )
    assert rc == 0
    doc = json.loads(out.read_text())
    assert doc["lemma"] == "L54" and doc["failures"] == [] and doc["seed"] == 42
    assert doc["checked"] == 500 * 4
    capsys.readouterr()


def test_verify_lemma_rejects_bad_mode(capsys):
    assert main(["verify-lemma", "--id", "L53", "--mode", "exhaustive", "--quiet"]) == 2
    capsys.readouterr()


def test_fixtures_and_embeddings(capsys):
    assert main(["fixtures", "--json"]) == 0
    assert json.loads(capsys.readouterr().out)["passed"]
    assert main(["verify-embeddings", "--t-max", "8", "--json"]) == 0
    assert json.loads(capsys.readouterr().out)["passed"]


def test_mixed_cover_cli(tmp_path, capsys):
    g = tmp_path / "g.el"
    g.write_text("2 1\n0 1\n")
    assert main(["mixed-cover", "--graph", str(g), "--json"]) == 0
    assert json.loads(capsys.readouterr().out)["coverage"] == 2


def test_nu_on_edge_blowup(tmp_path, capsys):
    from htiling.graphs import SmallGraph, blowup, format_edge_list

    g = tmp_path / "g.el"
    g.write_text(format_edge_list(blowup(SmallGraph.from_edges(2, [(0, 1)]), 6)))
    assert main(["nu", "--graph", str(g), "--pattern", "H", "--json"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["nu"] == 2 and doc["exact"]


def test_witness_file(tmp_path, capsys):
    g = tmp_path / "g.el"
    g.write_text("12 9\n" + "\n".join(f"{u} {v + 6}" for u in range(3) for v in range(3)) + "\n")
    w = tmp_path / "w.json"
    assert main(["nu", "--graph", str(g), "--pattern", "H", "--json", "--witness", str(w)]) == 0
    capsys.readouterr()
    doc = json.loads(w.read_text())
    assert doc["schema_version"] == 1 and len(doc["members"]) == 1
