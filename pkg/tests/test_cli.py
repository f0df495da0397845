import json

import pytest

from strongdim.cli import main
from strongdim.graph import cycle, from_graph6, graphs_isomorphic, complete, to_graph6


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_compute_dim_s_of_c7(capsys):
    code, out, _ = run_cli(capsys, "compute", "dim-s", "--gen", "cycle:7")
    assert code == 0
    assert "dim-s = 4" in out


def test_compute_sr_graph_dot(capsys):
    code, out, _ = run_cli(capsys, "compute", "sr-graph", "--gen", "path:4",
                           "--format", "dot")
    assert code == 0
    assert "0 -- 3;" in out
    assert out.count("--") == 1


def test_compute_beta_of_k5(capsys):
    code, out, _ = run_cli(capsys, "compute", "beta", "--gen", "complete:5")
    assert code == 0
    assert "beta = 1" in out


def test_compute_json_payload(capsys):
    code, out, _ = run_cli(capsys, "compute", "alpha", "--gen", "cycle:5",
                           "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["value"] == 3
    assert len(doc["witness"]) == 3


def test_compute_theta(capsys):
    code, out, _ = run_cli(capsys, "compute", "theta", "--gen", "cycle:6",
                           "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["value"] == 3
    assert sorted(len(p) for p in doc["parts"]) == [2, 2, 2]


def test_compute_from_graph6_argument(capsys):
    code, out, _ = run_cli(capsys, "compute", "mmd-pairs", to_graph6(cycle(4)),
                           "--format", "json")
    assert code == 0
    assert json.loads(out)["value"] == 2


def test_compute_from_stdin(capsys, monkeypatch):
    import io

    monkeypatch.setattr("sys.stdin", io.StringIO(to_graph6(cycle(5)) + "\n"))
    code, out, _ = run_cli(capsys, "compute", "dim-s", "-")
    assert code == 0
    assert "dim-s = 3" in out


def test_compute_multiple_graphs_from_stdin(capsys, monkeypatch):
    import io

    text = to_graph6(cycle(5)) + "\n" + to_graph6(cycle(7)) + "\n"
    monkeypatch.setattr("sys.stdin", io.StringIO(text))
    code, out, _ = run_cli(capsys, "compute", "dim-s", "-", "--format", "json")
    assert code == 0
    docs = json.loads(out)
    assert [d["value"] for d in docs] == [3, 4]


def test_compute_from_file(capsys, tmp_path):
    f = tmp_path / "graphs.g6"
    f.write_text(to_graph6(cycle(6)) + "\n")
    code, out, _ = run_cli(capsys, "compute", "alpha", f"@{f}")
    assert code == 0
    assert "alpha = 3" in out


def test_compute_disconnected_dim_errors(capsys):
    code, _, err = run_cli(capsys, "compute", "dim-s", to_graph6(from_graph6("A?")))
    assert code == 1
    assert err.startswith("error:")


def test_product_strong_c3_c5_dim(capsys):
    code, out, _ = run_cli(capsys, "product", "strong", "cycle:3", "cycle:5",
                           "--dim-s", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["dim_s"] == 13
    assert len(doc["basis"]) == 13
    assert all("," in label for label in doc["basis"])


def test_product_cartesian_p2_p2_is_c4(capsys):
    code, out, _ = run_cli(capsys, "product", "cartesian", "path:2", "path:2",
                           "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert graphs_isomorphic(from_graph6(doc["graph6"]), cycle(4))


def test_product_sum_k2_k2_is_k4(capsys):
    code, out, _ = run_cli(capsys, "product", "sum", "complete:2", "complete:2",
                           "--format", "json")
    assert code == 0
    assert from_graph6(json.loads(out)["graph6"]) == complete(4)


def test_product_dot_labels(capsys):
    code, out, _ = run_cli(capsys, "product", "strong", "path:2", "path:2",
                           "--format", "dot")
    assert code == 0
    assert '[label="0,0"]' in out


def test_verify_remark_c3(capsys, tmp_path):
    out_file = tmp_path / "report.json"
    code, _, err = run_cli(capsys, "verify", "remark-c3", "--t-max", "3",
                           "--out", str(out_file))
    assert code == 0
    doc = json.loads(out_file.read_text())
    claim = next(c for c in doc["claims"] if c["claim_id"] == "remark-c3")
    assert claim["status"] == "all_passed"
    assert [rec["actual"] for rec in claim["instances"]] == [8, 13, 18]
    assert "remark-c3: all_passed" in err


def test_verify_odd_odd_fixed_pair(capsys):
    code, out, _ = run_cli(capsys, "verify", "thm-odd-odd-beta", "--r", "2", "--t", "2")
    assert code == 0
    doc = json.loads(out)
    claim = next(c for c in doc["claims"] if c["claim_id"] == "thm-odd-odd-beta")
    assert claim["instances"][0]["actual"] == 5


def test_verify_unknown_claim(capsys):
    code, _, err = run_cli(capsys, "verify", "thm-flat-earth")
    assert code == 1
    assert err.startswith("error:")


def test_verify_jobs_flag(capsys, tmp_path):
    serial = tmp_path / "serial.json"
    parallel = tmp_path / "parallel.json"
    run_cli(capsys, "verify", "remark-c3", "--t-max", "2", "--out", str(serial))
    run_cli(capsys, "verify", "remark-c3", "--t-max", "2", "--jobs", "2",
            "--out", str(parallel))
    assert serial.read_bytes() == parallel.read_bytes()


def test_verify_csv_summary(capsys, tmp_path):
    out_file = tmp_path / "r.json"
    csv_file = tmp_path / "r.csv"
    code, _, _ = run_cli(capsys, "verify", "remark-c3", "--t-max", "2",
                         "--out", str(out_file), "--csv", str(csv_file))
    assert code == 0
    lines = csv_file.read_text().strip().splitlines()
    assert lines[0].startswith("claim_id,")
    assert any(ln.startswith("remark-c3,all_passed") for ln in lines)


def test_verify_timings_flag_controls_json(capsys, tmp_path):
    plain = tmp_path / "a.json"
    timed = tmp_path / "b.json"
    run_cli(capsys, "verify", "remark-c3", "--t-max", "2", "--out", str(plain))
    run_cli(capsys, "verify", "remark-c3", "--t-max", "2", "--timings",
            "--out", str(timed))
    assert "elapsed_ms" not in plain.read_text()
    assert "elapsed_ms" in timed.read_text()


def test_bad_generator_spec_single_line_error(capsys):
    code, _, err = run_cli(capsys, "compute", "dim-s", "--gen", "octahedron:4")
    assert code == 1
    assert err.startswith("error:")
    assert len(err.strip().splitlines()) == 1


def test_mismatched_r_t_flags(capsys):
    code, _, err = run_cli(capsys, "verify", "thm-odd-odd-beta", "--r", "2")
    assert code == 1
    assert "together" in err
