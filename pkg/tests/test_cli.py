"""Command-line behavior: output shapes, exit codes, determinism."""

import json

import pytest

from lenslab.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_dinv_table(capsys):
    code, out, _ = run_cli(capsys, "dinv", "9", "7")
    assert code == 0
    values = [line.split("\t")[1] for line in out.strip().splitlines()]
    assert values == ["0", "2/9", "-4/9", "0", "-4/9", "2/9", "0", "8/9", "8/9"]


def test_dinv_json_round_trip(capsys):
    code, out, _ = run_cli(capsys, "--json", "dinv", "5", "4")
    assert code == 0
    doc = json.loads(out)
    assert doc == {"p": 5, "q": 4, "d": ["1/5", "-1/5", "-1/5", "1/5", "1"]}


def test_dinv_domain_error_exit_code(capsys):
    code, _, err = run_cli(capsys, "dinv", "4", "2")
    assert code == 1
    assert err.strip().splitlines() == ["error: gcd(4, 2) != 1"]


def test_genus_scan_output(capsys):
    code, out, _ = run_cli(capsys, "genus-scan", "2")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0].startswith("# genus 2, orders up to 17")
    assert lines[1] == "L(9,4), L(11,3)"


def test_genus_scan_json(capsys):
    code, out, _ = run_cli(capsys, "--json", "genus-scan", "2", "--pmax", "17")
    doc = json.loads(out)
    assert doc["spaces"][0]["canonical"] == [9, 4]
    assert [11, 4] in doc["spaces"][1]["representatives"]


def test_series_tau(capsys):
    code, out, _ = run_cli(capsys, "series", "tau", "--truncate", "6")
    assert code == 0
    assert out.strip() == "1 + U + U^3 + U^6"


def test_series_surgery(capsys):
    code, out, _ = run_cli(capsys, "series", "surgery", "2", "0", "--truncate", "10")
    assert code == 0
    assert out.strip() == "0"


def test_series_surgery_needs_args(capsys):
    code, _, err = run_cli(capsys, "series", "surgery")
    assert code == 1
    assert "error:" in err


def test_hj_and_farey(capsys):
    code, out, _ = run_cli(capsys, "hj", "9/7")
    assert code == 0 and out.strip() == "9/7 = [2,2,2,3]"
    code, out, _ = run_cli(capsys, "farey", "7/5")
    assert code == 0 and out.strip() == "parents(7/5) = (3/2, 4/3)"
    code, out, _ = run_cli(capsys, "farey", "5")
    assert out.strip() == "parents(5) = (1/0, 4)"


def test_alexlens(capsys):
    code, out, _ = run_cli(capsys, "--json", "alexlens", "9", "7")
    assert code == 0
    doc = json.loads(out)
    assert len(doc["candidates"]) == 1
    cand = doc["candidates"][0]
    assert cand["alexander"] == [[0, 1], [1, -1], [2, 1]]
    assert cand["t"] == ["-2", "-2", "0", "0", "0"]
    assert cand["sigma"]["c"] == 3


def test_alexlens_literal_flag(capsys):
    code, out, _ = run_cli(capsys, "--json", "alexlens", "9", "7", "--literal-Lsigma")
    doc = json.loads(out)
    assert "literal_Lsigma" in doc["candidates"][0]


def test_lattice_check(capsys):
    code, out, _ = run_cli(capsys, "lattice-check", "9", "7")
    assert code == 0
    assert out.strip().splitlines()[-1] == "equal"


def test_octet_verify_file(tmp_path, capsys):
    doc = {"dims": [1, 1, 1], "dos": ["0,0"], "dsu": ["0,0"]}
    path = tmp_path / "octet.json"
    path.write_text(json.dumps(doc))
    code, out, _ = run_cli(capsys, "octet", "verify", str(path))
    assert code == 0
    assert "exact triangle" in out
    code, out, _ = run_cli(capsys, "--json", "octet", "verify", str(path))
    parsed = json.loads(out)
    assert parsed["all_identities"] and parsed["exact"]
    assert parsed["homology"] == {"to": 0, "from": 0, "red": 0}


def test_triangle_verify_file(tmp_path, capsys):
    doc = {
        "dims": [1, 1, 2],
        "d0": [], "d1": [], "d2": ["1,0"],
        "f0": ["0,0"], "f1": ["1,0"], "f2": ["0,0"],
        "H0": ["0,0"], "H1": [], "H2": ["0,1"],
    }
    path = tmp_path / "cone.json"
    path.write_text(json.dumps(doc))
    code, out, _ = run_cli(capsys, "--json", "triangle", "verify", str(path))
    assert code == 0
    parsed = json.loads(out)
    assert parsed["hypotheses_hold"] and parsed["exact"]


def test_lspace_tree(tmp_path, capsys):
    path = tmp_path / "tree.json"
    path.write_text(json.dumps({
        "vertices": [3, 2, 2, 2],
        "edges": [[0, 1], [0, 2], [0, 3]],
    }))
    code, out, _ = run_cli(capsys, "lspace", "tree", str(path))
    assert code == 0
    assert "|H1| = 12" in out
    assert out.strip().endswith("monopole L-space => admits no taut foliation")


def test_lspace_alt(tmp_path, capsys):
    path = tmp_path / "alt.json"
    path.write_text(json.dumps({"vertices": 3, "edges": [[0, 1], [1, 2], [2, 0]]}))
    code, out, _ = run_cli(capsys, "lspace", "alt", str(path))
    assert code == 0
    assert "|H1| = 3" in out


def test_lspace_slope_and_borromean(capsys):
    code, out, _ = run_cli(
        capsys, "lspace", "slope", "--base", "18", "--target", "37/2",
        "--knot", "(-2,3,7)-pretzel",
    )
    assert code == 0
    assert "S3_37/2((-2,3,7)-pretzel)" in out

    code, out, _ = run_cli(capsys, "--json", "lspace", "borromean", "1", "5/2", "5")
    assert code == 0
    doc = json.loads(out)
    assert doc["certificate"]["conclusion"]["h1"] == 25
    assert doc["conclusion"].startswith("monopole L-space")


def test_lspace_tree_hypothesis_failure_is_domain_error(tmp_path, capsys):
    path = tmp_path / "bad.json"
    path.write_text(json.dumps({"vertices": [1, 1], "edges": [[0, 1]]}))
    code, _, err = run_cli(capsys, "lspace", "tree", str(path))
    assert code == 1
    assert "rational homology sphere" in err


def test_usage_exit_code(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["nosuchcommand"])
    assert exc.value.code == 64
    assert main([]) == 64


def test_missing_file_is_domain_error(capsys):
    code, _, err = run_cli(capsys, "octet", "verify", "/nonexistent/x.json")
    assert code == 1


def test_output_determinism(capsys):
    first = run_cli(capsys, "--json", "genus-scan", "2")
    second = run_cli(capsys, "--json", "genus-scan", "2")
    assert first == second
    a = run_cli(capsys, "--json", "lattice-check", "8", "5")
    b = run_cli(capsys, "--json", "lattice-check", "8", "5")
    assert a == b


def test_cache_dir_flag(tmp_path, capsys):
    code, out, _ = run_cli(capsys, "--cache-dir", str(tmp_path), "dinv", "9", "7")
    assert code == 0
    assert (tmp_path / "d_9_7.json").exists()
    # cached run produces identical output
    code2, out2, _ = run_cli(capsys, "--cache-dir", str(tmp_path), "dinv", "9", "7")
    assert (code2, out2) == (code, out)


def test_cache_env_var(tmp_path, capsys, monkeypatch):
    monkeypatch.setenv("LENSLAB_CACHE", str(tmp_path))
    code, _, _ = run_cli(capsys, "dinv", "5", "4")
    assert code == 0
    assert (tmp_path / "d_5_4.json").exists()
