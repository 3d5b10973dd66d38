import json

import pytest

from torlen.cli import main

PJKL_222 = "gens: x y z\nrel: x x\nrel: y y\nrel: x y z^-1 z^-1\n"


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_gen_pn(capsys):
    code, out, err = run(capsys, "gen", "pn", "--n", "2")
    assert code == 0
    assert "gens: x_ x_0 x_1" in out
    assert "wall-time" in err


def test_gen_output_is_reproducible(capsys):
    _, first, _ = run(capsys, "gen", "pjkl", "2", "3", "4")
    _, second, _ = run(capsys, "gen", "pjkl", "2", "3", "4")
    assert first == second


def test_roundtrip_through_file(tmp_path, capsys):
    path = tmp_path / "p.txt"
    code, _, _ = run(capsys, "gen", "pn", "--n", "1", "--out", str(path))
    assert code == 0
    code, out, _ = run(capsys, "canon", str(path))
    assert code == 0
    assert "rel: g0 g0 g0" in out


def test_torlen_report(tmp_path, capsys):
    path = tmp_path / "p.txt"
    path.write_text(PJKL_222)
    code, out, _ = run(capsys, "torlen", str(path))
    assert code == 0
    report = json.loads(out)
    assert report["value"] == 2 and report["exact"] is True


def test_torlen_inexact_exit_code(tmp_path, capsys):
    path = tmp_path / "p.txt"
    path.write_text("gens: a b\nrel: a a\nrel: a b a^-1 b^-1\n")
    code, out, _ = run(capsys, "torlen", str(path))
    assert code == 2
    assert json.loads(out)["exact"] is False


def test_tc_complete_and_bound(tmp_path, capsys):
    path = tmp_path / "p.txt"
    path.write_text("gens: x\nrel: x x x\n")
    code, out, _ = run(capsys, "tc", str(path))
    assert code == 0
    assert json.loads(out)["index"] == 3
    path.write_text("gens: x y\nrel: x x\nrel: y y\n")
    code, out, _ = run(capsys, "tc", str(path), "--max", "200")
    assert code == 2
    assert json.loads(out)["status"] == "bound_exceeded"


def test_ab(tmp_path, capsys):
    path = tmp_path / "p.txt"
    path.write_text("gens: x\nrel: x x x\n")
    code, out, _ = run(capsys, "ab", str(path))
    assert code == 0
    assert json.loads(out) == {"torsion": [3], "free_rank": 0}


def test_parse_error_exit_code(tmp_path, capsys):
    path = tmp_path / "p.txt"
    path.write_text("rel: y\n")
    code, _, err = run(capsys, "ab", str(path))
    assert code == 1
    assert "error" in err


def test_fold(capsys):
    code, out, _ = run(capsys, "fold", "--ambient", "a b", "--gens", "a a; b b")
    assert code == 0
    assert json.loads(out)["rank"] == 2


def test_nf(capsys):
    code, out, _ = run(capsys, "nf", "--spec", "factors: x:2 y:3", "x x y y y y x")
    assert code == 0
    assert json.loads(out)["word"] == "y x"


def test_conjsep(capsys):
    code, out, _ = run(
        capsys, "conjsep", "--spec", "factors: x:2 y:2", "--a", "x", "--b", "y"
    )
    assert code == 0
    report = json.loads(out)
    assert report["verdict"] == "witness"
    assert report["witness"] == {"x": "x", "i": 1, "j": -1}


def test_pingpong(capsys):
    code, out, _ = run(
        capsys, "pingpong", "--spec", "factors: g:3 x:2", "g x g", "x g x g x"
    )
    assert code == 0
    assert json.loads(out)["verdict"] == "free-up-to-bound"


def test_torsion_search(tmp_path, capsys):
    path = tmp_path / "p.txt"
    path.write_text(PJKL_222)
    code, out, _ = run(capsys, "torsion-search", str(path), "--level", "1")
    assert code == 0
    report = json.loads(out)
    assert report["exhaustive"] is True
    certified = {c["word"] for c in report["certificates"]}
    assert "x" in certified and "z" not in certified
    assert all(c["verified"] for c in report["certificates"])


def test_tgen_and_ln(tmp_path, capsys):
    path = tmp_path / "p.txt"
    path.write_text("gens: x1\nrel: x1 x1 x1\n")
    out_path = tmp_path / "out.txt"
    code, out, _ = run(capsys, "tgen", str(path), "--out", str(out_path))
    assert code == 0
    assert json.loads(out)["counts"]["generators"] == 2
    assert out_path.read_text().startswith("gens: a t")
    code, out, _ = run(capsys, "ln", str(path))
    assert code == 0


def test_budget_scale_env(tmp_path, capsys, monkeypatch):
    path = tmp_path / "p.txt"
    path.write_text("gens: x\nrel: x x\n")
    monkeypatch.setenv("TORLEN_BUDGET_SCALE", "2")
    code, out, _ = run(capsys, "torsion-search", str(path))
    assert code == 0
    assert json.loads(out)["budgets"]["word_bound"] == 12
    monkeypatch.setenv("TORLEN_BUDGET_SCALE", "zero")
    with pytest.raises(SystemExit):
        run(capsys, "torsion-search", str(path))
