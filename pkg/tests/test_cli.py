from __future__ import annotations

import json

import pytest

from eilab import cli


def run(capsys, argv, stdin=None, monkeypatch=None):
    if stdin is not None:
        import io
        import sys

        monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
    code = cli.main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def test_reg_from_stdin(capsys, monkeypatch):
    code, out, _ = run(
        capsys, ["reg", "--g6", "-", "--char", "0", "--char", "2"], "Dhc\n", monkeypatch
    )
    assert code == 0
    lines = out.strip().split("\r\n")
    assert lines[0].startswith("id,n,m,nu,nu0,mm,cochord,reg_char0,reg_char2")
    assert lines[1].startswith("Dhc,5,5,,,,,3,3")


def test_classify_pentagon_json(capsys, tmp_path):
    doc = {"name": "pentagon", "n": 5, "edges": [[0, 1], [1, 2], [2, 3], [3, 4], [4, 0]]}
    path = tmp_path / "pentagon.json"
    path.write_text(json.dumps(doc))
    code = cli.main(["classify", "--json", str(path)])
    out = capsys.readouterr().out
    assert code == 0
    assert "structural=True" in out and "agree" in out
    assert "pentagon" in out


def test_invariants_csv(capsys, monkeypatch):
    code, out, _ = run(capsys, ["invariants", "--g6", "-"], "Dhc\n", monkeypatch)
    assert code == 0
    assert out.strip().split("\r\n")[1].startswith("Dhc,5,5,2,1,2,2")


def test_bounds(capsys, monkeypatch):
    code, out, _ = run(capsys, ["bounds", "--g6", "-"], "Dhc\n", monkeypatch)
    assert code == 0
    assert "reg in [3,3]" in out


def test_verify_small_pass(capsys):
    code = cli.main(["verify", "--max-n", "3", "--lemmas", "FL2", "--chars", "0"])
    out = capsys.readouterr().out
    assert code == 0
    assert out.startswith("PASS FL2")


def test_verify_theorem_small(capsys):
    code = cli.main(["verify", "--max-n", "3", "--chars", "0,2"])
    out = capsys.readouterr().out
    assert code == 0
    assert "PASS main-theorem" in out


def test_verify_unknown_lemma(capsys):
    code = cli.main(["verify", "--max-n", "2", "--lemmas", "FL9"])
    assert code == 1
    assert "unknown lemma tag" in capsys.readouterr().err


def test_enumerate(capsys):
    code = cli.main(["enumerate", "--n", "4", "--connected"])
    out = capsys.readouterr().out
    assert code == 0
    assert len(out.strip().splitlines()) == 6
    code = cli.main(["enumerate", "--n", "4"])
    out = capsys.readouterr().out
    assert len(out.strip().splitlines()) == 11


def test_usage_error_exits_2():
    with pytest.raises(SystemExit) as exc:
        cli.main(["reg", "--bogus"])
    assert exc.value.code == 2


def test_missing_input_is_error(capsys):
    code = cli.main(["reg"])
    assert code == 1
    assert "exactly one of" in capsys.readouterr().err


def test_malformed_graph6_reports_line_and_flushes_partials(capsys, tmp_path):
    path = tmp_path / "bad.g6"
    path.write_text("A_\nD?\n")
    code = cli.main(["reg", "--g6", str(path)])
    assert code == 1
    captured = capsys.readouterr()
    assert "line 2" in captured.err
    assert "A_,2,1" in captured.out  # the good line still produced its row


def test_json_format_output(capsys, monkeypatch):
    code, out, _ = run(
        capsys, ["reg", "--g6", "-", "--format", "json"], "A_\n", monkeypatch
    )
    assert code == 0
    data = json.loads(out)
    assert data[0]["reg_char0"] == 2


def test_json_array_input(capsys, tmp_path):
    docs = [
        {"name": "edge", "n": 2, "edges": [[0, 1]]},
        {"n": 3, "edges": [[0, 1], [1, 2]]},
    ]
    path = tmp_path / "two.json"
    path.write_text(json.dumps(docs))
    code = cli.main(["invariants", "--json", str(path)])
    out = capsys.readouterr().out
    assert code == 0
    lines = out.strip().split("\r\n")
    assert lines[1].startswith("edge,2,1") and lines[2].startswith("g1,3,2")


def test_verify_from_file(capsys, fixtures_dir):
    code = cli.main(
        ["verify", "--from-file", str(fixtures_dir / "connected_n4.g6"), "--chars", "0", "--no-unions"]
    )
    out = capsys.readouterr().out
    assert code == 0
    assert "PASS main-theorem: 6 graphs" in out
