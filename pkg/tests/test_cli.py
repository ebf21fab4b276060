"""Command-line behavior: the documented examples, exit codes, output
formats, determinism, and input plumbing.

Commands run in-process through redrank.cli.main so the tests stay
fast; the console entry point wraps the same function.
"""

import io
import json

import pytest

from redrank.cli import main
from redrank.formats import graph6_decode
from redrank.graphs import rank


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_rank_of_k4_prints_four(capsys):
    code, out, err = run(capsys, "rank", "--graph6", "C~")
    assert code == 0
    assert out == "4\n"
    assert err == ""


def test_rank_json(capsys):
    code, out, _ = run(capsys, "rank", "--graph6", "C~", "--format", "json")
    assert code == 0
    blob = json.loads(out)
    assert blob == {"schema": 1, "command": "rank", "order": 4, "rank": 4}


def test_rank_csv(capsys):
    code, out, _ = run(capsys, "rank", "--graph6", "C~", "--format", "csv")
    assert code == 0
    assert out == "order,rank\n4,4\n"


def test_reduce_text_prints_graph6(capsys):
    code, out, _ = run(capsys, "reduce", "--graph6", "Cr")
    assert code == 0
    assert out == "A_\n"


def test_tau_rho_delta(capsys):
    code, out, _ = run(capsys, "tau", "--graph6", "Ch")
    assert (code, out) == (0, "1\n")
    code, out, _ = run(capsys, "rho", "--graph6", "Cr")
    assert (code, out) == (0, "2\n")
    code, out, _ = run(capsys, "delta", "--graph6", "Ch",
                       "--u", "0", "--v", "2")
    assert (code, out) == (0, "1\n")


def test_witness_json(capsys):
    code, out, _ = run(capsys, "witness", "--graph6", "Ch")
    assert code == 0
    blob = json.loads(out)
    assert blob["schema"] == 1
    assert blob["pair"] == [0, 2]
    assert blob["removed"] == [3]
    assert blob["split_ok"] is True
    assert blob["t1"] == [] and blob["t2"] == [3]


def test_bounds_lists_applicable_methods(capsys):
    code, out, _ = run(capsys, "bounds", "--n", "10")
    assert code == 0
    blob = json.loads(out)
    methods = [r["method"] for r in blob["reports"]]
    assert methods == ["levenshtein", "closed_form", "rankin_integral"]
    code, _, _ = run(capsys, "bounds", "--n", "4")
    assert code == 0
    code, _, err = run(capsys, "bounds", "--n", "2")
    assert code == 2 and "error" in err


def test_lev_exact_rendering(capsys):
    code, out, _ = run(capsys, "lev", "--n", "10")
    assert code == 0
    blob = json.loads(out)
    assert blob["value_exact"] == "354640/1697 + 85800/1697*sqrt2"
    assert blob["value_decimal"] == "280.482924956754010127981669144"
    assert blob["k"] == 3 and blob["branch"] == "B"
    code, out, _ = run(capsys, "lev", "--n", "5", "--s=-1/2",
                       "--format", "text")
    assert code == 0
    assert out.startswith("n=5 levenshtein 3.0000")


def test_lev_rejects_bad_cosine(capsys):
    code, _, err = run(capsys, "lev", "--n", "5", "--s", "pi")
    assert code == 2 and "cosine" in err
    code, _, err = run(capsys, "lev", "--n", "5", "--s", "3/2")
    assert code == 2


def test_rankin_cases(capsys):
    code, out, _ = run(capsys, "rankin", "--n", "8", "--case", "half_pi")
    assert code == 0
    assert json.loads(out)["value_decimal"].startswith("16.000")
    code, out, _ = run(capsys, "rankin", "--n", "8", "--case", "obtuse")
    assert json.loads(out)["value_decimal"].startswith("9.000")
    code, out, _ = run(capsys, "rankin", "--n", "8", "--case", "acute")
    assert json.loads(out)["method"] == "rankin_integral"


def test_lemma5_short_window_all_hold(capsys):
    code, out, _ = run(capsys, "lemma5", "--from", "47", "--to", "52")
    assert code == 0
    blob = json.loads(out)
    assert blob["all_hold"] is True
    assert [r["n"] for r in blob["reports"]] == list(range(47, 53))
    assert all(r["holds"] for r in blob["reports"])


def test_lemma8_defaults_and_csv(capsys):
    code, out, _ = run(capsys, "lemma8", "--to", "10", "--format", "csv")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "n,method,value_decimal,threshold_decimal,holds,k,branch"
    assert len(lines) == 9    # header + n in 3..10


def test_census_counts(capsys):
    code, out, _ = run(capsys, "census", "--max-order", "5",
                       "--format", "csv")
    assert code == 0
    assert out.splitlines()[1:] == ["1,1,0", "2,2,1", "3,4,1",
                                    "4,11,4", "5,34,12"]


def test_conjecture_holds(capsys):
    code, out, _ = run(capsys, "conjecture", "--max-order", "5")
    assert code == 0
    blob = json.loads(out)
    assert blob["holds"] is True
    assert blob["violations"] == []


def test_conjecture_stream_from_stdin(capsys, monkeypatch):
    monkeypatch.setattr("sys.stdin", io.StringIO("C~\nCr\nDQc\n"))
    code, out, _ = run(capsys, "conjecture", "--max-order", "5",
                       "--input", "-")
    assert code == 0
    blob = json.loads(out)
    assert blob["holds"] is True


def test_extremal_roundtrip(capsys):
    code, out, _ = run(capsys, "extremal", "--rank", "4",
                       "--format", "text")
    assert code == 0
    g = graph6_decode(out.strip())
    assert g.n == 6 and rank(g) == 4
    code, _, err = run(capsys, "extremal", "--rank", "99")
    assert code == 2


def test_mineq_and_lemmas(capsys):
    code, out, _ = run(capsys, "mineq", "--r-max", "12")
    assert code == 0
    assert json.loads(out)["holds"] is True
    code, out, _ = run(capsys, "lemmas", "--max-order", "5")
    assert code == 0
    blob = json.loads(out)
    assert blob["holds"] is True
    assert blob["graphs_processed"] == 18


def test_usage_errors_exit_two(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["rank", "--no-such-flag"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 2
    code, _, err = run(capsys, "rank")
    assert code == 2 and "exactly one" in err
    code, _, err = run(capsys, "rank", "--graph6", "C~",
                       "--input", "x.g6")
    assert code == 2


def test_format_errors_exit_two(capsys):
    code, _, err = run(capsys, "rank", "--graph6", "!!")
    assert code == 2 and "line 1" in err
    code, _, err = run(capsys, "census", "--max-order", "11")
    assert code == 2 and "cap" in err
    code, _, err = run(capsys, "tau", "--graph6", "C~")
    assert code == 2


def test_missing_input_file_exit_two(capsys):
    code, _, err = run(capsys, "rank", "--input", "/no/such/file.g6")
    assert code == 2


def test_edge_list_autodetect(capsys, tmp_path):
    path = tmp_path / "p4.edges"
    path.write_text("4 3\n0 1\n1 2\n2 3\n")
    code, out, _ = run(capsys, "rank", "--input", str(path))
    assert (code, out) == (0, "4\n")
    code, out, _ = run(capsys, "rank", "--input", str(path),
                       "--input-format", "edges")
    assert (code, out) == (0, "4\n")


def test_output_file_and_threads_seed(capsys, tmp_path):
    path = tmp_path / "report.json"
    code, out, _ = run(capsys, "bounds", "--n", "8",
                       "--output", str(path), "--threads", "4",
                       "--seed", "7")
    assert code == 0
    assert out == ""
    blob = json.loads(path.read_text())
    assert blob["schema"] == 1


def test_byte_identical_reruns(capsys):
    outs = []
    for _ in range(2):
        code, out, _ = run(capsys, "conjecture", "--max-order", "4")
        assert code == 0
        outs.append(out)
    assert outs[0] == outs[1]
    for _ in range(2):
        code, out, _ = run(capsys, "lemma8", "--to", "12", "--format", "csv")
        outs.append(out)
    assert outs[2] == outs[3]
