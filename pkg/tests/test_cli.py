import json

import pytest

from oghx import verification
from oghx.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_solve_prints_optimum(capsys):
    code, out, err = run(
        capsys, "solve", "--n", "5", "--r", "2", "--order", "linear",
        "--pattern", "crossing-path", "--k", "3",
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["optimum"] == 7 and doc["status"] == "proven"
    assert "optimum 7" in err


def test_construct_then_check(tmp_path, capsys):
    out_file = tmp_path / "g.ogh"
    code, out, _ = run(
        capsys, "construct", "--family", "consecutive",
        "--n", "6", "--r", "3", "--k", "2", "-o", str(out_file),
    )
    assert code == 0
    assert json.loads(out)["edges"] == 10
    code, out, err = run(
        capsys, "check", "--file", str(out_file), "--pattern", "crossing-path", "--k", "2",
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["free"] is True and doc["edges"] == 10
    assert "FREE" in err


def test_check_reports_embedding(tmp_path, capsys):
    host = tmp_path / "h.ogh"
    host.write_text("oghx v1\nn=4 r=2 order=linear\n0 2\n1 2\n1 3\n")
    code, out, err = run(
        capsys, "check", "--file", str(host), "--pattern", "crossing-path", "--k", "3",
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["free"] is False and doc["embedding"] == [0, 1, 2, 3]
    assert "CONTAINS" in err


def test_bounds_matching_exact(capsys):
    code, out, _ = run(
        capsys, "bounds", "--n", "7", "--r", "3", "--k", "2",
        "--pattern", "crossing-matching", "--order", "cyclic",
    )
    assert code == 0
    assert json.loads(out)["exact"] == 31


def test_usage_error_exit_code(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["solve", "--bogus"])
    assert exc.value.code == 2


def test_infeasible_parameters_exit_code(capsys):
    code, _, err = run(
        capsys, "bounds", "--n", "4", "--r", "2", "--k", "3",
        "--pattern", "crossing-path", "--order", "linear",
    )
    assert code == 3
    assert "infeasible" in err


def test_parse_error_exit_code(tmp_path, capsys):
    bad = tmp_path / "bad.ogh"
    bad.write_text("oghx v1\nn=4 r=2 order=linear\n2 0\n")
    code, _, err = run(capsys, "check", "--file", str(bad))
    assert code == 2


def test_timeout_exit_code(tmp_path, capsys):
    code, out, _ = run(
        capsys, "solve", "--n", "8", "--r", "2", "--order", "linear",
        "--pattern", "crossing-path", "--k", "3", "--max-nodes", "2",
    )
    assert code == 4
    assert json.loads(out)["status"] == "timeout"


def test_solve_interval_parts(capsys):
    code, out, _ = run(
        capsys, "solve", "--parts", "2,2,2", "--pattern", "crossing-path", "--k", "2",
        "--order", "linear",
    )
    assert code == 0
    assert json.loads(out)["optimum"] == 4


def test_witness_file_written(tmp_path, capsys):
    wit = tmp_path / "w.ogh"
    code, out, _ = run(
        capsys, "solve", "--n", "5", "--r", "2", "--order", "linear",
        "--pattern", "crossing-path", "--k", "3", "-o", str(wit),
    )
    assert code == 0
    from oghx import crossing_path_pattern, is_free, parse, LINEAR

    w = parse(wit.read_text())
    assert w.edge_count == 7
    assert is_free(w, crossing_path_pattern(2, 3, LINEAR))


def test_verify_quick_deterministic_csv(tmp_path, capsys):
    a = tmp_path / "a.csv"
    b = tmp_path / "b.csv"
    code1, _, _ = run(capsys, "verify", "--quick", "--csv", str(a))
    code2, _, _ = run(capsys, "verify", "--quick", "--csv", str(b))
    assert code1 == 0 and code2 == 0
    assert a.read_bytes() == b.read_bytes()
    header = a.read_text().splitlines()[0]
    assert header == verification.CSV_HEADER


def test_verify_detects_corrupted_generator(capsys, monkeypatch):
    import oghx.verification as ver

    real = ver.gen_consecutive

    def corrupted(n, r, k, order=None):
        g = real(n, r, k)
        if g.edges:
            from oghx.core import Hypergraph

            return Hypergraph(n=g.n, r=g.r, order=g.order, edges=g.edges[:-1])
        return g

    monkeypatch.setattr(ver, "gen_consecutive", corrupted)
    code, out, err = run(capsys, "verify", "--quick")
    assert code == 1
    assert any("false" in line for line in out.splitlines()[1:])


def test_selftest(capsys):
    code, out, _ = run(capsys, "selftest")
    assert code == 0
    assert json.loads(out)["failures"] == 0
