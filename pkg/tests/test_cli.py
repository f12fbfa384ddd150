import io

import pytest

from mngraph.cli import run


def _run(capsys, argv, stdin_text=None, monkeypatch=None):
    if stdin_text is not None:
        monkeypatch.setattr("sys.stdin", io.StringIO(stdin_text))
    code = run(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_build_then_check_relative(capsys, monkeypatch, tmp_path):
    path = tmp_path / "c5.mng"
    code, out, _ = _run(capsys, ["build", "c5_02", "-o", str(path)])
    assert code == 0
    code, out, _ = _run(capsys, ["check", str(path), "--relative"])
    assert code == 0
    assert out == "4\nwitness 0 1 2 3\n"


def test_check_reads_stdin(capsys, monkeypatch):
    code, text, _ = _run(capsys, ["build", "star", "--m", "1", "--n", "1"])
    assert code == 0
    code, out, _ = _run(capsys, ["check", "-", "--absolute"], stdin_text=text, monkeypatch=monkeypatch)
    assert code == 0
    assert out.splitlines()[0] == "4"


def test_check_chromatic_and_sees(capsys, monkeypatch, tmp_path):
    path = tmp_path / "c5.mng"
    _run(capsys, ["build", "c5_02", "-o", str(path)])
    code, out, _ = _run(capsys, ["check", str(path), "--chromatic"])
    assert code == 0
    assert out.splitlines()[0] == "4"
    assert out.splitlines()[1].startswith("partition ")
    code, out, _ = _run(capsys, ["check", str(path), "--sees", "0", "2"])
    assert (code, out) == (0, "true\n")
    code, out, _ = _run(capsys, ["check", str(path), "--sees", "1", "4"])
    assert (code, out) == (0, "false\n")
    code, _, err = _run(capsys, ["check", str(path), "--sees", "0", "99"])
    assert code == 2
    assert "99" in err


def test_missing_file_is_usage_error(capsys):
    code, out, err = _run(capsys, ["check", "missing.mng", "--relative"])
    assert code == 2
    assert "missing.mng" in err


def test_malformed_file_is_usage_error(capsys, tmp_path):
    path = tmp_path / "bad.mng"
    path.write_text("not a graph\n")
    code, _, err = _run(capsys, [str(x) for x in ["check", path, "--relative"]])
    assert code == 2
    assert "error" in err


def test_capacity_error_is_named(capsys, tmp_path):
    path = tmp_path / "pet.mng"
    _run(capsys, ["build", "petersen_11", "-o", str(path)])
    code, _, err = _run(capsys, ["check", str(path), "--chromatic", "--max-partition-vertices", "5"])
    assert code == 2
    assert "capacity" in err


def test_build_underlying_flag(capsys, tmp_path):
    code, out, _ = _run(capsys, ["build", "wagner_02", "--underlying"])
    assert code == 0
    assert out.startswith("mngraph v1\nm 0 n 1\nvertices 8\n")
    assert "edge 0 1 1" in out


def test_build_parametric_requires_mn(capsys):
    code, _, err = _run(capsys, ["build", "star"])
    assert code == 2
    assert "--m" in err


def test_recognize_output(capsys, monkeypatch):
    _, text, _ = _run(capsys, ["build", "petersen_11"])
    code, out, _ = _run(capsys, ["recognize", "-"], stdin_text=text, monkeypatch=monkeypatch)
    assert code == 0
    assert out == (
        "max_degree=3\ngirth=5\ndegeneracy=3\ndiameter=2\n"
        "is_partial_2_tree=false\nis_planar=false\n"
    )


def test_search_c5(capsys, monkeypatch):
    _, text, _ = _run(capsys, ["build", "c5_02"])
    code, out, _ = _run(
        capsys,
        ["search", "-", "--m", "0", "--n", "2", "--objective", "relative"],
        stdin_text=text,
        monkeypatch=monkeypatch,
    )
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "value 4"
    assert lines[1].startswith("explored ")
    assert lines[2].startswith("labeling ")


def test_search_threads_byte_identical(capsys, monkeypatch, tmp_path):
    path = tmp_path / "c5.mng"
    _run(capsys, ["build", "c5_02", "-o", str(path)])
    outs = []
    for threads in ("1", "3"):
        code, out, _ = _run(
            capsys,
            ["search", str(path), "--m", "0", "--n", "2", "--objective", "absolute",
             "--threads", threads],
        )
        assert code == 0
        outs.append(out)
    assert outs[0] == outs[1]


def test_verify_suite_exit_code_and_report_file(capsys, tmp_path):
    report = tmp_path / "report.tsv"
    code, out, _ = _run(capsys, ["verify", "trees", "--report-file", str(report)])
    assert code == 0
    assert out.endswith("trees: overall PASS\n")
    body = report.read_text()
    assert body.splitlines()[0] == "suite\tcheck\tclaim\tclaimed\tcomputed\tpass"
    assert all(line.endswith("PASS") for line in body.splitlines()[1:])


def test_verify_byte_identical_across_threads(capsys):
    outs = []
    for threads in ("1", "4"):
        code, out, _ = _run(capsys, ["verify", "subcubic", "--seed", "0", "--threads", threads])
        assert code == 0
        outs.append(out)
    assert outs[0] == outs[1]


def test_usage_error_exit_code(capsys):
    assert run(["check"]) == 2
    assert run(["frobnicate"]) == 2
    assert run([]) == 2
