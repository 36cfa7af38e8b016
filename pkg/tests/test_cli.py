import json
import subprocess
import sys

import pytest

from twistcode import graphs
from twistcode.cli import main
from twistcode.realization import format_assignment, uniform_assignment


@pytest.fixture
def run(capsys):
    def _run(*argv):
        code = main([str(a) for a in argv])
        out, err = capsys.readouterr()
        return code, out, err

    return _run


@pytest.fixture
def graph_file(tmp_path):
    def _write(G, name="g.txt"):
        path = tmp_path / name
        path.write_text(graphs.format_graph(G))
        return path

    return _write


def test_gen_graph_complete(run):
    code, out, _ = run("gen-graph", "complete", 8)
    assert code == 0
    assert out.splitlines()[0] == "p 8 28"
    assert len(out.splitlines()) == 29


def test_gen_graph_random_regular_is_byte_identical(run, tmp_path):
    a, b = tmp_path / "a.txt", tmp_path / "b.txt"
    assert run("gen-graph", "random-regular", 16, 3, "--seed", 7, "-o", a)[0] == 0
    assert run("gen-graph", "random-regular", 16, 3, "--seed", 7, "-o", b)[0] == 0
    assert a.read_bytes() == b.read_bytes()


def test_gen_graph_parity_error(run):
    code, _, err = run("gen-graph", "random-regular", 5, 3)
    assert code == 3 and "even" in err


def test_spectrum(run, graph_file):
    code, out, _ = run("spectrum", graph_file(graphs.complete(8)))
    rec = json.loads(out)
    assert code == 0
    assert abs(rec["lambda1"] - 7) <= 1e-9 and abs(rec["lambda2"] + 1) <= 1e-9
    assert json.loads(run("spectrum", graph_file(graphs.cycle(6)))[1])["girth"] == 6
    assert json.loads(run("spectrum", graph_file(graphs.path(5)))[1])["girth"] is None


def test_spectrum_parse_error_names_line(run, tmp_path):
    bad = tmp_path / "bad.txt"
    bad.write_text("p 3 2\ne 0 1\ne 2 1\n")
    code, _, err = run("spectrum", bad)
    assert code == 2 and "line 3" in err


def test_report_k8_hamming(run, graph_file):
    code, out, _ = run("report", graph_file(graphs.complete(8)), "--local-code", "hamming74")
    rec = json.loads(out)
    assert code == 0
    assert rec["proposition"]["holds"] is True
    assert rec["distance"] is not None
    assert rec["N"] == 28 and rec["distance_bound"] == "1/4"


def test_report_k4_parity(run, graph_file):
    rec = json.loads(run("report", graph_file(graphs.complete(4)), "--local-code", "parity")[1])
    assert rec["dimension"] == 3


def test_report_cap(run, graph_file):
    rec = json.loads(
        run("report", graph_file(graphs.petersen()), "--local-code", "full", "--max-bruteforce-dim", 5)[1]
    )
    assert rec["distance"] is None and rec["rate_bound"] is not None


def test_report_text_format(run, graph_file):
    code, out, _ = run("report", graph_file(graphs.complete(4)), "--local-code", "parity", "--format", "text")
    assert code == 0 and "dimension: 3" in out


def test_verify_with_assignment_file(run, graph_file, tmp_path):
    G = graphs.random_regular(12, 5, seed=1)
    asg = tmp_path / "a.txt"
    asg.write_text(format_assignment(uniform_assignment(G, "random:3", seed=2)))
    code, out, _ = run("verify", graph_file(G), asg)
    assert code == 0
    rec = json.loads(out)
    assert rec["holds"] and rec["code_dimension"] == rec["homology_dimension"]


def test_verify_corrupted_assignment(run, graph_file, tmp_path):
    asg = tmp_path / "a.txt"
    asg.write_text("v 0 1 3\n1z1\n")
    assert run("verify", graph_file(graphs.complete(4)), asg)[0] == 2


def test_verify_length_mismatch_names_vertex(run, graph_file, tmp_path):
    asg = tmp_path / "a.txt"
    asg.write_text("".join(f"v {u} 1 {2 if u == 2 else 3}\n{'11' if u == 2 else '111'}\n" for u in range(4)))
    code, _, err = run("verify", graph_file(graphs.complete(4)), asg)
    assert code == 3 and "vertex 2" in err


def test_local_code_and_file_are_exclusive(run, graph_file, tmp_path):
    asg = tmp_path / "a.txt"
    asg.write_text("")
    assert run("verify", graph_file(graphs.complete(4)), asg, "--local-code", "parity")[0] == 3


def test_module_entry_point(graph_file):
    proc = subprocess.run(
        [sys.executable, "-m", "twistcode", "verify", str(graph_file(graphs.petersen())), "--local-code", "parity"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0 and json.loads(proc.stdout)["holds"]
