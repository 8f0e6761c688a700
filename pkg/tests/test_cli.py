import subprocess
import sys

import pytest

from catroute.cli import main


@pytest.fixture
def path3(tmp_path):
    f = tmp_path / "path3.edges"
    f.write_text("0 1\n1 2\n")
    return f


@pytest.fixture
def k4(tmp_path):
    f = tmp_path / "k4.edges"
    f.write_text("0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n")
    return f


def test_construct_path3(path3, tmp_path, capsys):
    out = tmp_path / "out.cats"
    assert main(["construct", str(path3), "--out", str(out)]) == 0
    stdout = capsys.readouterr().out
    assert "memdim=2" in stdout and "diam=2" in stdout and "method=path" in stdout
    assert out.read_text() == "0\n0 1\n1 2\n2\n"


def test_construct_single_vertex(tmp_path, capsys):
    f = tmp_path / "one.edges"
    f.write_text("# n=1\n")
    out = tmp_path / "one.cats"
    assert main(["construct", str(f), "--out", str(out)]) == 0
    assert out.read_text() == "0\n"


def test_construct_then_check_round_trip(k4, tmp_path, capsys):
    out = tmp_path / "k4.cats"
    assert main(["construct", str(k4), "--out", str(out)]) == 0
    assert main(["check", str(k4), str(out)]) == 0
    stdout = capsys.readouterr().out
    assert "works=true" in stdout
    assert "shattered=true" in stdout
    assert "internally_connected=true" in stdout


def test_construct_wrong_method(k4, tmp_path):
    assert main(["construct", str(k4), "--method", "path", "--out", str(tmp_path / "x")]) == 1
    assert main(["construct", str(k4), "--method", "tree", "--out", str(tmp_path / "x")]) == 1


def test_construct_deterministic_bytes(k4, tmp_path, capsys):
    a, b = tmp_path / "a.cats", tmp_path / "b.cats"
    assert main(["construct", str(k4), "--out", str(a)]) == 0
    assert main(["construct", str(k4), "--out", str(b)]) == 0
    assert a.read_bytes() == b.read_bytes()


def test_check_not_shattered(path3, tmp_path, capsys):
    cats = tmp_path / "one.cats"
    cats.write_text("0 1 2\n")
    assert main(["check", str(path3), str(cats)]) == 1
    stdout = capsys.readouterr().out
    assert "shattered=false" in stdout and "works=false" in stdout
    assert "shattered: no (pair 0->1)" in stdout


def test_check_quiet_prints_single_line(path3, tmp_path, capsys):
    cats = tmp_path / "s.cats"
    cats.write_text("0\n0 1\n1 2\n2\n")
    assert main(["check", str(path3), str(cats), "--quiet"]) == 0
    lines = capsys.readouterr().out.strip().splitlines()
    assert len(lines) == 1
    assert lines[0].startswith("shattered=true internally_connected=true memdim=2")


def test_check_id_out_of_range(path3, tmp_path, capsys):
    cats = tmp_path / "bad.cats"
    cats.write_text("0 7\n")
    assert main(["check", str(path3), str(cats)]) == 4


def test_parse_error_exit_code(tmp_path):
    bad = tmp_path / "bad.edges"
    bad.write_text("0 zero\n")
    assert main(["construct", str(bad), "--out", str(tmp_path / "x")]) == 2


def test_disconnected_exit_code(tmp_path):
    f = tmp_path / "disc.edges"
    f.write_text("# n=3\n0 1\n")
    assert main(["construct", str(f), "--out", str(tmp_path / "x")]) == 3


def test_route_trace(path3, tmp_path, capsys):
    cats = tmp_path / "s.cats"
    cats.write_text("0\n0 1\n1 2\n2\n")
    assert main(["route", str(path3), str(cats), "0", "2"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[:3] == ["hop 0: 0 (d=2)", "hop 1: 1 (d=1)", "hop 2: 2 (d=0)"]
    assert lines[3] == "delivered in 2 hops"


def test_route_to_self(path3, tmp_path, capsys):
    cats = tmp_path / "s.cats"
    cats.write_text("0\n0 1\n1 2\n2\n")
    assert main(["route", str(path3), str(cats), "1", "1"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "hop 0: 1 (d=0)"


def test_route_stuck(tmp_path, capsys):
    edge = tmp_path / "edge.edges"
    edge.write_text("0 1\n")
    cats = tmp_path / "s.cats"
    cats.write_text("0 1\n")
    assert main(["route", str(edge), str(cats), "0", "1"]) == 1
    assert "stuck at 0" in capsys.readouterr().out


def test_route_bad_vertex(path3, tmp_path):
    cats = tmp_path / "s.cats"
    cats.write_text("0\n1\n2\n")
    assert main(["route", str(path3), str(cats), "0", "9"]) == 4


def test_bench_rows(tmp_path, capsys):
    out = tmp_path / "bench.csv"
    assert main(["bench", "--gen", "tree", "--n", "16,32", "--seeds", "3", "--out", str(out)]) == 0
    lines = out.read_text().splitlines()
    assert len(lines) == 7  # header + 6 rows
    assert lines[0] == "generator,seed,n,m,diam,memdim,bound,max_route,mean_route,max_stretch"
    assert "wrote 6 records" in capsys.readouterr().out


def test_bench_deterministic(tmp_path):
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    for f in (a, b):
        assert main(["bench", "--gen", "ws", "--n", "16", "--seeds", "2", "--out", str(f)]) == 0
    assert a.read_bytes() == b.read_bytes()


def test_oracle_path3(path3, capsys):
    assert main(["oracle", str(path3)]) == 0
    assert "min memdim = 2" in capsys.readouterr().out


def test_oracle_guard(tmp_path):
    f = tmp_path / "big.edges"
    f.write_text("".join(f"{i} {i+1}\n" for i in range(49)))
    assert main(["oracle", str(f)]) == 5


def test_console_entry_point(path3):
    proc = subprocess.run(
        [sys.executable, "-m", "catroute", "oracle", str(path3), "--quiet"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert "min memdim = 2" in proc.stdout
