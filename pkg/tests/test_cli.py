import io
import subprocess
import sys

import pytest

from hdg.cli import run_cli
from hdg.fixtures import connect_sum, fixture_files, load
from hdg.invariants import build_lens
from hdg.io import parse, serialize
from hdg.moves import replay


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run_cli(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


@pytest.fixture(scope="module")
def fx(tmp_path_factory):
    root = tmp_path_factory.mktemp("fixtures")
    code, out, _ = run("fixtures", str(root), "--max-p", "7")
    assert code == 0
    assert "osborne.hdg" in out.split()
    return root


def test_lens_pipe():
    build = subprocess.run([sys.executable, "-m", "hdg.cli", "lens", "build", "5", "2"], capture_output=True, text=True)
    rec = subprocess.run(
        [sys.executable, "-m", "hdg.cli", "lens", "recognize", "-"], input=build.stdout, capture_output=True, text=True
    )
    assert rec.returncode == 0 and rec.stdout.strip() == "L(5,2)"


def test_validate(fx, tmp_path):
    code, out, _ = run("validate", str(fx / "lens-5-2.hdg"))
    assert code == 0 and out.startswith("valid genus=1 crossings=5")
    garbage = tmp_path / "garbage.txt"
    garbage.write_text("this is not a diagram\n")
    assert run("validate", str(garbage))[0] == 2
    assert run("validate", str(tmp_path / "missing.hdg"))[0] == 2


def test_validate_reports_invalid(tmp_path):
    d = build_lens(3, 1)
    text = serialize(d).replace("genus 1\n", "genus 2\n", 1)
    bad = tmp_path / "bad.hdg"
    bad.write_text(text)
    code, out, err = run("validate", str(bad))
    assert code == 1 and "wrong-curve-count" in out


def test_tautify_trace_replays(fx, tmp_path):
    trace = tmp_path / "trace.txt"
    result = tmp_path / "out.hdg"
    code, _, _ = run("tautify", str(fx / "problem.hdg"), "-o", str(result), "--trace", str(trace))
    assert code == 0
    steps = trace.read_text().splitlines()
    assert len(steps) == 1
    start = parse((fx / "problem.hdg").read_text())
    assert serialize(replay(start, steps)) == result.read_text()


def test_dualize_and_report(fx):
    code, out, _ = run("dualize", str(fx / "octagon.hdg"), "--report")
    assert code == 0
    assert out.startswith("VHS 1")
    assert "clean=True" in out and "chi=-2" in out
    code, _, err = run("dualize", str(fx / "problem.hdg"))
    assert code == 1 and "not-" in err


def test_pinch(fx):
    code, out, _ = run("pinch", str(fx / "sum-2-1-3-1.hdg"))
    assert code == 0 and "tree=True" in out
    code, out, err = run("pinch", str(fx / "s2xs1.hdg"))
    assert code == 1 and "obstruction=True" in out


def test_area(fx, tmp_path):
    code, out, _ = run("area", str(fx / "lens-7-2.hdg"))
    assert code == 0 and out.strip() == "sigma*=7 disks=0 total=7"
    curves = tmp_path / "b.path"
    curves.write_text("b face:0.bo\n")
    d = connect_sum(build_lens(2, 1), build_lens(3, 1))
    f = tmp_path / "sum.hdg"
    f.write_text(serialize(d))
    code, out, err = run("area", str(f), "--curves", str(curves))
    assert code == 0, err
    assert out.strip() == "sigma*=5 disks=0 total=5"
    curves.write_text("b face:0.ro\n")
    code, _, err = run("area", str(f), "--curves", str(curves))
    assert code == 1 and "inessential" in err


def test_minimize(fx, tmp_path):
    result = tmp_path / "min.hdg"
    trace = tmp_path / "min.trace"
    code, out, _ = run(
        "minimize", str(fx / "sum-2-3-scrambled.hdg"), "--max-len", "8", "-o", str(result), "--trace", str(trace)
    )
    assert code == 0
    rows = [line.split() for line in out.splitlines()[1:-1]]
    areas = [int(r[1]) for r in rows]
    assert all(a > b for a, b in zip(areas, areas[1:]))
    assert "search=complete" in out
    start = load("sum-2-3-scrambled")
    assert serialize(replay(start, trace.read_text().splitlines())) == result.read_text()


def test_minimize_is_deterministic(fx):
    a = run("minimize", str(fx / "sum-5-sphere-scrambled.hdg"), "--max-len", "8")
    b = run("minimize", str(fx / "sum-5-sphere-scrambled.hdg"), "--max-len", "8", "--jobs", "2")
    assert a == b


def test_invariants(fx):
    code, out, _ = run("invariants", str(fx / "osborne.hdg"))
    assert code == 0
    assert "snf 1 13" in out and out.strip().endswith("h1 13")
    code, out, _ = run("invariants", str(fx / "s2xs1.hdg"))
    assert out.strip().endswith("h1 infinite")


def test_lens_usage_errors():
    assert run("lens", "build", "6", "2")[0] == 1
    assert run("lens", "build", "6")[0] == 1
    assert run("lens", "build", "a", "b")[0] == 1


def test_unknown_command():
    assert run("frobnicate")[0] == 2


def test_fixture_set_matches_library(fx):
    for name, text in fixture_files(max_p=7).items():
        assert (fx / name).read_text() == text
