import io
import subprocess
import sys
from pathlib import Path

import pytest

from depdisj import cli
from depdisj.document import parse_document, serialize_document

GOLDEN = Path(__file__).parent / "golden"
INPUTS = sorted(GOLDEN.glob("*.in"))


def run(args, stdin=""):
    out, err = io.StringIO(), io.StringIO()
    old = sys.stdin, sys.stdout, sys.stderr
    sys.stdin, sys.stdout, sys.stderr = io.StringIO(stdin), out, err
    try:
        code = cli.run(args)
    finally:
        sys.stdin, sys.stdout, sys.stderr = old
    return code, out.getvalue(), err.getvalue()


@pytest.mark.parametrize("path", INPUTS, ids=lambda p: p.stem)
def test_golden(path):
    code, out, _ = run([str(path), "--verify"])
    assert code == 0
    assert out == path.with_suffix(".out").read_text()


@pytest.mark.parametrize("path", sorted(GOLDEN.glob("*")), ids=lambda p: p.name)
def test_golden_roundtrip(path):
    doc = parse_document(path.read_text())
    assert parse_document(serialize_document(doc)) == doc


def test_outputs_are_fixed_points():
    for path in INPUTS:
        expected = path.with_suffix(".out").read_text()
        code, out, _ = run([], stdin=expected)
        assert code == 0
        assert out == expected


def test_stdin_and_output_file(tmp_path):
    target = tmp_path / "out.txt"
    text = (GOLDEN / "two_disjunctions.in").read_text()
    code, out, _ = run(["-", "-o", str(target)], stdin=text)
    assert code == 0 and out == ""
    assert target.read_text() == (GOLDEN / "two_disjunctions.out").read_text()


def test_stats_worked_example():
    code, _, err = run([str(GOLDEN / "three_disjunctions.in"), "--stats"])
    assert code == 0
    assert "rows 6 = 2 × 3" in err
    assert "ratio 1.20" in err


def test_stats_prime():
    code, out, err = run([str(GOLDEN / "prime.in"), "--stats"])
    assert code == 0
    assert "prime, modular" in err
    assert parse_document(out) == parse_document((GOLDEN / "prime.in").read_text())


def test_group_stats_invariant():
    with pytest.raises(AssertionError):
        cli.GroupStats("d", 4, 4, (2, 3), (1, 1))
    s = cli.GroupStats("d", 6, 6, (2, 3), (1, 2))
    assert s.rows_after == 5
    assert s.interaction_ratio == pytest.approx(1.2)


@pytest.mark.parametrize(
    "text, code",
    [
        ("group d\n a b\n", 1),
        ("nonsense\n", 1),
        ("group d\n a\nend\ngroup d\n b\nend\n", 1),
        ("group d\n a b\n c\nend\n", 2),
        ("group d\nend\n", 2),
    ],
)
def test_exit_codes(text, code):
    got, out, err = run([], stdin=text)
    assert got == code
    assert out == ""
    assert err.startswith("modularize: error:")


def test_guard_exit_code():
    text = "group wide\n a a b b\n x y y x\n p q p q\n p q p q\nend\n"
    assert run(["--max-group-size", "3"], stdin=text)[0] == 3
    assert run(["--max-group-size", "4"], stdin=text)[0] == 0


def test_missing_file():
    assert run(["/nonexistent/input.txt"])[0] == 1


def test_verification_failure(monkeypatch):
    from depdisj.core import make_group

    monkeypatch.setattr(cli, "modularize_group", lambda g, **kw: [make_group(g.name, ["bogus"])])
    code, out, err = run(["--verify", str(GOLDEN / "prime.in")])
    assert code == 4
    assert "solution set" in err


def test_verify_warns_on_large_groups(caplog):
    rows = [" ".join(f"v{i}_{k % 2}" for k in range(10)) for i in range(6)]
    text = "group big\n" + "\n".join(rows) + "\nend\n"
    with caplog.at_level("WARNING", logger="depdisj"):
        code, _, _ = run(["--verify"], stdin=text)
    assert code == 0
    assert "may be slow" in caplog.text


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "depdisj", str(GOLDEN / "lieben.in")],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert proc.stdout == (GOLDEN / "lieben.out").read_text()
