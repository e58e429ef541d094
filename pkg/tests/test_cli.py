import io
import re
import subprocess
import sys

import pytest

from streamcalc.cli import main

from conftest import FIB_DOC

SHUFFLE_DOC = "product = shuffle\ny' = y^2 ; y(0) = 1\nw' = y ; w(0) = 0\n"
CUSTOM_DOC = "product = custom\nF = y2*y3 + y1*y4\nG = 0\ny' = y^2 ; y(0) = 1\nw' = y ; w(0) = 0\n"
ROTATION_DOC = "product = convolution\nx1' = -x2 ; x1(0) = 1\nx2' = x1 ; x2(0) = 0\n"


@pytest.fixture
def files(tmp_path):
    out = {}
    for name, text in [("fib", FIB_DOC), ("shuffle", SHUFFLE_DOC), ("custom", CUSTOM_DOC), ("rot", ROTATION_DOC)]:
        path = tmp_path / f"{name}.sde"
        path.write_text(text)
        out[name] = str(path)
    return out


def run(*argv):
    buf = io.StringIO()
    code = main(list(argv), out=buf)
    return code, buf.getvalue()


class TestTerms:
    def test_fibonacci(self, files):
        assert run("terms", files["fib"], "8", "x1") == (0, "(0, 1, 1, 2, 3, 5, 8, 13)\n")

    def test_rationals_printed_exactly(self, files):
        code, out = run("terms", files["fib"], "3", "1/3*x2")
        assert (code, out) == (0, "(1/3, 1/3, 2/3)\n")


class TestZero:
    def test_fibonacci_trace(self, files):
        code, out = run("zero", files["fib"], "x1*(1-x-x^2)-x", "-v")
        assert code == 0
        lines = out.splitlines()
        assert lines[0] == "k=0: p^(0) = -x^2*x1 - x*x1 + x1 - x; output = 0; not in <>"
        assert lines[1] == "k=1: p^(1) = -x*x1 + x2 - x1 - 1; output = 0; not in <p^(0)>"
        assert lines[2] == "k=2: p^(2) = 0; output = 0; in <p^(0), p^(1)>"
        assert lines[-1] == "YES at k=2"

    def test_quiet(self, files):
        assert run("zero", files["fib"], "x1*(1-x-x^2)-x") == (0, "YES at k=2\n")

    def test_no_with_witness(self, files):
        code, out = run("zero", files["fib"], "x1")
        assert code == 1
        assert out == "NO at k=1: output of p^(1) is 1\n"

    def test_certificate(self, tmp_path):
        path = tmp_path / "df.sde"
        path.write_text("product = shuffle\ny' = y^3 ; y(0) = 1\n")
        code, out = run("zero", str(path), "y^2*(x - 1/2) + 1/2", "-v")
        assert code == 0
        assert "certificate: p^(1) = (2*y^2)*p^(0)" in out

    def test_cap(self, tmp_path):
        path = tmp_path / "cat.sde"
        path.write_text("product = convolution\ny' = y^2 ; y(0) = 1\n")
        assert run("zero", str(path), "y - x*y^2 - 1", "--cap", "1") == (3, "CAP_EXCEEDED after 1 iterations\n")

    def test_precondition(self, tmp_path):
        path = tmp_path / "left.sde"
        path.write_text("product = custom\nF = y1\ny' = y ; y(0) = 1\n")
        assert run("zero", str(path), "y")[0] == 3


class TestEqual:
    def test_yes_and_no(self, files):
        assert run("equal", files["fib"], "x1*(1-x-x^2)", "x")[0] == 0
        assert run("equal", files["fib"], "x1", "x2")[0] == 1


class TestIdentities:
    def test_factorial_identity(self, files):
        code, out = run("identities", files["shuffle"], "-d", "2")
        assert (code, out) == (0, "x*y - y + 1\n")


class TestGeneratingFunctions:
    def test_gf(self, files):
        code, out = run("gf", files["rot"])
        assert (code, out) == (0, "x1: 1 / (1 + z^2)\nx2: z / (1 + z^2)\n")

    def test_fibonacci_gf(self, files):
        assert run("gf", files["fib"])[1].splitlines()[0] == "x1: z / (1 - z - z^2)"

    def test_ode(self, files):
        code, out = run("ode", files["rot"], "-n", "6")
        assert code == 0
        assert out == "x1: (1, 0, -1/2, 0, 1/24, 0)\nx2: (0, 1, 0, -1/6, 0, 1/120)\n"

    def test_nonlinear_rejected(self, files):
        assert run("gf", files["shuffle"])[0] == 3


class TestCheck:
    def test_builtin(self, files):
        code, out = run("check", files["fib"], "--trials", "20")
        assert code == 0
        assert "well-behaved: yes" in out and "F in <y3, y4>: yes" in out

    def test_broken(self, tmp_path):
        path = tmp_path / "broken.sde"
        path.write_text("product = custom\nF = y3\ny' = y ; y(0) = 1\n")
        code, out = run("check", str(path), "--trials", "10")
        assert code == 1
        assert "well-behaved: no" in out
        assert "counterexample (symmetry)" in out


class TestErrors:
    def test_parse_error(self, files, capsys):
        assert run("terms", files["fib"], "3", "x1 +")[0] == 2
        assert "error:" in capsys.readouterr().err

    def test_missing_file(self, tmp_path):
        assert run("terms", str(tmp_path / "nope.sde"), "3", "x1")[0] == 2

    def test_bad_document(self, tmp_path, capsys):
        path = tmp_path / "bad.sde"
        path.write_text("product = shuffle\ny' = 1\n")
        assert run("terms", str(path), "3", "y")[0] == 2
        assert "line 2" in capsys.readouterr().err

    def test_usage(self, capsys):
        assert run()[0] == 2
        assert run("terms")[0] == 2
        assert run("frobnicate")[0] == 2


def test_custom_shuffle_document_matches_builtin(files):
    commands = [
        ("terms", "{}", "8", "y*w + x"),
        ("zero", "{}", "y*x - y + 1", "-v"),
        ("equal", "{}", "y*w", "w*y + x"),
        ("identities", "{}", "-d", "2"),
        ("check", "{}", "--trials", "10"),
    ]
    for cmd in commands:
        a = run(*(arg.format(files["shuffle"]) for arg in cmd))
        b = run(*(arg.format(files["custom"]) for arg in cmd))
        if cmd[0] == "check":
            a = (a[0], a[1].replace("product: shuffle", "product: custom"))
        assert a == b, cmd


def test_exact_output_has_no_floats(files):
    for argv in [("terms", files["shuffle"], "10", "y*w"), ("ode", files["rot"], "-n", "9")]:
        _, out = run(*argv)
        assert not re.search(r"\d\.\d", out)


def test_console_entry_point(files):
    proc = subprocess.run(
        [sys.executable, "-m", "streamcalc.cli", "terms", files["fib"], "5", "x2"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert proc.stdout == "(1, 1, 2, 3, 5)\n"
