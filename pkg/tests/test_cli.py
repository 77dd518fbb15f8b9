import io
import subprocess
import sys

import pytest

from exactreal.cli import main


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


def test_eval():
    code, text = run("eval", "pi / sqrt(2)", "--eps", "1e-4")
    assert code == 0
    assert text.startswith("2.2214")
    assert "± 1e-4" in text


def test_eval_exact():
    code, text = run("eval", "1 - 1")
    assert code == 0 and text.strip() == "0 exactly"


@pytest.mark.parametrize(
    "argv, code",
    [
        (("eval", "sqrt("), 3),
        (("eval", "1/(1-1)"), 4),
        (("eval", "x"), 4),
        (("eval", "pi", "--eps", "0"), 4),
        (("eval", "pi", "--eps", "abc"), 3),
        (("eval",), 3),
        (("frobnicate",), 3),
        (("derive", "x*x", "--at", "1", "--depth", "0"), 4),
        (("derive", "x*x", "--at", "1", "--dx", "1/"), 3),
    ],
)
def test_error_exit_codes(argv, code):
    assert run(*argv)[0] == code


def test_parse_error_reports_offset():
    _, text = run("eval", "sqrt(")
    assert "offset 5" in text


def test_derive_worked_example():
    code, text = run("derive", "x*x", "--at", "3", "--dx", "1/2^n", "--eps", "1e-6", "--depth", "30")
    assert code == 0
    assert "estimate 6.0000000" in text
    assert "holds-to-depth" in text


def test_derive_counterexample_exit():
    code, text = run("derive", "x*x", "--at", "0", "--dx", "(-1)^n", "--eps", "1/2", "--depth", "10")
    assert code == 1
    assert "counterexample" in text


def test_superclass_verdicts():
    assert run("superclass", "interval", "0", "1", "--member", "1/3", "--eps", "1e-3")[0] == 0
    assert run("superclass", "interval", "0", "1", "--member", "2", "--eps", "1/4")[0] == 1
    assert run("superclass", "interval", "0", "inf", "--member", "inf", "--eps", "1/100")[0] == 0
    assert run("superclass", "interval", "2", "1", "--member", "1")[0] == 4


def test_superclass_unknown_exit():
    # endpoint at a depth too small to collect three hits
    code, text = run("superclass", "interval", "0", "1", "--member", "1/3", "--eps", "1e-6", "--depth", "5")
    assert code == 2
    assert "unknown-at-effort" in text


def test_demos():
    code, text = run("demo", "zeno", "--eps", "1e-3", "--depth", "10000")
    assert code == 0
    assert "(1, 1): true-with-witness" in text
    assert "=_R 1: true-with-witness" in text
    code, text = run("demo", "nested")
    assert code == 0 and "(0, 0): true-with-witness" in text
    code, text = run("demo", "segments")
    assert code == 0 and "(-inf, +inf): true-with-witness" in text
    code, text = run("demo", "step", "--eps", "1/8")
    assert "(-1, 2): false-with-witness" in text


def test_zerodiv_demo():
    code, text = run("demo", "zerodiv")
    lines = text.strip().splitlines()
    assert code == 0 and len(lines) == 3
    assert lines[0].endswith("value 1")
    assert lines[1].endswith("value 2")
    assert "not Cauchy at eps 1/2" in lines[2]


def test_output_is_deterministic():
    argv = ("eval", "e * pi - sqrt(3)", "--eps", "1e-12")
    assert run(*argv) == run(*argv)


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "exactreal", "eval", "1/2 + 1/3"],
        capture_output=True,
        text=True,
        check=False,
    )
    assert proc.returncode == 0
    assert proc.stdout.strip() == "5/6 exactly"
    bad = subprocess.run([sys.executable, "-m", "exactreal", "eval", "(("], capture_output=True, text=True)
    assert bad.returncode == 3
    assert "parse error" in bad.stderr
