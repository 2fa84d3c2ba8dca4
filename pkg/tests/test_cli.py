"""Command-line front end: batch mode, exit codes, and line buffering."""

import io
import subprocess
import sys

import pytest

from abacus.cli import _needs_continuation, main, run_script
from abacus.runtime import Session


def _run(source, tmp_path, precision=None):
    session = Session()
    if precision:
        session.ctx.set_words(precision)
    out, err = io.StringIO(), io.StringIO()
    status = run_script(source, session, str(tmp_path / "exports"),
                        stdout=out, stderr=err)
    return status, out.getvalue(), err.getvalue(), session


def test_run_script_success(tmp_path):
    status, out, err, _ = _run("2^( 3 + 1 ) / 4\n$v = 2\n$v * 3", tmp_path)
    assert status == 0
    assert out == "4\n6\n"
    assert err == ""


def test_run_script_error_exit_code(tmp_path):
    status, out, err, _ = _run("1 + 1\n1/0\n2 + 2", tmp_path)
    assert status == 1
    assert out == "2\n"
    assert "error:" in err


def test_run_script_matches_session_execute(tmp_path):
    src = ("precision 2\npi()\n$x = [9, 3, -1, -2, 4, 5]\n"
           "mean($x)\nstddev($x)\nhelp invert")
    _, out, _, _ = _run(src, tmp_path)
    expected = [it.text for it in Session().execute(src)
                if it.tag == "text"]
    assert out.splitlines() == expected


def test_auto_export_charts_and_reports(tmp_path):
    src = ("$x = sequence(-1, 1, 0.1)\n"
           'plot($x, $x, xtitle="x")\n'
           "ztest([9, 3, -1, -2, 4, 5], 2, 3, report=true)")
    status, _, _, _ = _run(src, tmp_path)
    assert status == 0
    exports = tmp_path / "exports"
    assert (exports / "chart_1.svg").exists()
    assert (exports / "report_1.html").exists()
    assert "<svg" in (exports / "chart_1.svg").read_text(encoding="utf-8")


def test_no_exports_no_directory(tmp_path):
    _run("1 + 1", tmp_path)
    assert not (tmp_path / "exports").exists()


def test_main_script_file_and_missing_file(tmp_path, capsys):
    script = tmp_path / "s.abx"
    script.write_text("3 * 7\n", encoding="utf-8")
    assert main(["--script", str(script), "--output-dir",
                 str(tmp_path)]) == 0
    assert capsys.readouterr().out == "21\n"
    assert main(["--script", str(tmp_path / "nope.abx")]) == 2
    assert "cannot read" in capsys.readouterr().err


def test_main_script_stdin(tmp_path, monkeypatch, capsys):
    monkeypatch.setattr(sys, "stdin", io.StringIO("1 + 2\n"))
    assert main(["--script", "-", "--output-dir", str(tmp_path)]) == 0
    assert capsys.readouterr().out == "3\n"


def test_main_precision_flag(tmp_path, capsys):
    script = tmp_path / "s.abx"
    script.write_text("pi()\n", encoding="utf-8")
    assert main(["--script", str(script), "--precision", "2",
                 "--output-dir", str(tmp_path)]) == 0
    assert capsys.readouterr().out == "3.141592653589793\n"


def test_console_entry_point(tmp_path):
    proc = subprocess.run(
        [sys.executable, "-m", "abacus.cli", "--script", "-",
         "--output-dir", str(tmp_path)],
        input="2 + 2\n", capture_output=True, text=True, timeout=60)
    assert proc.returncode == 0
    assert proc.stdout == "4\n"


@pytest.mark.parametrize("buffer,expect", [
    ("1 + 2", False),
    ("(1 + 2", True),
    ("[1, 2,", True),
    ("{[1, 2], 1,", True),
    ("(1) + (2)", False),
    ("1 + 2 %", True),
    ("1 + 2 % ", True),
    ("1 + 2 %\n3", False),
    ("1 + 2 % // note\n", True),
    ('"(unclosed', False),
    ('"(closed)" + 1', False),
    ("// just a comment (", False),
    ("plot(\n$x,", True),
])
def test_needs_continuation(buffer, expect):
    assert _needs_continuation(buffer) is expect


def test_repl_like_buffering_equals_batch(tmp_path):
    # feeding physical lines through the continuation logic must yield
    # the same logical statements the batch runner sees
    physical = ["$x = [1, 2, %", "3]", "mean($x)"]
    buffer, outputs = "", []
    session = Session()
    for line in physical:
        buffer = buffer + "\n" + line if buffer else line
        if _needs_continuation(buffer):
            continue
        outputs.extend(it.text for it in session.execute(buffer)
                       if it.tag == "text")
        buffer = ""
    assert buffer == ""
    assert outputs == ["2"]
