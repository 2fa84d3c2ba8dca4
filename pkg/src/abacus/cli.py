"""Terminal front end: interactive REPL and batch script runner."""

import argparse
import os
import sys

from . import report as report_mod, viz
from .runtime import ERROR, Session

_PROMPT = "abacus> "
_CONT_PROMPT = "  ... "
_RED = "\x1b[31m"
_RESET = "\x1b[0m"


def _build_argparser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="abacus",
        description="Arbitrary-precision calculator and statistics console.")
    p.add_argument("--script", metavar="PATH",
                   help="run a script instead of the interactive console "
                        "('-' reads from standard input)")
    p.add_argument("--precision", type=int, metavar="WORDS",
                   help="initial precision in 32-bit memory blocks")
    p.add_argument("--output-dir", default=".", metavar="DIR",
                   help="directory for auto-exported charts and reports "
                        "(batch mode)")
    p.add_argument("--no-color", action="store_true",
                   help="disable terminal colors")
    return p


def _make_session(args) -> Session:
    session = Session()
    if args.precision is not None:
        session.ctx.set_words(args.precision)
    return session


def _auto_export(session: Session, out_dir: str):
    """Write every chart and report object to the output directory."""
    os.makedirs(out_dir, exist_ok=True)
    for name, chart in session.charts.items():
        viz.export_chart(chart, os.path.join(out_dir, f"{name}.svg"))
    for name, rep in session.reports.items():
        ext = "html" if rep.kind == "html" else "txt"
        report_mod.export_report(rep, os.path.join(out_dir, f"{name}.{ext}"))


def run_script(source: str, session: Session, out_dir: str,
               stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    status = 0
    for item in session.execute(source):
        if item.tag == ERROR:
            print(item.text, file=stderr)
            status = 1
        elif item.tag == "text":
            print(item.text, file=stdout)
    if session.charts or session.reports or session.datasets:
        _auto_export(session, out_dir)
    return status


def _needs_continuation(buffer: str) -> bool:
    """True when the buffered input is an incomplete logical line."""
    depth = 0
    i = 0
    n = len(buffer)
    trailing_pct = False
    while i < n:
        ch = buffer[i]
        if ch == '"':
            j = buffer.find('"', i + 1)
            nl = buffer.find("\n", i + 1)
            if j == -1 or (nl != -1 and nl < j):
                return False  # unterminated string: let the parser report it
            i = j + 1
            continue
        if ch == "/" and buffer.startswith("//", i):
            j = buffer.find("\n", i)
            i = n if j == -1 else j
            continue
        if ch in "([{":
            depth += 1
        elif ch in ")]}":
            depth -= 1
        elif ch == "%":
            j = i + 1
            while j < n and buffer[j] in " \t\r":
                j += 1
            if buffer.startswith("//", j):
                k = buffer.find("\n", j)
                j = n if k == -1 else k
            if j >= n or buffer[j] == "\n":
                trailing_pct = True
                i = j
                continue
        elif ch not in " \t\r\n":
            trailing_pct = False
        i += 1
    return depth > 0 or trailing_pct


def _setup_readline(session: Session):
    try:
        import readline
    except ImportError:
        return None
    history = os.environ.get(
        "ABACUS_HISTORY", os.path.join(os.path.expanduser("~"),
                                       ".abacus_history"))
    try:
        readline.read_history_file(history)
    except OSError:
        pass

    from .runtime import FUNCTIONS

    def completer(text, state):
        matches = session.complete_prefix(text)
        # functions complete with their opening parenthesis
        matches = [m + "(" if m in FUNCTIONS else m for m in matches]
        return matches[state] if state < len(matches) else None

    readline.set_completer(completer)
    readline.set_completer_delims(" \t\n()[]{},+-*/^=")
    readline.parse_and_bind("tab: complete")
    return history


def _save_history(history):
    if history is None:
        return
    try:
        import readline
        readline.write_history_file(history)
    except OSError:
        pass


def repl_loop(session: Session, color: bool) -> int:
    history = _setup_readline(session)
    buffer = ""
    try:
        while not session.exit_requested:
            prompt = _CONT_PROMPT if buffer else _PROMPT
            try:
                line = input(prompt)
            except EOFError:
                print()
                break
            except KeyboardInterrupt:
                print()
                buffer = ""
                continue
            buffer = buffer + "\n" + line if buffer else line
            if _needs_continuation(buffer):
                continue
            source, buffer = buffer, ""
            if not source.strip():
                continue
            for item in session.execute(source):
                if item.tag == ERROR and color:
                    print(f"{_RED}{item.text}{_RESET}")
                elif item.tag in (ERROR, "text"):
                    print(item.text)
    finally:
        _save_history(history)
    return 0


def main(argv=None) -> int:
    args = _build_argparser().parse_args(argv)
    session = _make_session(args)
    if args.script is not None:
        if args.script == "-":
            source = sys.stdin.read()
        else:
            try:
                with open(args.script, "r", encoding="utf-8") as fh:
                    source = fh.read()
            except OSError as exc:
                print(f"error: cannot read {args.script}: {exc}",
                      file=sys.stderr)
                return 2
        return run_script(source, session, args.output_dir)
    color = sys.stdout.isatty() and not args.no_color
    return repl_loop(session, color)


if __name__ == "__main__":
    sys.exit(main())
