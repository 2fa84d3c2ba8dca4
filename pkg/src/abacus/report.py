"""Printable report objects (HTML and plain text).

Reports are immutable snapshots: hypothesis-test summaries rendered as a
small HTML document, or the console transcript wrapped verbatim.
"""

from xml.sax.saxutils import escape

from . import errors
from .bignum import PrecisionContext, format_decimal
from .stats import TTestResult, ZTestResult

_HTML_HEAD = (
    '<!DOCTYPE html>\n<html>\n<head>\n<meta charset="utf-8"/>\n'
    "<title>{title}</title>\n"
    "<style>\n"
    "body {{ font-family: sans-serif; margin: 2em; }}\n"
    "table {{ border-collapse: collapse; }}\n"
    "td, th {{ border: 1px solid #999; padding: 4px 10px; text-align: left; }}\n"
    "</style>\n</head>\n<body>\n"
)


class Report:
    __slots__ = ("name", "kind", "body", "created_from")

    def __init__(self, name: str, kind: str, body: str, created_from: str):
        if kind not in ("html", "text"):
            raise errors.DomainError(f"unknown report kind {kind!r}")
        self.name = name
        self.kind = kind
        self.body = body
        self.created_from = created_from

    def __repr__(self):
        return f"Report({self.name!r}, {self.kind})"


def _fmt(value, digits: int) -> str:
    return format_decimal(value, digits)


def _table(rows: list[tuple[str, str]]) -> str:
    lines = ["<table>"]
    for label, val in rows:
        lines.append(f"<tr><th>{escape(label)}</th><td>{escape(val)}</td></tr>")
    lines.append("</table>")
    return "\n".join(lines)


def _test_report(title: str, rows: list[tuple[str, str]], decision: str,
                 p_str: str, created_from: str) -> Report:
    verdict = ("reject the null hypothesis" if decision == "reject"
               else "fail to reject the null hypothesis")
    body = (
        _HTML_HEAD.format(title=escape(title))
        + f"<h1>{escape(title)}</h1>\n"
        + _table(rows) + "\n"
        + f"<p>Decision at alpha = 0.05: {escape(verdict)} "
        + f"(p = {escape(p_str)}).</p>\n"
        + "</body>\n</html>\n"
    )
    return Report("", "html", body, created_from)


def build_ztest_report(r: ZTestResult, ctx: PrecisionContext) -> Report:
    d = ctx.output_digits
    p_str = _fmt(r.p_two_sided, d)
    rows = [
        ("n", str(r.n)),
        ("sample mean", _fmt(r.sample_mean, d)),
        ("mu0", _fmt(r.mu0, d)),
        ("sigma", _fmt(r.sigma, d)),
        ("z", _fmt(r.z, d)),
        ("p (two-sided)", p_str),
    ]
    return _test_report("One-sample z-test (two-sided)", rows, r.decision,
                        p_str, "ztest")


def build_ttest_report(r: TTestResult, ctx: PrecisionContext) -> Report:
    d = ctx.output_digits
    p_str = _fmt(r.p_two_sided, d)
    rows = [
        ("n", str(r.n)),
        ("df", str(r.df)),
        ("sample mean", _fmt(r.sample_mean, d)),
        ("mu0", _fmt(r.mu0, d)),
        ("sample stddev", _fmt(r.sample_stddev, d)),
        ("t", _fmt(r.t, d)),
        ("p (two-sided)", p_str),
    ]
    return _test_report("One-sample t-test (two-sided)", rows, r.decision,
                        p_str, "ttest")


def console_to_report(transcript: str, kind: str) -> Report:
    """Wrap a snapshot of the output-console text as a report object."""
    if kind == "text":
        return Report("", "text", transcript, "console")
    if kind != "html":
        raise errors.DomainError(f"unknown report kind {kind!r}")
    body = (
        _HTML_HEAD.format(title="Console transcript")
        + "<h1>Console transcript</h1>\n"
        + f"<pre>{escape(transcript)}</pre>\n"
        + "</body>\n</html>\n"
    )
    return Report("", "html", body, "console")


def export_report(report: Report, path: str) -> None:
    try:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(report.body)
    except OSError as exc:
        raise errors.IoError(f"cannot write report to {path}: {exc}") from None
