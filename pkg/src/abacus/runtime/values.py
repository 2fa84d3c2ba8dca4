"""Runtime value model and console rendering.

A value is one of: BigInt, BigFloat, BigComplex, NumVector, NumMatrix,
Dataset, ChartSpec, Report, str, bool, or UNIT (no output).
"""

from dataclasses import dataclass

from ..bignum import (BigComplex, BigFloat, BigInt, PrecisionContext,
                      format_decimal, sc_is_zero, sc_neg)
from ..dataio import Dataset
from ..linalg import NumMatrix, NumVector
from ..report import Report
from ..viz import ChartSpec


class _Unit:
    """Singleton for statements that produce no printable value."""

    __slots__ = ()

    def __repr__(self):
        return "UNIT"


UNIT = _Unit()

TEXT = "text"
ERROR = "error"
CHART_REF = "chart_ref"
REPORT_REF = "report_ref"


@dataclass(frozen=True)
class OutputItem:
    tag: str  # text | error | chart_ref | report_ref
    text: str


def value_class(v) -> str:
    if isinstance(v, BigInt):
        return "integer"
    if isinstance(v, BigFloat):
        return "float"
    if isinstance(v, BigComplex):
        return "complex"
    if isinstance(v, NumVector):
        return "vector"
    if isinstance(v, NumMatrix):
        return "matrix"
    if isinstance(v, Dataset):
        return "dataset"
    if isinstance(v, ChartSpec):
        return "chart"
    if isinstance(v, Report):
        return "report"
    if isinstance(v, bool):
        return "boolean"
    if isinstance(v, str):
        return "text"
    if v is UNIT:
        return "unit"
    return type(v).__name__


def render_value(v, ctx: PrecisionContext) -> str | None:
    """Console text for a value; None when there is nothing to print."""
    d = ctx.output_digits
    if v is UNIT:
        return None
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, (BigInt, BigFloat)):
        return format_decimal(v, d)
    if isinstance(v, BigComplex):
        return _render_complex(v, d)
    if isinstance(v, NumVector):
        return "[" + ", ".join(format_decimal(e, d) for e in v) + "]"
    if isinstance(v, NumMatrix):
        return _render_matrix(v, d)
    if isinstance(v, Dataset):
        return (f"{v.name} : dataset "
                f"({v.row_count} rows x {v.col_count} columns)")
    if isinstance(v, ChartSpec):
        return f"{v.name} : {v.kind} chart ({v.points} points)"
    if isinstance(v, Report):
        return f"{v.name} : {v.kind} report"
    if isinstance(v, str):
        return v
    raise TypeError(f"cannot render {v!r}")


def _render_complex(v: BigComplex, digits: int) -> str:
    re_s = format_decimal(v.re, digits)
    if sc_is_zero(v.im):
        return re_s
    neg = (v.im.value < 0) if hasattr(v.im, "value") else (v.im.sign < 0)
    im_abs = format_decimal(sc_neg(v.im) if neg else v.im, digits)
    return f"{re_s} {'-' if neg else '+'} i {im_abs}"


def _render_matrix(m: NumMatrix, digits: int) -> str:
    cells = [[format_decimal(m.at(r, c), digits) for c in range(m.cols)]
             for r in range(m.rows)]
    widths = [max(len(cells[r][c]) for r in range(m.rows))
              for c in range(m.cols)]
    lines = []
    for r in range(m.rows):
        row = "  ".join(cells[r][c].rjust(widths[c]) for c in range(m.cols))
        prefix = "[ " if r == 0 else "  "
        lines.append(prefix + row)
    lines[-1] += " ]"
    return "\n".join(lines)
