"""Chart model and SVG rendering.

Chart data is downcast to doubles on construction; rendering is a pure,
deterministic ChartSpec -> SVG text transformation.
"""

import math
from xml.sax.saxutils import escape

from . import errors
from .bignum import downcast_double
from .linalg import NumVector

_KINDS = ("xy-line", "xy-scatter", "histogram")


class ChartSpec:
    __slots__ = ("kind", "x", "y", "edges", "title", "xtitle", "ytitle", "name")

    def __init__(self, kind, x, y, edges=None, title="", xtitle="", ytitle="",
                 name=""):
        if kind not in _KINDS:
            raise errors.DomainError(f"unknown chart kind {kind!r}")
        for v in list(x) + list(y) + list(edges or []):
            if not math.isfinite(v):
                raise errors.DomainError("chart data must be finite")
        if kind != "histogram" and len(x) != len(y):
            raise errors.DimensionError(
                f"series lengths differ: {len(x)} vs {len(y)}")
        self.kind = kind
        self.x = list(x)
        self.y = list(y)
        self.edges = list(edges) if edges is not None else None
        self.title = title
        self.xtitle = xtitle
        self.ytitle = ytitle
        self.name = name

    @property
    def points(self) -> int:
        return len(self.y)

    def __repr__(self):
        return f"ChartSpec({self.name or '?'}, {self.kind}, {self.points} points)"


def plot(x: NumVector, y: NumVector, *, kind: str = "xy-line", title: str = "",
         xtitle: str = "", ytitle: str = "") -> ChartSpec:
    if len(x) == 0 or len(y) == 0:
        raise errors.DomainError("plot requires non-empty vectors")
    if len(x) != len(y):
        raise errors.DimensionError(
            f"vector lengths differ: {len(x)} vs {len(y)}")
    xs = [downcast_double(e) for e in x]
    ys = [downcast_double(e) for e in y]
    return ChartSpec(kind, xs, ys, title=title, xtitle=xtitle, ytitle=ytitle)


def nice_ticks(lo: float, hi: float) -> list[float]:
    """5 to 8 ticks on the 1/2/5 x 10^k ladder; ties go to the smaller step."""
    if hi <= lo:
        hi = lo + 1.0
    span = hi - lo
    candidates = []
    k = math.floor(math.log10(span)) - 1
    for exp in range(k, k + 3):
        for mant in (1.0, 2.0, 5.0):
            candidates.append(mant * 10.0 ** exp)
    for step in sorted(candidates):
        first = math.ceil(lo / step)
        last = math.floor(hi / step)
        count = last - first + 1
        if count <= 8:
            if count >= 5:
                return [t * step for t in range(first, last + 1)]
            break
    # fallback: quarter-span ticks
    step = span / 5.0
    return [lo + i * step for i in range(6)]


def _fmt(v: float) -> str:
    s = f"{v:.10g}"
    return "0" if s == "-0" else s


def _fmt_px(v: float) -> str:
    return f"{v:.2f}".rstrip("0").rstrip(".")


def render_svg(c: ChartSpec, width: int = 640, height: int = 480) -> str:
    """Standalone SVG document for a chart; identical input, identical text."""
    if width <= 0 or height <= 0:
        raise errors.DomainError("chart dimensions must be positive")
    ml, mr, mt, mb = 60, 20, 40 if c.title else 20, 50
    fw, fh = width - ml - mr, height - mt - mb

    if c.kind == "histogram":
        data_x = c.edges
        data_y = [0.0] + c.y
    else:
        data_x, data_y = c.x, c.y
    xlo, xhi = min(data_x), max(data_x)
    ylo, yhi = min(min(data_y), 0.0) if c.kind == "histogram" else min(data_y), max(data_y)
    xpad = (xhi - xlo) * 0.05 or 0.5
    ypad = (yhi - ylo) * 0.05 or 0.5
    xlo, xhi = xlo - xpad, xhi + xpad
    ylo, yhi = ylo - ypad, yhi + ypad

    def px(v):
        return ml + (v - xlo) / (xhi - xlo) * fw

    def py(v):
        return mt + fh - (v - ylo) / (yhi - ylo) * fh

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        f'<rect x="0" y="0" width="{width}" height="{height}" fill="white"/>',
        f'<g fill="none" stroke="black"><rect x="{ml}" y="{mt}" width="{fw}" height="{fh}"/></g>',
    ]
    if c.title:
        parts.append(
            f'<text x="{width / 2:.0f}" y="24" text-anchor="middle" '
            f'font-size="16">{escape(c.title)}</text>')
    for t in nice_ticks(xlo, xhi):
        x = px(t)
        parts.append(f'<line x1="{_fmt_px(x)}" y1="{mt + fh}" x2="{_fmt_px(x)}" '
                     f'y2="{mt + fh + 5}" stroke="black"/>')
        parts.append(f'<text x="{_fmt_px(x)}" y="{mt + fh + 18}" text-anchor="middle" '
                     f'font-size="11">{_fmt(t)}</text>')
    for t in nice_ticks(ylo, yhi):
        y = py(t)
        parts.append(f'<line x1="{ml - 5}" y1="{_fmt_px(y)}" x2="{ml}" '
                     f'y2="{_fmt_px(y)}" stroke="black"/>')
        parts.append(f'<text x="{ml - 8}" y="{_fmt_px(y + 3)}" text-anchor="end" '
                     f'font-size="11">{_fmt(t)}</text>')
    if c.xtitle:
        parts.append(f'<text x="{ml + fw / 2:.0f}" y="{height - 12}" '
                     f'text-anchor="middle" font-size="13">{escape(c.xtitle)}</text>')
    if c.ytitle:
        parts.append(f'<text x="16" y="{mt + fh / 2:.0f}" text-anchor="middle" '
                     f'font-size="13" transform="rotate(-90 16 {mt + fh / 2:.0f})">'
                     f'{escape(c.ytitle)}</text>')

    if c.kind == "xy-line":
        pts = " ".join(f"{_fmt_px(px(a))},{_fmt_px(py(b))}" for a, b in zip(c.x, c.y))
        parts.append(f'<polyline points="{pts}" fill="none" stroke="steelblue" '
                     f'stroke-width="1.5"/>')
    elif c.kind == "xy-scatter":
        for a, b in zip(c.x, c.y):
            parts.append(f'<circle cx="{_fmt_px(px(a))}" cy="{_fmt_px(py(b))}" '
                         f'r="3" fill="steelblue"/>')
    else:
        zero_y = py(max(ylo, 0.0))
        for i, count in enumerate(c.y):
            x0, x1 = px(c.edges[i]), px(c.edges[i + 1])
            y1 = py(count)
            parts.append(f'<rect x="{_fmt_px(x0)}" y="{_fmt_px(y1)}" '
                         f'width="{_fmt_px(x1 - x0)}" height="{_fmt_px(zero_y - y1)}" '
                         f'fill="steelblue" stroke="black"/>')
    parts.append("</svg>")
    return "\n".join(parts)


def export_chart(chart: ChartSpec, path: str, width: int = 640, height: int = 480) -> None:
    try:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(render_svg(chart, width, height))
    except OSError as exc:
        raise errors.IoError(f"cannot write chart to {path}: {exc}") from None
