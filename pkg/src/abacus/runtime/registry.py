"""Function registry: every callable name, its arity, options, and help.

The registry is built once at import time and never mutated.  Handlers
receive (session, evaluated args, evaluated options) and return a value
(or None for unit).
"""

from dataclasses import dataclass, field

from .. import errors, report as report_mod, stats, viz
from ..bignum import (BigComplex, BigFloat, BigInt, as_float, elementary,
                      is_scalar, pi_bbp)
from ..linalg import (NumMatrix, NumVector, append as vec_append, dotprod,
                      elementwise_map, mat_det, mat_invert, mat_trace,
                      sequence, transpose)
from .values import value_class


@dataclass(frozen=True)
class Entry:
    name: str
    handler: object
    min_args: int
    max_args: int
    synopsis: str
    usage: str
    example: str
    options: frozenset = field(default_factory=frozenset)


def _scalar(v, fname, what="argument"):
    if not is_scalar(v):
        raise errors.EvalTypeError(
            f"{fname}: {what} must be a number, got {value_class(v)}")
    return v


def _vector(v, fname, what="argument"):
    if not isinstance(v, NumVector):
        raise errors.EvalTypeError(
            f"{fname}: {what} must be a vector, got {value_class(v)}")
    return v


def _matrix(v, fname):
    if not isinstance(v, NumMatrix):
        raise errors.EvalTypeError(
            f"{fname}: argument must be a matrix, got {value_class(v)}")
    return v


def _opt_str(opts, name, fname):
    v = opts.get(name)
    if v is None:
        return None
    if not isinstance(v, str):
        raise errors.EvalTypeError(f"{fname}: option {name} must be a string")
    return v


def _opt_bool(opts, name, fname):
    v = opts.get(name)
    if v is None:
        return False
    if not isinstance(v, bool):
        raise errors.EvalTypeError(f"{fname}: option {name} must be a boolean")
    return v


def _opt_int(opts, name, fname):
    v = opts.get(name)
    if v is None:
        return None
    if not isinstance(v, BigInt):
        raise errors.EvalTypeError(f"{fname}: option {name} must be an integer")
    return v.value


def _make_elementary(name):
    def handler(session, args, opts):
        ctx = session.ctx
        x = args[0]
        if isinstance(x, NumVector):
            return elementwise_map(
                lambda e: elementary(name, as_float(e, ctx), ctx), x, ctx)
        if is_scalar(x):
            return elementary(name, as_float(x, ctx), ctx)
        raise errors.EvalTypeError(
            f"{name}: argument must be a number or vector, "
            f"got {value_class(x)}")
    return handler


def _h_pi(session, args, opts):
    return pi_bbp(session.ctx)


def _h_im(session, args, opts):
    x = args[0]
    if isinstance(x, BigComplex):
        return x.im
    if is_scalar(x):
        return BigInt(0)
    raise errors.EvalTypeError(f"im: argument must be a number or complex, "
                               f"got {value_class(x)}")


def _h_re(session, args, opts):
    x = args[0]
    if isinstance(x, BigComplex):
        return x.re
    if is_scalar(x):
        return x
    raise errors.EvalTypeError(f"re: argument must be a number or complex, "
                               f"got {value_class(x)}")


def _h_append(session, args, opts):
    v = _vector(args[0], "append", "first argument")
    x = args[1]
    if not (is_scalar(x) or isinstance(x, NumVector)):
        raise errors.EvalTypeError(
            f"append: second argument must be a number or vector, "
            f"got {value_class(x)}")
    return vec_append(v, x, session.ctx)


def _h_dotprod(session, args, opts):
    return dotprod(_vector(args[0], "dotprod"), _vector(args[1], "dotprod"),
                   session.ctx)


def _h_invert(session, args, opts):
    return mat_invert(_matrix(args[0], "invert"), session.ctx)


def _h_det(session, args, opts):
    return mat_det(_matrix(args[0], "det"), session.ctx)


def _h_trace(session, args, opts):
    return mat_trace(_matrix(args[0], "trace"), session.ctx)


def _h_transpose(session, args, opts):
    return transpose(_matrix(args[0], "transpose"), session.ctx)


def _h_sequence(session, args, opts):
    a = _scalar(args[0], "sequence", "start")
    b = _scalar(args[1], "sequence", "stop")
    s = _scalar(args[2], "sequence", "step")
    return sequence(a, b, s, session.ctx)


def _h_mean(session, args, opts):
    return stats.mean(_vector(args[0], "mean"), session.ctx)


def _h_stddev(session, args, opts):
    return stats.stddev(_vector(args[0], "stddev"), session.ctx)


def _emit_test_summary(session, title, pairs, result):
    ctx = session.ctx
    from .values import render_value
    kv = ", ".join(f"{k} = {render_value(v, ctx)}" for k, v in pairs)
    verdict = ("reject the null hypothesis" if result.decision == "reject"
               else "fail to reject the null hypothesis")
    session.emit_text(title)
    session.emit_text(kv)
    session.emit_text(
        f"z = {render_value(result.z, ctx)}" if hasattr(result, "z")
        else f"t = {render_value(result.t, ctx)}, df = {result.df}")
    session.emit_text(
        f"p (two-sided) = {render_value(result.p_two_sided, ctx)}")
    session.emit_text(f"{verdict} at alpha = 0.05")


def _h_ztest(session, args, opts):
    v = _vector(args[0], "ztest")
    mu0 = _scalar(args[1], "ztest", "mu0")
    sigma = _scalar(args[2], "ztest", "sigma")
    r = stats.ztest(v, mu0, sigma, session.ctx)
    _emit_test_summary(session, "One-sample z-test (two-sided)",
                       [("n", BigInt(r.n)), ("sample mean", r.sample_mean),
                        ("mu0", r.mu0), ("sigma", r.sigma)], r)
    if _opt_bool(opts, "report", "ztest"):
        rep = report_mod.build_ztest_report(r, session.ctx)
        session.register_report(rep)
        return rep
    return None


def _h_ttest(session, args, opts):
    v = _vector(args[0], "ttest")
    mu0 = _scalar(args[1], "ttest", "mu0")
    r = stats.ttest(v, mu0, session.ctx)
    _emit_test_summary(session, "One-sample t-test (two-sided)",
                       [("n", BigInt(r.n)), ("sample mean", r.sample_mean),
                        ("mu0", r.mu0), ("sample stddev", r.sample_stddev)], r)
    if _opt_bool(opts, "report", "ttest"):
        rep = report_mod.build_ttest_report(r, session.ctx)
        session.register_report(rep)
        return rep
    return None


def _h_frequency(session, args, opts):
    v = _vector(args[0], "frequency")
    bins = _opt_int(opts, "bins", "frequency")
    chart = stats.frequency(v, bins)
    session.register_chart(chart)
    return chart


_PLOT_KINDS = ("xy-line", "xy-scatter")


def _h_plot(session, args, opts):
    x = _vector(args[0], "plot", "x")
    y = _vector(args[1], "plot", "y")
    kind = _opt_str(opts, "kind", "plot") or "xy-line"
    if kind not in _PLOT_KINDS:
        raise errors.DomainError(
            f"plot: kind must be one of {', '.join(_PLOT_KINDS)}")
    chart = viz.plot(x, y, kind=kind,
                     title=_opt_str(opts, "title", "plot") or "",
                     xtitle=_opt_str(opts, "xtitle", "plot") or "",
                     ytitle=_opt_str(opts, "ytitle", "plot") or "")
    session.register_chart(chart)
    return chart


def _entry(name, handler, nargs, synopsis, usage, example, options=()):
    lo, hi = nargs if isinstance(nargs, tuple) else (nargs, nargs)
    return Entry(name, handler, lo, hi, synopsis, usage, example,
                 frozenset(options))


_ENTRIES = [
    _entry("log", _make_elementary("log"), 1,
           "natural logarithm of a number or, elementwise, of a vector",
           "log(x)", "log( 2 )"),
    _entry("exp", _make_elementary("exp"), 1,
           "exponential of a number or, elementwise, of a vector",
           "exp(x)", "exp(1)"),
    _entry("sqrt", _make_elementary("sqrt"), 1,
           "square root of a non-negative number or vector",
           "sqrt(x)", "sqrt(2)"),
    _entry("sin", _make_elementary("sin"), 1,
           "sine of a number (radians) or, elementwise, of a vector",
           "sin(x)", "sin( pi() / 2 )"),
    _entry("cos", _make_elementary("cos"), 1,
           "cosine of a number (radians) or, elementwise, of a vector",
           "cos(x)", "cos(0)"),
    _entry("pi", _h_pi, 0,
           "the constant pi at the current precision",
           "pi()", "pi()"),
    _entry("im", _h_im, 1,
           "imaginary part of a complex number",
           "im(z)", "im( {2, -3} )"),
    _entry("re", _h_re, 1,
           "real part of a complex number",
           "re(z)", "re( {2, -3} )"),
    _entry("append", _h_append, 2,
           "vector with an extra element (or another vector) at the end",
           "append(vector, value)", "append([1, -2], 5)"),
    _entry("dotprod", _h_dotprod, 2,
           "dot product of two vectors of equal length",
           "dotprod(vector, vector)", "dotprod([1, -2], [-3, 4])"),
    _entry("invert", _h_invert, 1,
           "inverse of a square non-singular matrix",
           "invert(matrix)", "invert( {[1, 3, -1, 4], 2, 2} )"),
    _entry("det", _h_det, 1,
           "determinant of a square matrix",
           "det(matrix)", "det( {[1, 3, -1, 4], 2, 2} )"),
    _entry("trace", _h_trace, 1,
           "trace (sum of diagonal elements) of a square matrix",
           "trace(matrix)", "trace( {[1, 3, -1, 4], 2, 2} )"),
    _entry("transpose", _h_transpose, 1,
           "transpose of a matrix",
           "transpose(matrix)", "transpose( {[1, 2, 3], 1, 3} )"),
    _entry("sequence", _h_sequence, 3,
           "vector of equally spaced values from start to stop",
           "sequence(start, stop, step)", "sequence(-1, 1, 0.1)"),
    _entry("mean", _h_mean, 1,
           "arithmetic mean of a vector",
           "mean(vector)", "mean([9, 3, -1, -2, 4, 5])"),
    _entry("stddev", _h_stddev, 1,
           "sample standard deviation (n-1) of a vector",
           "stddev(vector)", "stddev([9, 3, -1, -2, 4, 5])"),
    _entry("ztest", _h_ztest, 3,
           "one-sample two-sided z-test with known population stddev",
           "ztest(vector, mu0, sigma, report=false)",
           "ztest( $x, 2, 3, report=true )", options=("report",)),
    _entry("ttest", _h_ttest, 2,
           "one-sample two-sided t-test",
           "ttest(vector, mu0, report=false)",
           "ttest( $x, 2 )", options=("report",)),
    _entry("frequency", _h_frequency, 1,
           "histogram chart of a vector's values",
           "frequency(vector, bins=count)", "frequency($x, bins=10)",
           options=("bins",)),
    _entry("plot", _h_plot, 2,
           "xy chart from two vectors of equal length",
           'plot(x, y, kind="xy-line", title=..., xtitle=..., ytitle=...)',
           'plot($x, $y, xtitle="x [rad]", ytitle="cos(x)*sin(x)")',
           options=("kind", "title", "xtitle", "ytitle")),
]

FUNCTIONS = {e.name: e for e in _ENTRIES}

# command name -> (synopsis, usage)
COMMANDS = {
    "precision": ("set the internal precision in 32-bit memory blocks, or "
                  "show the current scheme", "precision [blocks]"),
    "output_precision": ("set the number of printed digits",
                         "output_precision digits"),
    "help": ("show help for a function or command, or list everything",
             "help [name]"),
    "objects": ("list session objects, optionally one kind",
                "objects [vars|charts|reports|datasets]"),
    "delete": ("remove a variable or stored object", "delete name"),
    "import": ("load a delimited text file as a dataset",
               'import "path" $name'),
    "export": ("write a chart, report, or dataset to a file",
               'export name "path"'),
    "report": ("snapshot the console transcript as a report object",
               "report [html|text]"),
    "exit": ("leave the session", "exit"),
}


def lookup(name: str) -> Entry:
    try:
        return FUNCTIONS[name]
    except KeyError:
        raise errors.UndefinedFunction(f"undefined function '{name}'") from None


def help_text(topic: str | None) -> str:
    if topic is None:
        lines = []
        for name in sorted(FUNCTIONS):
            lines.append(f"{name:<16} {FUNCTIONS[name].synopsis}")
        for name in sorted(COMMANDS):
            lines.append(f"{name:<16} {COMMANDS[name][0]}")
        return "\n".join(lines)
    topic = topic.lower()
    if topic in FUNCTIONS:
        e = FUNCTIONS[topic]
        return (f"{e.name} -- {e.synopsis}\n"
                f"usage: {e.usage}\n"
                f"example: {e.example}")
    if topic in COMMANDS:
        synopsis, usage = COMMANDS[topic]
        return f"{topic} -- {synopsis}\nusage: {usage}"
    return f"no help for '{topic}'"
