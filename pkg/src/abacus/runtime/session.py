"""Session state and statement execution.

A session owns the variable/dataset/chart/report stores, the precision
context, and the output transcript.  Statements are atomic: a failing
statement leaves all of it exactly as it was.
"""

from .. import dataio, errors, report as report_mod, viz
from ..bignum import PrecisionContext
from ..dataio import Dataset
from ..lang import Assignment, Command, ExprStmt, Token, parse
from ..report import Report
from ..viz import ChartSpec
from . import registry
from .evaluator import eval_expr
from .values import (CHART_REF, ERROR, REPORT_REF, TEXT, UNIT, OutputItem,
                     render_value, value_class)

_DEFAULT_WORDS = 8
_DEFAULT_DIGITS = 8


class Session:
    def __init__(self):
        self.ctx = PrecisionContext(_DEFAULT_WORDS, _DEFAULT_DIGITS)
        self.vars: dict[str, object] = {}       # '$name' -> value
        self.datasets: dict[str, Dataset] = {}
        self.charts: dict[str, ChartSpec] = {}
        self.reports: dict[str, Report] = {}
        self._chart_counter = 0
        self._report_counter = 0
        self.transcript: list[str] = []
        self.exit_requested = False
        self._items: list[OutputItem] = []

    # -- object stores --

    def lookup_var(self, name: str):
        if name in self.vars:
            return self.vars[name]
        bare = name.lstrip("$")
        if bare in self.datasets:
            return self.datasets[bare]
        raise errors.UndefinedVariable(f"undefined variable '{name}'")

    def register_chart(self, chart: ChartSpec) -> str:
        self._chart_counter += 1
        chart.name = f"chart_{self._chart_counter}"
        self.charts[chart.name] = chart
        return chart.name

    def register_report(self, rep: Report) -> str:
        self._report_counter += 1
        rep.name = f"report_{self._report_counter}"
        self.reports[rep.name] = rep
        return rep.name

    # -- output --

    def emit_text(self, line: str):
        self._items.append(OutputItem(TEXT, line))
        self.transcript.append(line)

    def _emit_error(self, message: str):
        self._items.append(OutputItem(ERROR, message))
        self.transcript.append(message)

    # -- execution --

    def execute(self, source: str) -> list[OutputItem]:
        """Run statements in order; stop at the first failing statement."""
        self._items = []
        try:
            stmts = parse(source)
        except errors.ParseError as exc:
            self._emit_error(f"error: {exc}")
            return self._items
        for stmt in stmts:
            snap = self._snapshot()
            try:
                self._exec_stmt(stmt)
            except errors.AbacusError as exc:
                self._restore(snap)
                self._emit_error(f"error: {exc}")
                break
            except MemoryError:
                self._restore(snap)
                self._emit_error("error: not enough memory for this statement")
                break
        return self._items

    def _snapshot(self):
        return (dict(self.vars), dict(self.datasets), dict(self.charts),
                dict(self.reports), self._chart_counter, self._report_counter,
                self.ctx.copy(), len(self.transcript), len(self._items))

    def _restore(self, snap):
        (self.vars, self.datasets, self.charts, self.reports,
         self._chart_counter, self._report_counter, self.ctx,
         tlen, ilen) = snap
        del self.transcript[tlen:]
        del self._items[ilen:]

    def _exec_stmt(self, stmt):
        if isinstance(stmt, Assignment):
            value = eval_expr(stmt.expr, self)
            if value is not UNIT:
                self.vars[stmt.target] = value
            return
        if isinstance(stmt, ExprStmt):
            value = eval_expr(stmt.expr, self)
            text = render_value(value, self.ctx)
            if text is not None:
                self.emit_text(text)
            if isinstance(value, ChartSpec):
                self._items.append(OutputItem(CHART_REF, value.name))
            elif isinstance(value, Report):
                self._items.append(OutputItem(REPORT_REF, value.name))
            return
        if isinstance(stmt, Command):
            self._exec_command(stmt)
            return
        raise TypeError(f"cannot execute {stmt!r}")

    # -- commands --

    def _exec_command(self, cmd: Command):
        handler = getattr(self, f"_cmd_{cmd.name}", None)
        if handler is None:
            raise errors.UnknownCommand(f"unknown command '{cmd.name}'")
        handler(list(cmd.args))

    @staticmethod
    def _arg_count(args, name, lo, hi):
        if not lo <= len(args) <= hi:
            want = str(lo) if lo == hi else f"{lo}..{hi}"
            raise errors.DomainError(
                f"{name} takes {want} argument(s), got {len(args)}")

    @staticmethod
    def _int_arg(tok: Token, what: str) -> int:
        if tok.kind != "number" or "." in tok.lexeme:
            raise errors.DomainError(f"{what} must be a positive integer")
        return int(tok.lexeme)

    def _cmd_precision(self, args):
        self._arg_count(args, "precision", 0, 1)
        if args:
            self.ctx.set_words(self._int_arg(args[0], "precision"))
            return
        self.emit_text(f"Internal precision is set to {self.ctx.words} "
                       f"(memory blocks)")
        self.emit_text(f"Actual precision: {self.ctx.bits} bits")
        self.emit_text(f"Number of printed digits: {self.ctx.output_digits}")

    def _cmd_output_precision(self, args):
        self._arg_count(args, "output_precision", 1, 1)
        self.ctx.set_output_digits(self._int_arg(args[0], "output_precision"))

    def _cmd_help(self, args):
        self._arg_count(args, "help", 0, 1)
        topic = args[0].lexeme if args else None
        for line in registry.help_text(topic).splitlines():
            self.emit_text(line)

    def _cmd_objects(self, args):
        self._arg_count(args, "objects", 0, 1)
        kinds = ("vars", "datasets", "charts", "reports")
        if args:
            kind = args[0].lexeme
            if kind not in kinds:
                raise errors.DomainError(
                    f"objects: unknown kind '{kind}' "
                    f"(expected one of {', '.join(kinds)})")
            for line in self._object_lines(kind):
                self.emit_text(line)
            return
        for kind in kinds:
            lines = self._object_lines(kind)
            if lines:
                self.emit_text(f"{kind}:")
                for line in lines:
                    self.emit_text("  " + line)

    def _object_lines(self, kind):
        if kind == "vars":
            out = []
            for name in sorted(self.vars):
                v = self.vars[name]
                preview = render_value(v, self.ctx) or ""
                preview = preview.splitlines()[0] if preview else ""
                if len(preview) > 60:
                    preview = preview[:57] + "..."
                out.append(f"{name} : {value_class(v)} = {preview}")
            return out
        store = getattr(self, kind)
        return [render_value(store[name], self.ctx)
                for name in sorted(store)]

    def _cmd_delete(self, args):
        self._arg_count(args, "delete", 1, 1)
        name = args[0].lexeme
        for store in (self.vars, self.datasets, self.charts, self.reports):
            if name in store:
                del store[name]
                return
        raise errors.UndefinedVariable(f"undefined variable '{name}'")

    def _cmd_import(self, args):
        self._arg_count(args, "import", 2, 2)
        path_tok, name_tok = args
        if path_tok.kind != "string":
            raise errors.DomainError('import: path must be a quoted string')
        if name_tok.kind != "variable":
            raise errors.DomainError("import: dataset name must be a "
                                     "$-variable")
        name = name_tok.lexeme.lstrip("$")
        ds = dataio.import_dataset(path_tok.lexeme, name, self.ctx)
        self.datasets[name] = ds

    def _cmd_export(self, args):
        self._arg_count(args, "export", 2, 2)
        name_tok, path_tok = args
        if path_tok.kind != "string":
            raise errors.DomainError('export: path must be a quoted string')
        name = name_tok.lexeme.lstrip("$")
        if name in self.charts:
            viz.export_chart(self.charts[name], path_tok.lexeme)
        elif name in self.reports:
            report_mod.export_report(self.reports[name], path_tok.lexeme)
        elif name in self.datasets:
            dataio.export_dataset(self.datasets[name], path_tok.lexeme,
                                  self.ctx.output_digits)
        else:
            raise errors.UndefinedVariable(f"undefined variable '{name}'")

    def _cmd_report(self, args):
        self._arg_count(args, "report", 0, 1)
        kind = args[0].lexeme if args else "html"
        rep = report_mod.console_to_report("\n".join(self.transcript), kind)
        self.register_report(rep)
        self.emit_text(render_value(rep, self.ctx))
        self._items.append(OutputItem(REPORT_REF, rep.name))

    def _cmd_exit(self, args):
        self._arg_count(args, "exit", 0, 0)
        self.exit_requested = True

    # -- completion --

    def complete_prefix(self, fragment: str) -> list[str]:
        """Case-insensitive prefix completion over names in scope."""
        frag = fragment.lower()
        if frag.startswith("$"):
            names = set(self.vars) | {"$" + n for n in self.datasets}
        else:
            names = set(registry.FUNCTIONS) | set(registry.COMMANDS)
        return sorted(n for n in names if n.startswith(frag))
