"""AST node types and the pretty-printer.

Nodes compare structurally (positions excluded), so `parse(unparse(s))`
round trips are checkable with plain equality.
"""

from dataclasses import dataclass

from .lexer import Token


class Expr:
    __slots__ = ()


@dataclass(frozen=True)
class NumberLit(Expr):
    text: str  # raw decimal lexeme; converted to a value at eval time


@dataclass(frozen=True)
class StringLit(Expr):
    value: str


@dataclass(frozen=True)
class BoolLit(Expr):
    value: bool


@dataclass(frozen=True)
class VarRef(Expr):
    name: str  # includes the leading '$', case-folded


@dataclass(frozen=True)
class Unary(Expr):
    op: str
    operand: Expr


@dataclass(frozen=True)
class Binary(Expr):
    op: str
    left: Expr
    right: Expr


@dataclass(frozen=True)
class Call(Expr):
    name: str
    args: tuple
    options: tuple  # of (name, Expr) pairs, in source order


@dataclass(frozen=True)
class Index(Expr):
    base: Expr
    index: Expr


@dataclass(frozen=True)
class VectorLit(Expr):
    items: tuple


@dataclass(frozen=True)
class ComplexLit(Expr):
    re: Expr
    im: Expr


@dataclass(frozen=True)
class MatrixLit(Expr):
    data: Expr
    rows: Expr
    cols: Expr


@dataclass(frozen=True)
class ExprStmt:
    expr: Expr


@dataclass(frozen=True)
class Assignment:
    target: str  # '$name', case-folded
    expr: Expr


@dataclass(frozen=True)
class Command:
    name: str
    args: tuple  # raw Tokens after the command word


# -- pretty-printing -----------------------------------------------------------

# binding strength; higher binds tighter
_PREC = {"+": 1, "-": 1, "*": 2, "/": 2, "^": 4}
_UNARY_PREC = 3
_ATOM_PREC = 9


def _prec(e: Expr) -> int:
    if isinstance(e, Binary):
        return _PREC[e.op]
    if isinstance(e, Unary):
        return _UNARY_PREC
    return _ATOM_PREC


def unparse_expr(e: Expr) -> str:
    if isinstance(e, NumberLit):
        return e.text
    if isinstance(e, StringLit):
        return f'"{e.value}"'
    if isinstance(e, BoolLit):
        return "true" if e.value else "false"
    if isinstance(e, VarRef):
        return e.name
    if isinstance(e, Unary):
        inner = unparse_expr(e.operand)
        if _prec(e.operand) < _UNARY_PREC:
            inner = f"({inner})"
        return f"-{inner}"
    if isinstance(e, Binary):
        lp = rp = _PREC[e.op]
        left = unparse_expr(e.left)
        right = unparse_expr(e.right)
        # left-assoc: right child needs parens at equal precedence;
        # right-assoc (^): left child does
        if e.op == "^":
            if _prec(e.left) <= lp:
                left = f"({left})"
            if _prec(e.right) < rp:
                right = f"({right})"
        else:
            if _prec(e.left) < lp:
                left = f"({left})"
            if _prec(e.right) <= rp:
                right = f"({right})"
        return f"{left} {e.op} {right}"
    if isinstance(e, Call):
        parts = [unparse_expr(a) for a in e.args]
        parts += [f"{name}={unparse_expr(v)}" for name, v in e.options]
        return f"{e.name}({', '.join(parts)})"
    if isinstance(e, Index):
        base = unparse_expr(e.base)
        if _prec(e.base) < _ATOM_PREC:
            base = f"({base})"
        return f"{base}[{unparse_expr(e.index)}]"
    if isinstance(e, VectorLit):
        return f"[{', '.join(unparse_expr(i) for i in e.items)}]"
    if isinstance(e, ComplexLit):
        return f"{{{unparse_expr(e.re)}, {unparse_expr(e.im)}}}"
    if isinstance(e, MatrixLit):
        return (f"{{{unparse_expr(e.data)}, {unparse_expr(e.rows)}, "
                f"{unparse_expr(e.cols)}}}")
    raise TypeError(f"not an expression node: {e!r}")


def _token_text(t: Token) -> str:
    return f'"{t.lexeme}"' if t.kind == "string" else t.lexeme


def unparse_stmt(s) -> str:
    if isinstance(s, ExprStmt):
        return unparse_expr(s.expr)
    if isinstance(s, Assignment):
        return f"{s.target} = {unparse_expr(s.expr)}"
    if isinstance(s, Command):
        if not s.args:
            return s.name
        return f"{s.name} {' '.join(_token_text(t) for t in s.args)}"
    raise TypeError(f"not a statement node: {s!r}")
