"""Recursive-descent parser.

Precedence: `^` (right-assoc) binds tighter than unary minus, which
binds tighter than `*`/`/`, which bind tighter than `+`/`-`.  A
statement-initial bare identifier not followed by `(` is a command and
swallows the rest of its line as raw tokens.
"""

from ..errors import ParseError
from . import lexer
from .lexer import Token, tokenize
from .nodes import (Assignment, Binary, BoolLit, Call, Command, ComplexLit,
                    ExprStmt, Index, MatrixLit, NumberLit, StringLit, Unary,
                    VarRef, VectorLit)


class _Parser:
    def __init__(self, tokens: list[Token]):
        self.tokens = tokens
        self.pos = 0

    def peek(self) -> Token:
        return self.tokens[self.pos]

    def advance(self) -> Token:
        t = self.tokens[self.pos]
        if t.kind != lexer.END:
            self.pos += 1
        return t

    def _fail(self, expected: str, found: Token):
        shown = found.lexeme or found.kind
        raise ParseError(f"expected {expected}, found {shown!r}",
                         found.line, found.col)

    def expect(self, kind: str, lexeme: str | None = None) -> Token:
        t = self.peek()
        if t.kind != kind or (lexeme is not None and t.lexeme != lexeme):
            self._fail(lexeme or kind, t)
        return self.advance()

    def at(self, kind: str, lexeme: str | None = None) -> bool:
        t = self.peek()
        return t.kind == kind and (lexeme is None or t.lexeme == lexeme)

    # -- statements --

    def statements(self):
        out = []
        while not self.at(lexer.END):
            if self.at(lexer.NEWLINE):
                self.advance()
                continue
            out.append(self.statement())
            if not self.at(lexer.END):
                self.expect(lexer.NEWLINE)
        return out

    def statement(self):
        t = self.peek()
        if t.kind == lexer.IDENT:
            nxt = self.tokens[self.pos + 1]
            if not (nxt.kind == lexer.DELIM and nxt.lexeme == "("):
                return self._command()
        if t.kind == lexer.VARIABLE:
            nxt = self.tokens[self.pos + 1]
            if nxt.kind == lexer.OP and nxt.lexeme == "=":
                self.advance()
                self.advance()
                return Assignment(t.lexeme, self.expr())
        return ExprStmt(self.expr())

    def _command(self):
        name = self.advance().lexeme
        args = []
        while not self.at(lexer.NEWLINE) and not self.at(lexer.END):
            args.append(self.advance())
        return Command(name, tuple(args))

    # -- expressions --

    def expr(self):
        return self._additive()

    def _additive(self):
        node = self._multiplicative()
        while self.at(lexer.OP, "+") or self.at(lexer.OP, "-"):
            op = self.advance().lexeme
            node = Binary(op, node, self._multiplicative())
        return node

    def _multiplicative(self):
        node = self._unary()
        while self.at(lexer.OP, "*") or self.at(lexer.OP, "/"):
            op = self.advance().lexeme
            node = Binary(op, node, self._unary())
        return node

    def _unary(self):
        if self.at(lexer.OP, "-"):
            self.advance()
            return Unary("-", self._unary())
        return self._power()

    def _power(self):
        node = self._postfix()
        if self.at(lexer.OP, "^"):
            self.advance()
            return Binary("^", node, self._unary())
        return node

    def _postfix(self):
        node = self._atom()
        while self.at(lexer.DELIM, "["):
            self.advance()
            idx = self.expr()
            self.expect(lexer.DELIM, "]")
            node = Index(node, idx)
        return node

    def _atom(self):
        t = self.peek()
        if t.kind == lexer.NUMBER:
            self.advance()
            return NumberLit(t.lexeme)
        if t.kind == lexer.STRING:
            self.advance()
            return StringLit(t.lexeme)
        if t.kind == lexer.BOOLEAN:
            self.advance()
            return BoolLit(t.lexeme == "true")
        if t.kind == lexer.VARIABLE:
            self.advance()
            return VarRef(t.lexeme)
        if t.kind == lexer.IDENT:
            self.advance()
            self.expect(lexer.DELIM, "(")
            return self._call_tail(t.lexeme)
        if t.kind == lexer.DELIM and t.lexeme == "(":
            self.advance()
            node = self.expr()
            self.expect(lexer.DELIM, ")")
            return node
        if t.kind == lexer.DELIM and t.lexeme == "[":
            self.advance()
            items = self._expr_list("]")
            self.expect(lexer.DELIM, "]")
            return VectorLit(tuple(items))
        if t.kind == lexer.DELIM and t.lexeme == "{":
            self.advance()
            items = self._expr_list("}")
            closer = self.expect(lexer.DELIM, "}")
            if len(items) == 2:
                return ComplexLit(items[0], items[1])
            if len(items) == 3:
                return MatrixLit(items[0], items[1], items[2])
            raise ParseError(
                f"braced literal needs 2 members (complex) or 3 (matrix), "
                f"got {len(items)}", closer.line, closer.col)
        self._fail("an expression", t)

    def _expr_list(self, closer: str):
        items = []
        if self.at(lexer.DELIM, closer):
            return items
        items.append(self.expr())
        while self.at(lexer.DELIM, ","):
            self.advance()
            items.append(self.expr())
        return items

    def _call_tail(self, name: str):
        args = []
        options = []
        if not self.at(lexer.DELIM, ")"):
            while True:
                t = self.peek()
                nxt = self.tokens[self.pos + 1]
                if (t.kind == lexer.IDENT and nxt.kind == lexer.OP
                        and nxt.lexeme == "="):
                    self.advance()
                    self.advance()
                    options.append((t.lexeme, self.expr()))
                else:
                    if options:
                        self._fail("an option (positional arguments "
                                   "cannot follow options)", t)
                    args.append(self.expr())
                if not self.at(lexer.DELIM, ","):
                    break
                self.advance()
        self.expect(lexer.DELIM, ")")
        return Call(name, tuple(args), tuple(options))


def parse(source: str):
    """Parse source text into a list of statements."""
    return _Parser(tokenize(source)).statements()


def parse_statements(source: str):
    return parse(source)
