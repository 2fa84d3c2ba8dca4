"""Tokenizer.

Identifiers and $-variables are case-folded here, so everything
downstream sees lowercase names.  `//` comments run to end of line; a
trailing `%` splices the next physical line onto the current statement;
newlines inside unclosed brackets do not terminate the statement.
"""

import re
from dataclasses import dataclass, field

from ..errors import ParseError

NUMBER = "number"
STRING = "string"
BOOLEAN = "boolean"
VARIABLE = "variable"
IDENT = "identifier"
OP = "operator"
DELIM = "delimiter"
NEWLINE = "newline"
END = "end"

_NUMBER_RE = re.compile(r"\d+(?:\.\d*)?|\.\d+")
_NAME_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")
_OPS = set("+-*/^=")
_OPENERS = {"(": ")", "[": "]", "{": "}"}
_CLOSERS = {")", "]", "}"}


@dataclass(frozen=True)
class Token:
    kind: str
    lexeme: str
    line: int = field(default=0, compare=False)
    col: int = field(default=0, compare=False)

    def __repr__(self):
        return f"Token({self.kind}, {self.lexeme!r})"


def tokenize(source: str) -> list[Token]:
    """Full token list for the source, ending with a single end token."""
    tokens: list[Token] = []
    depth = 0
    open_stack: list[Token] = []
    line_no = 1
    i = 0
    n = len(source)
    line_start = 0

    def col(pos: int) -> int:
        return pos - line_start + 1

    while i < n:
        ch = source[i]
        if ch in " \t\r":
            i += 1
            continue
        if ch == "\n":
            if depth == 0 and tokens and tokens[-1].kind != NEWLINE:
                tokens.append(Token(NEWLINE, "\n", line_no, col(i)))
            line_no += 1
            i += 1
            line_start = i
            continue
        if ch == "/" and source.startswith("//", i):
            while i < n and source[i] != "\n":
                i += 1
            continue
        if ch == "%":
            # continuation: the rest of the physical line must be blank/comment
            j = i + 1
            while j < n and source[j] in " \t\r":
                j += 1
            if source.startswith("//", j):
                while j < n and source[j] != "\n":
                    j += 1
            if j < n and source[j] != "\n":
                raise ParseError("'%' continuation must end its line",
                                 line_no, col(i))
            i = j + 1 if j < n else j
            line_no += 1
            line_start = i
            continue
        if ch == '"':
            j = i + 1
            while j < n and source[j] not in '"\n':
                j += 1
            if j >= n or source[j] != '"':
                raise ParseError("unterminated string literal", line_no, col(i))
            tokens.append(Token(STRING, source[i + 1:j], line_no, col(i)))
            i = j + 1
            continue
        m = _NUMBER_RE.match(source, i)
        if m:
            tokens.append(Token(NUMBER, m.group(), line_no, col(i)))
            i = m.end()
            continue
        if ch == "$":
            m = _NAME_RE.match(source, i + 1)
            if not m:
                raise ParseError("'$' must be followed by a variable name",
                                 line_no, col(i))
            tokens.append(Token(VARIABLE, "$" + m.group().lower(),
                                line_no, col(i)))
            i = m.end()
            continue
        m = _NAME_RE.match(source, i)
        if m:
            word = m.group().lower()
            kind = BOOLEAN if word in ("true", "false") else IDENT
            tokens.append(Token(kind, word, line_no, col(i)))
            i = m.end()
            continue
        if ch in _OPS:
            tokens.append(Token(OP, ch, line_no, col(i)))
            i += 1
            continue
        if ch in _OPENERS:
            tok = Token(DELIM, ch, line_no, col(i))
            tokens.append(tok)
            open_stack.append(tok)
            depth += 1
            i += 1
            continue
        if ch in _CLOSERS:
            if not open_stack or _OPENERS[open_stack[-1].lexeme] != ch:
                if open_stack:
                    opener = open_stack[-1]
                    raise ParseError(
                        f"unbalanced '{opener.lexeme}'", opener.line, opener.col)
                raise ParseError(f"unmatched '{ch}'", line_no, col(i))
            open_stack.pop()
            depth -= 1
            tokens.append(Token(DELIM, ch, line_no, col(i)))
            i += 1
            continue
        if ch == ",":
            tokens.append(Token(DELIM, ",", line_no, col(i)))
            i += 1
            continue
        raise ParseError(f"illegal character {ch!r}", line_no, col(i))

    if open_stack:
        opener = open_stack[-1]
        raise ParseError(f"unbalanced '{opener.lexeme}'", opener.line, opener.col)
    if tokens and tokens[-1].kind == NEWLINE:
        tokens.pop()
    last_line = line_no
    tokens.append(Token(END, "", last_line, col(i)))
    return tokens
