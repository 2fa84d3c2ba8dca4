"""Tokenizer, AST, parser, and pretty-printer for the expression language."""

from .lexer import Token, tokenize
from .nodes import (Assignment, Binary, BoolLit, Call, Command, ComplexLit,
                    ExprStmt, Index, MatrixLit, NumberLit, StringLit, Unary,
                    VarRef, VectorLit, unparse_expr, unparse_stmt)
from .parser import parse, parse_statements

__all__ = [
    "Token", "tokenize",
    "Assignment", "Binary", "BoolLit", "Call", "Command", "ComplexLit",
    "ExprStmt", "Index", "MatrixLit", "NumberLit", "StringLit", "Unary",
    "VarRef", "VectorLit", "unparse_expr", "unparse_stmt",
    "parse", "parse_statements",
]
