"""Expression evaluation against a session."""

from .. import errors
from ..bignum import (BigComplex, BigFloat, BigInt, complex_arith,
                      is_scalar, parse_decimal, sc_arith, sc_neg)
from ..dataio import Dataset, dataset_column
from ..lang import (Binary, BoolLit, Call, ComplexLit, Index, MatrixLit,
                    NumberLit, StringLit, Unary, VarRef, VectorLit)
from ..linalg import (NumMatrix, NumVector, construct_matrix, mat_add,
                      mat_mul, mat_scalar, mat_sub, vec_broadcast, vec_zip)
from . import registry
from .values import UNIT, value_class


def eval_expr(e, session):
    ctx = session.ctx
    if isinstance(e, NumberLit):
        return parse_decimal(e.text, ctx)
    if isinstance(e, StringLit):
        return e.value
    if isinstance(e, BoolLit):
        return e.value
    if isinstance(e, VarRef):
        return session.lookup_var(e.name)
    if isinstance(e, Unary):
        return _negate(eval_expr(e.operand, session), ctx)
    if isinstance(e, Binary):
        a = eval_expr(e.left, session)
        b = eval_expr(e.right, session)
        return _binary(e.op, a, b, ctx)
    if isinstance(e, VectorLit):
        items = [_require_scalar(eval_expr(i, session), "vector element")
                 for i in e.items]
        return NumVector(items, ctx)
    if isinstance(e, ComplexLit):
        re = _require_scalar(eval_expr(e.re, session), "complex part")
        im = _require_scalar(eval_expr(e.im, session), "complex part")
        return BigComplex(re, im)
    if isinstance(e, MatrixLit):
        data = eval_expr(e.data, session)
        if not isinstance(data, NumVector):
            raise errors.EvalTypeError(
                f"matrix data must be a vector, got {value_class(data)}")
        r = _require_int(eval_expr(e.rows, session), "matrix row count")
        c = _require_int(eval_expr(e.cols, session), "matrix column count")
        return construct_matrix(data, r, c, ctx)
    if isinstance(e, Call):
        return _call(e, session)
    if isinstance(e, Index):
        return _index(e, session)
    raise TypeError(f"cannot evaluate {e!r}")


_OP_NAMES = {"+": "add", "-": "sub", "*": "mul", "/": "div", "^": "pow"}


def _binary(sym, a, b, ctx):
    op = _OP_NAMES[sym]
    if is_scalar(a) and is_scalar(b):
        return sc_arith(op, a, b, ctx)
    if isinstance(a, BigComplex) or isinstance(b, BigComplex):
        if op == "pow":
            return _type_error(sym, a, b)
        if not ((isinstance(a, BigComplex) or is_scalar(a))
                and (isinstance(b, BigComplex) or is_scalar(b))):
            return _type_error(sym, a, b)
        return complex_arith(op, _to_complex(a), _to_complex(b), ctx)
    if isinstance(a, NumVector) and isinstance(b, NumVector):
        return vec_zip(op, a, b, ctx)
    if isinstance(a, NumVector) and is_scalar(b):
        return vec_broadcast(op, a, b, ctx)
    if is_scalar(a) and isinstance(b, NumVector):
        return vec_broadcast(op, b, a, ctx, scalar_left=True)
    if isinstance(a, NumMatrix) and isinstance(b, NumMatrix):
        if op == "add":
            return mat_add(a, b, ctx)
        if op == "sub":
            return mat_sub(a, b, ctx)
        if op == "mul":
            return mat_mul(a, b, ctx)
        return _type_error(sym, a, b)
    if isinstance(a, NumMatrix) and is_scalar(b) and op in ("mul", "div"):
        return mat_scalar(op, a, b, ctx)
    if is_scalar(a) and isinstance(b, NumMatrix) and op == "mul":
        return mat_scalar(op, b, a, ctx, scalar_left=True)
    return _type_error(sym, a, b)


def _type_error(sym, a, b):
    raise errors.EvalTypeError(
        f"unsupported operand classes for '{sym}': "
        f"{value_class(a)} and {value_class(b)}")


def _to_complex(v) -> BigComplex:
    return v if isinstance(v, BigComplex) else BigComplex(v, BigInt(0))


def _negate(v, ctx):
    if is_scalar(v):
        return sc_neg(v)
    if isinstance(v, BigComplex):
        return BigComplex(sc_neg(v.re), sc_neg(v.im))
    if isinstance(v, NumVector):
        return NumVector([sc_neg(e) for e in v], ctx)
    if isinstance(v, NumMatrix):
        return NumMatrix(v.rows, v.cols, [sc_neg(e) for e in v.elements], ctx)
    raise errors.EvalTypeError(f"cannot negate a {value_class(v)}")


def _require_scalar(v, what):
    if not is_scalar(v):
        raise errors.EvalTypeError(f"{what} must be a number, "
                                   f"got {value_class(v)}")
    return v


def _require_int(v, what) -> int:
    if not isinstance(v, BigInt):
        raise errors.EvalTypeError(f"{what} must be an integer, "
                                   f"got {value_class(v)}")
    return v.value


def _call(e: Call, session):
    entry = registry.lookup(e.name)
    args = [eval_expr(a, session) for a in e.args]
    if not entry.min_args <= len(args) <= entry.max_args:
        want = (str(entry.min_args) if entry.min_args == entry.max_args
                else f"{entry.min_args}..{entry.max_args}")
        raise errors.EvalTypeError(
            f"{e.name} takes {want} argument(s), got {len(args)}")
    opts = {}
    for name, expr in e.options:
        if name not in entry.options:
            raise errors.EvalTypeError(
                f"{e.name} has no option {name!r}")
        opts[name] = eval_expr(expr, session)
    result = entry.handler(session, args, opts)
    return UNIT if result is None else result


def _index(e: Index, session):
    base = eval_expr(e.base, session)
    if not isinstance(base, Dataset):
        raise errors.EvalTypeError(
            f"only datasets can be indexed, got {value_class(base)}")
    idx = eval_expr(e.index, session)
    if not isinstance(idx, BigInt):
        raise errors.EvalTypeError("column index must be an integer")
    return dataset_column(base, idx.value, session.ctx)
