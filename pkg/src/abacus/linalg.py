"""Vectors and matrices over BigInt/BigFloat elements.

Storage is row-major; element type is homogeneous per container (mixed
construction promotes everything to float).  All arithmetic goes through
the scalar promotion helpers so it respects the precision context.
"""

from . import errors
from .bignum import (BigFloat, BigInt, PrecisionContext, Scalar, as_float,
                     sc_abs, sc_arith, sc_cmp, sc_is_zero, sc_neg)
from .bignum.bigfloat import fdiv, fmul, fsub, one
from .bignum.numeric import sc_add, sc_div, sc_mul, sc_sub


def _homogenize(elements, ctx: PrecisionContext):
    """Promote a mixed int/float element list to a single tag."""
    if all(isinstance(e, BigInt) for e in elements):
        return list(elements), "int"
    out = []
    for e in elements:
        if isinstance(e, BigInt):
            out.append(e.to_bigfloat(ctx.bits))
        elif isinstance(e, BigFloat):
            out.append(e)
        else:
            raise errors.EvalTypeError(
                f"vector/matrix elements must be numbers, got {type(e).__name__}")
    return out, "float"


class NumVector:
    __slots__ = ("elements", "tag")

    def __init__(self, elements, ctx: PrecisionContext):
        self.elements, self.tag = _homogenize(list(elements), ctx)

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __repr__(self):
        return f"NumVector({self.elements!r})"


class NumMatrix:
    __slots__ = ("rows", "cols", "elements", "tag")

    def __init__(self, rows: int, cols: int, elements, ctx: PrecisionContext):
        if len(elements) != rows * cols:
            raise errors.DimensionError(
                f"matrix needs {rows * cols} elements, got {len(elements)}")
        self.rows = rows
        self.cols = cols
        self.elements, self.tag = _homogenize(list(elements), ctx)

    def at(self, r: int, c: int) -> Scalar:
        return self.elements[r * self.cols + c]

    def row(self, r: int):
        return self.elements[r * self.cols:(r + 1) * self.cols]

    def __repr__(self):
        return f"NumMatrix({self.rows}x{self.cols})"


_MAX_MATRIX_ELEMENTS = 1 << 24


def construct_matrix(data: NumVector, r, c, ctx: PrecisionContext) -> NumMatrix:
    """Row-major fill; positions beyond the data are set to zero."""
    if not isinstance(r, int) or not isinstance(c, int):
        raise errors.EvalTypeError("matrix dimensions must be integers")
    if r < 1 or c < 1:
        raise errors.DimensionError(f"matrix dimensions must be >= 1, got {r}x{c}")
    n = len(data)
    if n > r * c:
        raise errors.DimensionError(
            f"{n} elements do not fit in a {r}x{c} matrix")
    if r * c > _MAX_MATRIX_ELEMENTS:
        # refuse before the zero-fill ties up all memory
        raise errors.DimensionError(
            f"matrix with {r * c} elements is too large "
            f"(limit {_MAX_MATRIX_ELEMENTS})")
    zero = BigInt(0) if data.tag == "int" else BigFloat.zero(ctx.bits)
    elements = list(data.elements) + [zero] * (r * c - n)
    return NumMatrix(r, c, elements, ctx)


def vec_broadcast(op: str, v: NumVector, s: Scalar, ctx: PrecisionContext,
                  scalar_left: bool = False) -> NumVector:
    if scalar_left:
        return NumVector([sc_arith(op, s, e, ctx) for e in v], ctx)
    return NumVector([sc_arith(op, e, s, ctx) for e in v], ctx)


def vec_zip(op: str, a: NumVector, b: NumVector, ctx: PrecisionContext) -> NumVector:
    if len(a) != len(b):
        raise errors.DimensionError(
            f"vector lengths differ: {len(a)} vs {len(b)}")
    return NumVector([sc_arith(op, x, y, ctx) for x, y in zip(a, b)], ctx)


def elementwise_map(fn, v: NumVector, ctx: PrecisionContext) -> NumVector:
    out = []
    for i, e in enumerate(v):
        try:
            out.append(fn(e))
        except errors.DomainError as exc:
            raise errors.DomainError(f"{exc} (component {i})") from None
    return NumVector(out, ctx)


def dotprod(a: NumVector, b: NumVector, ctx: PrecisionContext) -> Scalar:
    if len(a) != len(b):
        raise errors.DimensionError(
            f"vector lengths differ: {len(a)} vs {len(b)}")
    if len(a) == 0:
        raise errors.DimensionError("dotprod requires non-empty vectors")
    acc = sc_mul(a.elements[0], b.elements[0], ctx)
    for x, y in zip(a.elements[1:], b.elements[1:]):
        acc = sc_add(acc, sc_mul(x, y, ctx), ctx)
    return acc


def append(v: NumVector, x, ctx: PrecisionContext) -> NumVector:
    extra = list(x.elements) if isinstance(x, NumVector) else [x]
    return NumVector(list(v.elements) + extra, ctx)


def sequence(start: Scalar, stop: Scalar, step: Scalar,
             ctx: PrecisionContext) -> NumVector:
    """start, start+step, ... computed fresh from the index (no drift)."""
    if sc_is_zero(step):
        raise errors.DomainError("sequence step must be non-zero")
    span = sc_sub(stop, start, ctx)
    q = sc_div(as_float(span, ctx), as_float(step, ctx), ctx)
    if q.sign < 0 and q.sig != 0:
        raise errors.DomainError("sequence step has the wrong sign")
    # nearest integer to the exact count, else floor
    qf = q
    n_near = _nearest_int(qf)
    endpoint = sc_add(start, sc_mul(BigInt(n_near), step, ctx), ctx)
    miss = sc_sub(endpoint, stop, ctx)
    tol = fdiv(as_float(sc_abs(step), ctx),
               BigFloat.from_int(1 << 16, ctx.bits), ctx)
    if sc_cmp(sc_abs(miss), tol) <= 0:
        n = n_near
    else:
        n = _floor_int(qf)
    out = [sc_add(start, sc_mul(BigInt(i), step, ctx), ctx) for i in range(n + 1)]
    return NumVector(out, ctx)


def _nearest_int(x: BigFloat) -> int:
    if x.sig == 0:
        return 0
    if x.exp >= 0:
        return x.sign * (x.sig << x.exp)
    mag = (x.sig + (1 << (-x.exp - 1))) >> (-x.exp) if -x.exp <= x.sig.bit_length() + 1 else 0
    return x.sign * mag


def _floor_int(x: BigFloat) -> int:
    if x.sig == 0:
        return 0
    if x.exp >= 0:
        return x.sign * (x.sig << x.exp)
    shift = -x.exp
    q = x.sig >> shift if shift <= x.sig.bit_length() else 0
    r = x.sig - (q << shift) if shift <= x.sig.bit_length() else x.sig
    if x.sign < 0 and r:
        return -(q + 1)
    return x.sign * q


# -- matrix arithmetic --------------------------------------------------------


def mat_add(a: NumMatrix, b: NumMatrix, ctx: PrecisionContext) -> NumMatrix:
    return _mat_zip("add", a, b, ctx)


def mat_sub(a: NumMatrix, b: NumMatrix, ctx: PrecisionContext) -> NumMatrix:
    return _mat_zip("sub", a, b, ctx)


def _mat_zip(op, a, b, ctx):
    if (a.rows, a.cols) != (b.rows, b.cols):
        raise errors.DimensionError(
            f"matrix shapes differ: {a.rows}x{a.cols} vs {b.rows}x{b.cols}")
    return NumMatrix(a.rows, a.cols,
                     [sc_arith(op, x, y, ctx) for x, y in zip(a.elements, b.elements)],
                     ctx)


def mat_mul(a: NumMatrix, b: NumMatrix, ctx: PrecisionContext) -> NumMatrix:
    if a.cols != b.rows:
        raise errors.DimensionError(
            f"cannot multiply {a.rows}x{a.cols} by {b.rows}x{b.cols}")
    out = []
    for i in range(a.rows):
        for j in range(b.cols):
            acc = sc_mul(a.at(i, 0), b.at(0, j), ctx)
            for k in range(1, a.cols):
                acc = sc_add(acc, sc_mul(a.at(i, k), b.at(k, j), ctx), ctx)
            out.append(acc)
    return NumMatrix(a.rows, b.cols, out, ctx)


def mat_scalar(op: str, m: NumMatrix, s: Scalar, ctx: PrecisionContext,
               scalar_left: bool = False) -> NumMatrix:
    if scalar_left:
        elems = [sc_arith(op, s, e, ctx) for e in m.elements]
    else:
        elems = [sc_arith(op, e, s, ctx) for e in m.elements]
    return NumMatrix(m.rows, m.cols, elems, ctx)


def transpose(m: NumMatrix, ctx: PrecisionContext) -> NumMatrix:
    out = [m.at(r, c) for c in range(m.cols) for r in range(m.rows)]
    return NumMatrix(m.cols, m.rows, out, ctx)


def mat_trace(m: NumMatrix, ctx: PrecisionContext) -> Scalar:
    _require_square(m, "trace")
    acc = m.at(0, 0)
    for i in range(1, m.rows):
        acc = sc_add(acc, m.at(i, i), ctx)
    return acc


def mat_det(m: NumMatrix, ctx: PrecisionContext) -> Scalar:
    """Determinant as the signed product of elimination pivots."""
    _require_square(m, "det")
    g = PrecisionContext(ctx.words + 2, ctx.output_digits)
    n = m.rows
    a = [[as_float(m.at(i, j), g) for j in range(n)] for i in range(n)]
    det = one(g.bits)
    sign = 1
    for col in range(n):
        piv = _pivot_row(a, col, n)
        if piv is None:
            return BigFloat.zero(ctx.bits)
        if piv != col:
            a[piv], a[col] = a[col], a[piv]
            sign = -sign
        det = fmul(det, a[col][col], g)
        for r in range(col + 1, n):
            f = fdiv(a[r][col], a[col][col], g)
            for c in range(col, n):
                a[r][c] = fsub(a[r][c], fmul(f, a[col][c], g), g)
    if sign < 0:
        det = det.neg()
    return det.round_to(ctx.bits)


def mat_invert(m: NumMatrix, ctx: PrecisionContext) -> NumMatrix:
    """Gauss-Jordan with partial pivoting, computed with two guard words."""
    _require_square(m, "invert")
    g = PrecisionContext(ctx.words + 2, ctx.output_digits)
    n = m.rows
    a = [[as_float(m.at(i, j), g) for j in range(n)] for i in range(n)]
    inv = [[one(g.bits) if i == j else BigFloat.zero(g.bits) for j in range(n)]
           for i in range(n)]
    for col in range(n):
        piv = _pivot_row(a, col, n)
        if piv is None:
            raise errors.SingularMatrixError(
                f"matrix is singular (no pivot in column {col})")
        if piv != col:
            a[piv], a[col] = a[col], a[piv]
            inv[piv], inv[col] = inv[col], inv[piv]
        d = a[col][col]
        for c in range(n):
            a[col][c] = fdiv(a[col][c], d, g)
            inv[col][c] = fdiv(inv[col][c], d, g)
        for r in range(n):
            if r == col:
                continue
            f = a[r][col]
            if f.sig == 0:
                continue
            for c in range(n):
                a[r][c] = fsub(a[r][c], fmul(f, a[col][c], g), g)
                inv[r][c] = fsub(inv[r][c], fmul(f, inv[col][c], g), g)
    flat = [inv[i][j].round_to(ctx.bits) for i in range(n) for j in range(n)]
    return NumMatrix(n, n, flat, ctx)


def _pivot_row(a, col, n):
    """Row index of the largest-magnitude entry at/below the diagonal."""
    best, best_row = None, None
    for r in range(col, n):
        v = a[r][col].abs()
        if v.sig == 0:
            continue
        if best is None or v.compare(best) > 0:
            best, best_row = v, r
    return best_row


def _require_square(m: NumMatrix, what: str):
    if m.rows != m.cols:
        raise errors.DimensionError(
            f"{what} requires a square matrix, got {m.rows}x{m.cols}")
