"""Vectors and matrices against exact rational oracles."""

import random
from fractions import Fraction

import pytest

from abacus import errors
from abacus.bignum import BigFloat, BigInt, PrecisionContext
from abacus.linalg import (NumMatrix, NumVector, append, construct_matrix,
                           dotprod, mat_det, mat_invert, mat_mul, mat_trace,
                           sequence, transpose, vec_broadcast, vec_zip)

from .oracles import bf_to_fraction, check_rne, scalar_to_fraction


def _frac_inverse(rows):
    """Exact Gauss-Jordan inverse over Fractions; None when singular."""
    n = len(rows)
    a = [[Fraction(x) for x in row] for row in rows]
    inv = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col] != 0), None)
        if piv is None:
            return None
        a[piv], a[col] = a[col], a[piv]
        inv[piv], inv[col] = inv[col], inv[piv]
        d = a[col][col]
        a[col] = [x / d for x in a[col]]
        inv[col] = [x / d for x in inv[col]]
        for r in range(n):
            if r != col and a[r][col]:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
                inv[r] = [x - f * y for x, y in zip(inv[r], inv[col])]
    return inv


def _frac_det(rows):
    n = len(rows)
    a = [[Fraction(x) for x in row] for row in rows]
    det = Fraction(1)
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != col:
            a[piv], a[col] = a[col], a[piv]
            det = -det
        det *= a[col][col]
        for r in range(col + 1, n):
            f = a[r][col] / a[col][col]
            a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return det


def _int_matrix(rows, ctx):
    n = len(rows)
    return NumMatrix(n, n, [BigInt(x) for row in rows for x in row], ctx)


def _ulps_off(x: BigFloat, want: Fraction) -> float:
    """Distance from `want` in units of x's last place."""
    if want == 0:
        return 0.0 if x.sig == 0 else float("inf")
    err = abs(bf_to_fraction(x) - want) / abs(want)
    return float(err * (1 << (x.bits - 1)))


def test_vector_homogenize(ctx8):
    v = NumVector([BigInt(1), BigInt(2)], ctx8)
    assert v.tag == "int"
    w = NumVector([BigInt(1), BigFloat.from_ratio(1, 2, ctx8.bits)], ctx8)
    assert w.tag == "float"
    assert all(isinstance(e, BigFloat) for e in w)


def test_construct_matrix_zero_fill(ctx8):
    data = NumVector([BigInt(x) for x in (1, 2, 3, 4, 5, 6)], ctx8)
    m = construct_matrix(data, 3, 3, ctx8)
    assert [e.value for e in m.row(2)] == [0, 0, 0]
    with pytest.raises(errors.DimensionError):
        construct_matrix(data, 2, 2, ctx8)
    with pytest.raises(errors.DimensionError):
        construct_matrix(data, 0, 3, ctx8)


def test_dotprod_golden(ctx8):
    a = NumVector([BigInt(1), BigInt(-2)], ctx8)
    b = NumVector([BigInt(-3), BigInt(4)], ctx8)
    assert dotprod(a, b, ctx8).value == -11
    with pytest.raises(errors.DimensionError):
        dotprod(a, NumVector([BigInt(1)], ctx8), ctx8)
    with pytest.raises(errors.DimensionError):
        dotprod(NumVector([], ctx8), NumVector([], ctx8), ctx8)


def test_broadcast_and_zip(ctx8):
    v = NumVector([BigInt(1), BigInt(2)], ctx8)
    r = vec_broadcast("mul", v, BigInt(3), ctx8)
    assert [e.value for e in r] == [3, 6]
    l = vec_broadcast("sub", v, BigInt(10), ctx8, scalar_left=True)
    assert [e.value for e in l] == [9, 8]
    z = vec_zip("add", v, v, ctx8)
    assert [e.value for e in z] == [2, 4]
    with pytest.raises(errors.DimensionError):
        vec_zip("add", v, NumVector([BigInt(1)], ctx8), ctx8)


def test_append(ctx8):
    v = NumVector([BigInt(1), BigInt(-2)], ctx8)
    assert [e.value for e in append(v, BigInt(5), ctx8)] == [1, -2, 5]
    w = append(v, NumVector([BigInt(7), BigInt(8)], ctx8), ctx8)
    assert [e.value for e in w] == [1, -2, 7, 8]


def test_sequence_example12_length(ctx8):
    from abacus.bignum import parse_decimal
    v = sequence(BigInt(-1), BigInt(1), parse_decimal("0.1", ctx8), ctx8)
    assert len(v) == 21
    assert check_rne(v.elements[0], Fraction(-1))
    # elements are start + i*step computed fresh, not accumulated
    step = bf_to_fraction(parse_decimal("0.1", ctx8))
    assert check_rne(v.elements[20], -1 + 20 * step)


def test_sequence_exact_and_floor_cases(ctx8):
    v = sequence(BigInt(0), BigInt(10), BigInt(2), ctx8)
    assert [scalar_to_fraction(e) for e in v] == [0, 2, 4, 6, 8, 10]
    w = sequence(BigInt(0), BigInt(9), BigInt(2), ctx8)
    assert [scalar_to_fraction(e) for e in w] == [0, 2, 4, 6, 8]
    with pytest.raises(errors.DomainError):
        sequence(BigInt(0), BigInt(1), BigInt(0), ctx8)
    with pytest.raises(errors.DomainError):
        sequence(BigInt(0), BigInt(1), BigInt(-1), ctx8)


def test_matmul_transpose_trace(ctx8):
    m = _int_matrix([[1, 2], [3, 4]], ctx8)
    p = mat_mul(m, m, ctx8)
    assert [e.value for e in p.elements] == [7, 10, 15, 22]
    t = transpose(m, ctx8)
    assert [e.value for e in t.elements] == [1, 3, 2, 4]
    assert mat_trace(m, ctx8).value == 5
    with pytest.raises(errors.DimensionError):
        mat_mul(m, _int_matrix([[1, 2, 3], [4, 5, 6], [7, 8, 9]], ctx8), ctx8)


def test_invert_golden_seventh(ctx8):
    m = _int_matrix([[1, 3], [-1, 4]], ctx8)
    inv = mat_invert(m, ctx8)
    want = [Fraction(4, 7), Fraction(-3, 7), Fraction(1, 7), Fraction(1, 7)]
    for got, w in zip(inv.elements, want):
        assert check_rne(got, w)  # correctly rounded at full precision


def test_invert_random_vs_fraction_oracle():
    ctx = PrecisionContext(2)
    rng = random.Random(41)
    for _ in range(60):
        n = rng.randint(1, 5)
        rows = [[rng.randint(-9, 9) for _ in range(n)] for _ in range(n)]
        want = _frac_inverse(rows)
        if want is None or abs(_frac_det(rows)) < Fraction(1, 2):
            continue
        inv = mat_invert(_int_matrix(rows, ctx), ctx)
        # absolute tolerance scaled to the largest inverse entry: exact
        # zeros come out as guard-precision dust, not as relative-1/2-ulp
        scale = max(abs(w) for row in want for w in row)
        tol = scale * Fraction(1, 1 << 62)
        for i in range(n):
            for j in range(n):
                err = abs(bf_to_fraction(inv.at(i, j)) - want[i][j])
                assert err <= tol


def test_det_vs_fraction_oracle():
    ctx = PrecisionContext(2)
    rng = random.Random(43)
    for _ in range(60):
        n = rng.randint(1, 5)
        rows = [[rng.randint(-9, 9) for _ in range(n)] for _ in range(n)]
        want = _frac_det(rows)
        got = mat_det(_int_matrix(rows, ctx), ctx)
        if want == 0:
            assert got.sig == 0
        else:
            assert _ulps_off(got, want) <= 4.0


def test_singular_matrix(ctx8):
    m = _int_matrix([[1, 2], [2, 4]], ctx8)
    with pytest.raises(errors.SingularMatrixError):
        mat_invert(m, ctx8)
    assert mat_det(m, ctx8).sig == 0


def test_non_square_errors(ctx8):
    m = NumMatrix(1, 2, [BigInt(1), BigInt(2)], ctx8)
    for fn in (mat_invert, mat_det, mat_trace):
        with pytest.raises(errors.DimensionError):
            fn(m, ctx8)
