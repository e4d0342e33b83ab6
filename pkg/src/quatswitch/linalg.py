"""Small dense matrices over a field, stored as tuples of tuples of Scalars."""

from __future__ import annotations

from typing import List, Sequence

from .errors import SingularMatrix
from .field import Field, Scalar
from .quat2 import Mat2

Matrix = tuple  # tuple[tuple[Scalar, ...], ...]


def identity(field: Field, n: int) -> Matrix:
    one, zero = field.one, field.zero
    return tuple(tuple(one if i == j else zero for j in range(n)) for i in range(n))


def zeros(field: Field, rows: int, cols: int) -> Matrix:
    zero = field.zero
    return tuple(tuple(zero for _ in range(cols)) for _ in range(rows))


def from_blocks(blocks: Sequence[Sequence[Mat2]]) -> Matrix:
    """Flatten a block matrix of Mat2 entries into a scalar matrix."""
    out = []
    for brow in blocks:
        top, bottom = [], []
        for m in brow:
            top.extend((m.e11, m.e12))
            bottom.extend((m.e21, m.e22))
        out.append(tuple(top))
        out.append(tuple(bottom))
    return tuple(out)


def block(m: Matrix, i: int, j: int) -> Mat2:
    """The (i, j) 2x2 block of a flattened block matrix."""
    return Mat2(m[2 * i][2 * j], m[2 * i][2 * j + 1], m[2 * i + 1][2 * j], m[2 * i + 1][2 * j + 1])


def matmul(a: Matrix, b: Matrix) -> Matrix:
    cols = list(zip(*b))
    out = []
    for row in a:
        out_row = []
        for col in cols:
            acc = None
            for x, y in zip(row, col):
                if x.is_zero() or y.is_zero():
                    continue
                acc = x * y if acc is None else acc + x * y
            out_row.append(acc if acc is not None else row[0].field.zero)
        out.append(tuple(out_row))
    return tuple(out)


def matadd(a: Matrix, b: Matrix) -> Matrix:
    return tuple(tuple(x + y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def matsub(a: Matrix, b: Matrix) -> Matrix:
    return tuple(tuple(x - y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def direct_sum(*ms: Matrix) -> Matrix:
    field = next(m[0][0].field for m in ms if m)
    n = sum(len(m) for m in ms)
    out = [list(r) for r in zeros(field, n, n)]
    off = 0
    for m in ms:
        for i, row in enumerate(m):
            for j, x in enumerate(row):
                out[off + i][off + j] = x
        off += len(m)
    return tuple(tuple(r) for r in out)


def is_zero(m: Matrix) -> bool:
    return all(x.is_zero() for row in m for x in row)


def _echelon(m: Matrix):
    """Row-reduce a copy of ``m``; returns (rows, pivot_columns, sign)."""
    rows: List[list] = [list(r) for r in m]
    n_rows = len(rows)
    n_cols = len(rows[0]) if rows else 0
    pivots = []
    sign = 1
    r = 0
    for c in range(n_cols):
        piv = next((i for i in range(r, n_rows) if not rows[i][c].is_zero()), None)
        if piv is None:
            continue
        if piv != r:
            rows[r], rows[piv] = rows[piv], rows[r]
            sign = -sign
        inv = rows[r][c].inv()
        for i in range(r + 1, n_rows):
            x = rows[i][c]
            if x.is_zero():
                continue
            f = x * inv
            rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == n_rows:
            break
    return rows, pivots, sign


def rank(m: Matrix) -> int:
    if not m or not m[0]:
        return 0
    return len(_echelon(m)[1])


def det(m: Matrix) -> Scalar:
    n = len(m)
    if n == 0:
        raise ValueError("determinant of an empty matrix needs a field")
    rows, pivots, sign = _echelon(m)
    field = m[0][0].field
    if len(pivots) < n:
        return field.zero
    acc = field.one * sign
    for i in range(n):
        acc = acc * rows[i][i]
    return acc


def inverse(m: Matrix) -> Matrix:
    n = len(m)
    field = m[0][0].field
    aug = [list(row) + list(e) for row, e in zip(m, identity(field, n))]
    for c in range(n):
        piv = next((i for i in range(c, n) if not aug[i][c].is_zero()), None)
        if piv is None:
            raise SingularMatrix("matrix is singular")
        aug[c], aug[piv] = aug[piv], aug[c]
        inv = aug[c][c].inv()
        aug[c] = [x * inv for x in aug[c]]
        for i in range(n):
            if i != c and not aug[i][c].is_zero():
                f = aug[i][c]
                aug[i] = [a - f * b for a, b in zip(aug[i], aug[c])]
    return tuple(tuple(row[n:]) for row in aug)


def to_str_rows(m: Matrix):
    return [[str(x) for x in row] for row in m]
