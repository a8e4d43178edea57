"""Exact rational scalars and fraction-free linear algebra.

Matrices are plain lists of rows. Entries may be ``int`` or ``Fraction``;
rows are scaled to integers before elimination so that the Bareiss
recurrence runs entirely over ``int``.
"""

from fractions import Fraction
from math import lcm
from numbers import Rational

from .errors import DimensionMismatchError

Scalar = Fraction


def as_scalar(x):
    """Coerce ``x`` to an exact ``Fraction``.

    Accepts ints, Fractions and strings like ``"3/7"``. Floats are refused:
    they would silently bring binary rounding into identities that are
    supposed to hold exactly.
    """
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("booleans are not scalars")
    if isinstance(x, (int, Rational)):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x.strip())
    raise TypeError(f"expected an exact rational, got {type(x).__name__}")


def as_vector(v, n=None):
    vec = tuple(as_scalar(x) for x in v)
    if n is not None and len(vec) != n:
        raise DimensionMismatchError(f"expected a vector of length {n}, got {len(vec)}")
    return vec


def _integer_rows(matrix):
    rows = []
    for row in matrix:
        row = [as_scalar(x) for x in row]
        scale = lcm(*(x.denominator for x in row)) if row else 1
        rows.append([int(x * scale) for x in row])
    return rows


def _bareiss(rows, ncols):
    """In-place fraction-free elimination; returns (rank, sign, last pivot)."""
    nrows = len(rows)
    rank = 0
    sign = 1
    prev = 1
    for col in range(ncols):
        if rank == nrows:
            break
        pivot = next((r for r in range(rank, nrows) if rows[r][col] != 0), None)
        if pivot is None:
            continue
        if pivot != rank:
            rows[rank], rows[pivot] = rows[pivot], rows[rank]
            sign = -sign
        p = rows[rank][col]
        for r in range(rank + 1, nrows):
            a = rows[r][col]
            row_r, row_p = rows[r], rows[rank]
            for c in range(col + 1, ncols):
                # exact division is guaranteed by Sylvester's identity
                row_r[c] = (p * row_r[c] - a * row_p[c]) // prev
            row_r[col] = 0
        prev = p
        rank += 1
    return rank, sign, prev


def rank(matrix):
    """Exact rank of a rational matrix (fraction-free Gaussian elimination)."""
    rows = _integer_rows(matrix)
    if not rows:
        return 0
    ncols = len(rows[0])
    if any(len(r) != ncols for r in rows):
        raise DimensionMismatchError("ragged matrix")
    return _bareiss(rows, ncols)[0]


def det(matrix):
    """Exact determinant of a square rational matrix."""
    mat = [[as_scalar(x) for x in row] for row in matrix]
    n = len(mat)
    if any(len(r) != n for r in mat):
        raise DimensionMismatchError("determinant needs a square matrix")
    if n == 0:
        return Fraction(1)
    scales = [lcm(*(x.denominator for x in row)) for row in mat]
    rows = [[int(x * s) for x in row] for row, s in zip(mat, scales)]
    r, sign, last = _bareiss(rows, n)
    if r < n:
        return Fraction(0)
    denom = 1
    for s in scales:
        denom *= s
    return Fraction(sign * last, denom)
