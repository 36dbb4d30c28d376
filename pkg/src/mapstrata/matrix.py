"""Dense exact matrices: fraction-free ranks, determinants, minors.

Rank and determinant over Q clear denominators row by row and run integer
Bareiss elimination (no rational blowup); over F_p plain Gaussian elimination
is used.  The same Bareiss routine runs verbatim over any exact integral
domain given an exact-division callback, which is how minors of one-parameter
families (polynomial entries in t) and of symbolic chart matrices are
computed.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from itertools import combinations

from .errors import ExactDivisionError
from .fields import QQ


def int_divexact(a, b):
    q, r = divmod(a, b)
    if r:
        raise ExactDivisionError(f"{b} does not divide {a}")
    return q


def bareiss_det(rows, exact_div, one):
    """Fraction-free determinant of a square matrix over an integral domain.

    ``rows`` is consumed as a list of mutable row lists; ``exact_div`` must
    perform the (guaranteed exact) Bareiss division; ``one`` is the ring unit.
    """
    n = len(rows)
    if n == 0:
        return one
    m = [list(r) for r in rows]
    sign = 1
    prev = one
    for k in range(n - 1):
        if not m[k][k]:
            pivot_row = next((i for i in range(k + 1, n) if m[i][k]), None)
            if pivot_row is None:
                return one - one  # a zero pivot column: determinant vanishes
            m[k], m[pivot_row] = m[pivot_row], m[k]
            sign = -sign
        pivot = m[k][k]
        for i in range(k + 1, n):
            row_i, row_k = m[i], m[k]
            head = row_i[k]
            for j in range(k + 1, n):
                row_i[j] = exact_div(pivot * row_i[j] - head * row_k[j], prev)
            row_i[k] = prev - prev
        prev = pivot
    det = m[n - 1][n - 1]
    return det if sign > 0 else -det


def bareiss_rank(rows, exact_div, one):
    """Fraction-free rank over an integral domain (column-skipping pivots)."""
    m = [list(r) for r in rows]
    if not m:
        return 0
    nrows, ncols = len(m), len(m[0])
    rank = 0
    prev = one
    for c in range(ncols):
        pivot_row = next((i for i in range(rank, nrows) if m[i][c]), None)
        if pivot_row is None:
            continue
        m[rank], m[pivot_row] = m[pivot_row], m[rank]
        pivot = m[rank][c]
        for i in range(rank + 1, nrows):
            row_i, row_r = m[i], m[rank]
            head = row_i[c]
            for j in range(c + 1, ncols):
                row_i[j] = exact_div(pivot * row_i[j] - head * row_r[j], prev)
            row_i[c] = prev - prev
        prev = pivot
        rank += 1
        if rank == nrows:
            break
    return rank


def gauss_rank(rows):
    """Plain Gaussian elimination rank; entries must form a field."""
    m = [list(r) for r in rows]
    if not m:
        return 0
    nrows, ncols = len(m), len(m[0])
    rank = 0
    for c in range(ncols):
        pivot_row = next((i for i in range(rank, nrows) if m[i][c]), None)
        if pivot_row is None:
            continue
        m[rank], m[pivot_row] = m[pivot_row], m[rank]
        pivot = m[rank][c]
        for i in range(rank + 1, nrows):
            if not m[i][c]:
                continue
            factor = m[i][c] / pivot
            row_i, row_r = m[i], m[rank]
            for j in range(c, ncols):
                row_i[j] = row_i[j] - factor * row_r[j]
        rank += 1
        if rank == nrows:
            break
    return rank


def gauss_det(rows):
    """Determinant over a field by Gaussian elimination with row swaps."""
    m = [list(r) for r in rows]
    n = len(m)
    sign = 1
    for k in range(n):
        pivot_row = next((i for i in range(k, n) if m[i][k]), None)
        if pivot_row is None:
            zero = m[0][0] - m[0][0]
            return zero
        if pivot_row != k:
            m[k], m[pivot_row] = m[pivot_row], m[k]
            sign = -sign
        pivot = m[k][k]
        for i in range(k + 1, n):
            if not m[i][k]:
                continue
            factor = m[i][k] / pivot
            for j in range(k, n):
                m[i][j] = m[i][j] - factor * m[k][j]
    det = m[0][0]
    for k in range(1, n):
        det = det * m[k][k]
    return det if sign > 0 else -det


def _clear_row_denominators(row):
    scale = math.lcm(*(c.denominator for c in row))
    return [int(c * scale) for c in row], scale


class ExactMatrix:
    """An immutable dense matrix over an exact field (Q or F_p)."""

    __slots__ = ("rows", "field")

    def __init__(self, rows, field=QQ):
        self.rows = tuple(tuple(field.scalar(c) for c in r) for r in rows)
        if self.rows and any(len(r) != len(self.rows[0]) for r in self.rows):
            raise ValueError("ragged rows")
        self.field = field

    @property
    def nrows(self):
        return len(self.rows)

    @property
    def ncols(self):
        return len(self.rows[0]) if self.rows else 0

    @property
    def shape(self):
        return (self.nrows, self.ncols)

    def __getitem__(self, idx):
        i, j = idx
        return self.rows[i][j]

    def __eq__(self, other):
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return self.field == other.field and self.rows == other.rows

    def __hash__(self):
        return hash((self.rows, self.field.name))

    def rank(self):
        """Exact rank: integer Bareiss over Q, Gaussian over F_p, generic
        fraction-free elimination over any other exact domain (e.g. Q[t])."""
        if not self.rows:
            return 0
        if self.field == QQ:
            int_rows = [_clear_row_denominators(r)[0] for r in self.rows]
            return bareiss_rank(int_rows, int_divexact, 1)
        if self.field.characteristic > 0:
            return gauss_rank(self.rows)
        return bareiss_rank(self.rows, lambda a, b: a.exact_div(b), self.field.one)

    def det(self):
        if self.nrows != self.ncols:
            raise ValueError("determinant of a non-square matrix")
        if self.nrows == 0:
            return self.field.one
        if self.field == QQ:
            int_rows = []
            scale = 1
            for r in self.rows:
                int_row, s = _clear_row_denominators(r)
                int_rows.append(int_row)
                scale *= s
            return Fraction(bareiss_det(int_rows, int_divexact, 1), scale)
        if self.field.characteristic > 0:
            return gauss_det(self.rows)
        return bareiss_det(self.rows, lambda a, b: a.exact_div(b), self.field.one)

    def submatrix(self, row_idx, col_idx):
        return ExactMatrix(
            [[self.rows[i][j] for j in col_idx] for i in row_idx], self.field
        )

    def minor(self, row_idx, col_idx):
        return self.submatrix(row_idx, col_idx).det()

    def __mul__(self, other):
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        if self.field != other.field:
            raise ValueError("matrix product over mixed fields")
        if self.ncols != other.nrows:
            raise ValueError(f"shape mismatch {self.shape} x {other.shape}")
        cols = list(zip(*other.rows)) if other.rows else []
        zero = self.field.zero
        out = []
        for r in self.rows:
            out.append(
                [sum((a * b for a, b in zip(r, c) if a and b), zero) for c in cols]
            )
        return ExactMatrix(out, self.field)

    def row_action(self, vec):
        """Left product vec . M of a coefficient row-vector with this matrix."""
        if len(vec) != self.nrows:
            raise ValueError("vector length must match row count")
        zero = self.field.zero
        out = [zero] * self.ncols
        for a, row in zip(vec, self.rows):
            if not a:
                continue
            for j, b in enumerate(row):
                if b:
                    out[j] = out[j] + a * b
        return out

    def transpose(self):
        return ExactMatrix(list(zip(*self.rows)), self.field)

    def __str__(self):
        return "\n".join(
            "[" + "  ".join(self.field.format(c) for c in r) + "]" for r in self.rows
        )

    def __repr__(self):
        return f"ExactMatrix({self.nrows}x{self.ncols} over {self.field.name})"


@lru_cache(maxsize=None)
def subsets_colex(n, r):
    """All r-element subsets of range(n) in colexicographic order."""
    return tuple(sorted(combinations(range(n), r), key=lambda t: t[::-1]))
