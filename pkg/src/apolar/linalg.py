"""Exact dense linear algebra over the rationals.

Everything here is `fractions.Fraction` arithmetic; there is no floating
point anywhere in this package.  Elimination picks pivots by numerator plus
denominator bit length to keep intermediate coefficients small.  The reduced
row echelon form is unique, so ranks and kernel bases are deterministic:
identical inputs give bit-identical outputs.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

_ZERO = Fraction(0)
_ONE = Fraction(1)


@dataclass(frozen=True)
class RationalMatrix:
    """Dense rational matrix; ``entries`` is row-major and immutable."""

    rows: int
    cols: int
    entries: tuple[Fraction, ...]

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise ValueError("matrix dimensions must be nonnegative")
        if len(self.entries) != self.rows * self.cols:
            raise ValueError("entry count does not match dimensions")

    @staticmethod
    def from_rows(rows_data) -> "RationalMatrix":
        rows_data = [list(row) for row in rows_data]
        nrows = len(rows_data)
        ncols = len(rows_data[0]) if rows_data else 0
        flat = []
        for row in rows_data:
            if len(row) != ncols:
                raise ValueError("ragged rows")
            flat.extend(Fraction(x) for x in row)
        return RationalMatrix(nrows, ncols, tuple(flat))

    @staticmethod
    def zero(rows: int, cols: int) -> "RationalMatrix":
        return RationalMatrix(rows, cols, (_ZERO,) * (rows * cols))

    def entry(self, i: int, j: int) -> Fraction:
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple[Fraction, ...]:
        return self.entries[i * self.cols : (i + 1) * self.cols]

    def to_lists(self) -> list[list[Fraction]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def times_vector(self, v) -> tuple[Fraction, ...]:
        if len(v) != self.cols:
            raise ValueError("vector length does not match column count")
        return tuple(
            sum((self.entry(i, j) * v[j] for j in range(self.cols)), _ZERO)
            for i in range(self.rows)
        )


def _pivot_size(x: Fraction) -> int:
    return x.numerator.bit_length() + x.denominator.bit_length()


def rref(rows: list[list[Fraction]]) -> tuple[list[list[Fraction]], list[int]]:
    """In-place reduced row echelon form; returns (rows, pivot column list).

    Pivot columns are the leftmost possible (making the result the unique
    RREF); within a column the pivot row is chosen with the smallest
    numerator/denominator bit length to limit coefficient growth.
    """
    if not rows:
        return rows, []
    ncols = len(rows[0])
    nrows = len(rows)
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        best = -1
        best_size = 0
        for i in range(r, nrows):
            v = rows[i][c]
            if v:
                size = _pivot_size(v)
                if best < 0 or size < best_size:
                    best, best_size = i, size
        if best < 0:
            continue
        if best != r:
            rows[r], rows[best] = rows[best], rows[r]
        pv = rows[r][c]
        if pv != _ONE:
            rows[r] = [x / pv for x in rows[r]]
        prow = rows[r]
        for i in range(nrows):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], prow)]
        pivots.append(c)
        r += 1
    return rows, pivots


def rank(m: RationalMatrix) -> int:
    """Rank over the rationals, computed exactly."""
    _, pivots = rref(m.to_lists())
    return len(pivots)


def kernel_basis(m: RationalMatrix) -> list[tuple[Fraction, ...]]:
    """Canonical basis of the right null space.

    The free-variable spanning set is re-reduced so the returned rows are the
    unique RREF of the kernel: pivot entries 1, lexicographically smallest
    pivot positions, deterministic order.  A matrix with zero rows has the
    full space as kernel (standard basis).
    """
    reduced, pivots = rref(m.to_lists())
    pivot_set = set(pivots)
    free = [c for c in range(m.cols) if c not in pivot_set]
    spanning: list[list[Fraction]] = []
    for fc in free:
        v = [_ZERO] * m.cols
        v[fc] = _ONE
        for r_idx, pc in enumerate(pivots):
            v[pc] = -reduced[r_idx][fc]
        spanning.append(v)
    canonical, _ = rref(spanning)
    return [tuple(row) for row in canonical]
