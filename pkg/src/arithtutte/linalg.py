"""Exact integer linear algebra: rank, Smith normal form and torsion orders.

Everything here works on Python ints, so intermediate values never overflow.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from itertools import combinations
from math import comb, gcd, prod
from typing import Iterable, Sequence

from .errors import CapExceededError

DEFAULT_MINOR_CAP = 10_000


@dataclass(frozen=True)
class IntMatrix:
    """Dense integer matrix stored row-major."""

    n_rows: int
    n_cols: int
    entries: tuple[int, ...]

    def __post_init__(self):
        if self.n_rows < 0 or self.n_cols < 0:
            raise ValueError("matrix dimensions must be nonnegative")
        if len(self.entries) != self.n_rows * self.n_cols:
            raise ValueError(
                f"expected {self.n_rows * self.n_cols} entries, got {len(self.entries)}"
            )

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], n_cols: int | None = None) -> IntMatrix:
        rows = [tuple(int(a) for a in r) for r in rows]
        if n_cols is None:
            n_cols = len(rows[0]) if rows else 0
        if any(len(r) != n_cols for r in rows):
            raise ValueError("ragged rows")
        return cls(len(rows), n_cols, tuple(a for r in rows for a in r))

    @classmethod
    def from_columns(cls, columns: Iterable[Sequence[int]], n_rows: int) -> IntMatrix:
        """Build a matrix whose columns are ``columns``; ``n_rows`` fixes the shape
        when there are no columns."""
        cols = [tuple(int(a) for a in c) for c in columns]
        if any(len(c) != n_rows for c in cols):
            raise ValueError("column length does not match n_rows")
        entries = tuple(cols[j][i] for i in range(n_rows) for j in range(len(cols)))
        return cls(n_rows, len(cols), entries)

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.entries[i * self.n_cols + j]

    def rows(self) -> list[list[int]]:
        c = self.n_cols
        return [list(self.entries[i * c:(i + 1) * c]) for i in range(self.n_rows)]

    def columns(self) -> list[tuple[int, ...]]:
        return [
            tuple(self.entries[i * self.n_cols + j] for i in range(self.n_rows))
            for j in range(self.n_cols)
        ]

    def transpose(self) -> IntMatrix:
        return IntMatrix.from_columns(self.rows(), self.n_cols)


@dataclass(frozen=True)
class SnfResult:
    invariant_factors: tuple[int, ...]

    @property
    def rank(self) -> int:
        return len(self.invariant_factors)


def rank(m: IntMatrix) -> int:
    """Rank over Q by fraction-free (Bareiss) elimination."""
    a = m.rows()
    n_rows, n_cols = m.n_rows, m.n_cols
    r = 0
    prev = 1
    for col in range(n_cols):
        if r == n_rows:
            break
        pivot = next((i for i in range(r, n_rows) if a[i][col] != 0), None)
        if pivot is None:
            continue
        a[r], a[pivot] = a[pivot], a[r]
        p = a[r][col]
        for i in range(r + 1, n_rows):
            f = a[i][col]
            row_i = a[i]
            row_r = a[r]
            for j in range(col + 1, n_cols):
                # exact division is the Bareiss guarantee
                row_i[j] = (p * row_i[j] - f * row_r[j]) // prev
            row_i[col] = 0
        prev = p
        r += 1
    return r


def smith_normal_form(m: IntMatrix) -> SnfResult:
    """Nonzero invariant factors d_1 | d_2 | ... | d_r of ``m``."""
    a = m.rows()
    n_rows, n_cols = m.n_rows, m.n_cols
    diag = []
    t = 0
    while t < min(n_rows, n_cols):
        # pick the smallest nonzero entry in the trailing block as pivot
        best = None
        for i in range(t, n_rows):
            for j in range(t, n_cols):
                v = a[i][j]
                if v and (best is None or abs(v) < abs(a[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        i, j = best
        a[t], a[i] = a[i], a[t]
        for row in a:
            row[t], row[j] = row[j], row[t]

        while True:
            p = a[t][t]
            done = True
            for i in range(t + 1, n_rows):
                if a[i][t]:
                    f = a[i][t] // p
                    if f:
                        ri, rt = a[i], a[t]
                        for j in range(t, n_cols):
                            ri[j] -= f * rt[j]
                    if a[i][t]:
                        done = False
            for j in range(t + 1, n_cols):
                if a[t][j]:
                    f = a[t][j] // p
                    if f:
                        for row in a:
                            row[j] -= f * row[t]
                    if a[t][j]:
                        done = False
            if done:
                # divisibility: p must divide every trailing entry
                bad = next(
                    ((i, j) for i in range(t + 1, n_rows) for j in range(t + 1, n_cols)
                     if a[i][j] % p),
                    None,
                )
                if bad is None:
                    break
                i, _ = bad
                rt, ri = a[t], a[i]
                for j in range(t, n_cols):
                    rt[j] += ri[j]
                continue
            # a remainder survived; move the smallest nonzero of row/col t to the pivot
            cand = [(abs(a[i][t]), i, t) for i in range(t, n_rows) if a[i][t]]
            cand += [(abs(a[t][j]), t, j) for j in range(t, n_cols) if a[t][j]]
            _, i, j = min(cand)
            if i != t:
                a[t], a[i] = a[i], a[t]
            if j != t:
                for row in a:
                    row[t], row[j] = row[j], row[t]
        diag.append(abs(a[t][t]))
        t += 1
    return SnfResult(tuple(diag))


def torsion_order(m: IntMatrix) -> int:
    """Order of the torsion subgroup of Z^n / (column span of ``m``).

    Equals the gcd of the rank-order minors of ``m``; 1 when the rank is 0.
    """
    return prod(smith_normal_form(m).invariant_factors)


def _det(rows: list[list[int]]) -> int:
    # cofactor expansion along the first row; only used on small minors
    n = len(rows)
    if n == 0:
        return 1
    if n == 1:
        return rows[0][0]
    if n == 2:
        return rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0]
    total = 0
    for j, a in enumerate(rows[0]):
        if a:
            sub = [r[:j] + r[j + 1:] for r in rows[1:]]
            total += (-1) ** j * a * _det(sub)
    return total


def minor_gcd_oracle(m: IntMatrix, cap: int = DEFAULT_MINOR_CAP) -> int:
    """GCD of the absolute values of all rank-order minors, by direct enumeration.

    Independent check for :func:`torsion_order`. Raises ``CapExceededError``
    when the number of minors exceeds ``cap``.
    """
    r = rank(m)
    if r == 0:
        return 1
    count = comb(m.n_rows, r) * comb(m.n_cols, r)
    if count > cap:
        raise CapExceededError("rank-order minors", count, cap)
    a = m.rows()
    minors = (
        _det([[a[i][j] for j in cols] for i in rows])
        for rows in combinations(range(m.n_rows), r)
        for cols in combinations(range(m.n_cols), r)
    )
    return reduce(gcd, minors, 0)
