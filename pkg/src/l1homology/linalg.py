"""Exact Gaussian elimination over the rationals.

Matrices are lists of rows of :class:`fractions.Fraction`. Everything here is
small-scale and dense; the complexes we care about have at most a few hundred
simplices per degree.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Sequence

Matrix = list[list[Fraction]]


def to_fraction_matrix(rows: Sequence[Sequence]) -> Matrix:
    return [[Fraction(x) for x in row] for row in rows]


def rref(rows: Sequence[Sequence], ncols: int | None = None) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form and the list of pivot columns."""
    m = to_fraction_matrix(rows)
    if ncols is None:
        ncols = len(m[0]) if m else 0
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r == len(m):
            break
        p = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        prow = m[r]
        nz = [j for j in range(c, ncols) if prow[j] != 0]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                row = m[i]
                for j in nz:
                    row[j] -= f * prow[j]
        pivots.append(c)
        r += 1
    return m[:r], pivots


def rank(rows: Sequence[Sequence], ncols: int | None = None) -> int:
    return len(rref(rows, ncols)[1])


def nullspace(rows: Sequence[Sequence], ncols: int) -> Matrix:
    """Basis of {x : A x = 0}, one vector per free column."""
    red, pivots = rref(rows, ncols)
    free = [c for c in range(ncols) if c not in set(pivots)]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for row, p in zip(red, pivots):
            v[p] = -row[f]
        basis.append(v)
    return basis


def solve(rows: Sequence[Sequence], rhs: Sequence, ncols: int) -> list[Fraction] | None:
    """One solution of A x = rhs (free variables set to zero), or None."""
    aug = [list(row) + [rhs[i]] for i, row in enumerate(rows)]
    red, pivots = rref(aug, ncols + 1)
    if pivots and pivots[-1] == ncols:
        return None
    x = [Fraction(0)] * ncols
    for row, p in zip(red, pivots):
        x[p] = row[ncols]
    return x


class EchelonBasis:
    """Incrementally maintained echelon basis of a subspace of Q^n.

    ``reduce`` returns the residual of a vector modulo the current span;
    ``add`` inserts a vector and reports whether it enlarged the span.
    """

    def __init__(self, n: int):
        self.n = n
        self._rows: dict[int, list[Fraction]] = {}  # pivot column -> row with 1 there

    def __len__(self) -> int:
        return len(self._rows)

    def reduce(self, vec: Sequence) -> list[Fraction]:
        v = [Fraction(x) for x in vec]
        for c in sorted(self._rows):
            if v[c] != 0:
                f = v[c]
                row = self._rows[c]
                for j in range(c, self.n):
                    if row[j] != 0:
                        v[j] -= f * row[j]
        return v

    def add(self, vec: Sequence) -> bool:
        v = self.reduce(vec)
        c = next((j for j in range(self.n) if v[j] != 0), None)
        if c is None:
            return False
        inv = 1 / v[c]
        v = [x * inv for x in v]
        for row in self._rows.values():
            if row[c] != 0:
                f = row[c]
                for j in range(c, self.n):
                    if v[j] != 0:
                        row[j] -= f * v[j]
        self._rows[c] = v
        return True
