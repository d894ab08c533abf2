"""Exact primal simplex over the rationals.

Standard form only: minimize ``c·x`` subject to ``A x = b`` and ``x >= 0``.
Pivoting follows Bland's smallest-index rule, so the method terminates and
is deterministic. The tableau is stored row-sparse because the programs
built from boundary matrices are very sparse.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Sequence

from .errors import MalformedProgram

ZERO = Fraction(0)


class Status(enum.Enum):
    OPTIMAL = "Optimal"
    INFEASIBLE = "Infeasible"
    UNBOUNDED = "Unbounded"


@dataclass(frozen=True)
class LinearProgram:
    """``min c·x  s.t.  A x = b, x >= 0`` with A given as sparse rows ``{column: value}``."""

    c: tuple[Fraction, ...]
    rows: tuple[dict[int, Fraction], ...]
    b: tuple[Fraction, ...]

    def __init__(self, c: Sequence, A: Sequence[Mapping[int, object] | Sequence], b: Sequence):
        c = tuple(Fraction(x) for x in c)
        if len(A) != len(b):
            raise MalformedProgram(f"{len(A)} constraint rows but {len(b)} right-hand sides")
        rows = []
        for i, row in enumerate(A):
            if isinstance(row, Mapping):
                items = row.items()
            else:
                if len(row) != len(c):
                    raise MalformedProgram(f"row {i} has {len(row)} entries, expected {len(c)}")
                items = enumerate(row)
            sparse = {}
            for j, v in items:
                if not 0 <= j < len(c):
                    raise MalformedProgram(f"row {i} references column {j} of {len(c)}")
                v = Fraction(v)
                if v:
                    sparse[j] = v
            rows.append(dict(sorted(sparse.items())))
        object.__setattr__(self, "c", c)
        object.__setattr__(self, "rows", tuple(rows))
        object.__setattr__(self, "b", tuple(Fraction(x) for x in b))

    @property
    def n_vars(self) -> int:
        return len(self.c)

    @property
    def n_rows(self) -> int:
        return len(self.rows)

    def residual(self, x: Sequence[Fraction]) -> list[Fraction]:
        return [sum((v * x[j] for j, v in row.items()), ZERO) - bi for row, bi in zip(self.rows, self.b)]

    def dual_slack(self, y: Sequence[Fraction]) -> list[Fraction]:
        """``c - A^T y``; dual feasibility means every entry is >= 0."""
        s = list(self.c)
        for row, yi in zip(self.rows, y):
            if yi:
                for j, v in row.items():
                    s[j] -= v * yi
        return s


@dataclass(frozen=True)
class LPSolution:
    status: Status
    value: Fraction | None = None
    primal: tuple[Fraction, ...] = ()
    dual: tuple[Fraction, ...] = ()
    pivots: int = field(default=0, compare=False)


def _fmt(q: Fraction) -> str:
    return f"{q.numerator}/{q.denominator}"


def dump_lp(lp: LinearProgram) -> str:
    """Plain-text dump used by the CLI's ``--dump-lp`` flag."""
    lines = ["min", "c: " + " ".join(_fmt(x) for x in lp.c)]
    for row, bi in zip(lp.rows, lp.b):
        dense = [row.get(j, ZERO) for j in range(lp.n_vars)]
        lines.append("A|b: " + " ".join(_fmt(x) for x in dense) + " | " + _fmt(bi))
    return "\n".join(lines) + "\n"


class _Tableau:
    def __init__(self, rows, rhs, basis):
        self.rows = rows
        self.rhs = rhs
        self.basis = basis
        self.pivots = 0

    def reduced_costs(self, cost: Mapping[int, Fraction]) -> dict[int, Fraction]:
        rc = dict(cost)
        for row, bj in zip(self.rows, self.basis):
            cb = cost.get(bj, ZERO)
            if cb:
                for j, v in row.items():
                    rc[j] = rc.get(j, ZERO) - cb * v
        return {j: v for j, v in rc.items() if v}

    def pivot(self, r: int, j: int, rc: dict[int, Fraction]) -> None:
        prow = self.rows[r]
        inv = 1 / prow[j]
        prow = {k: v * inv for k, v in prow.items()}
        self.rows[r] = prow
        self.rhs[r] *= inv
        for i, row in enumerate(self.rows):
            if i != r and j in row:
                f = row[j]
                self._eliminate(row, prow, f)
                self.rhs[i] -= f * self.rhs[r]
        self.pivots += 1
        if j in rc:
            self._eliminate(rc, prow, rc[j])
        self.basis[r] = j

    @staticmethod
    def _eliminate(row: dict, prow: dict, f: Fraction) -> None:
        for k, v in prow.items():
            nv = row.get(k, ZERO) - f * v
            if nv:
                row[k] = nv
            else:
                row.pop(k, None)

    def run(self, rc: dict[int, Fraction], allowed) -> str:
        while True:
            entering = min((j for j, v in rc.items() if v < 0 and allowed(j)), default=None)
            if entering is None:
                return "optimal"
            best = None
            for i, row in enumerate(self.rows):
                a = row.get(entering)
                if a is not None and a > 0:
                    key = (self.rhs[i] / a, self.basis[i])
                    if best is None or key < best[0]:
                        best = (key, i)
            if best is None:
                return "unbounded"
            self.pivot(best[1], entering, rc)


def solve(lp: LinearProgram) -> LPSolution:
    """Two-phase simplex. On optimality the returned dual satisfies ``b·y = c·x``."""
    m, n = lp.n_rows, lp.n_vars
    flip = [-1 if bi < 0 else 1 for bi in lp.b]
    rows = [{j: flip[i] * v for j, v in row.items()} for i, row in enumerate(lp.rows)]
    rhs = [flip[i] * bi for i, bi in enumerate(lp.b)]

    # start from columns that already equal a unit vector; patch the rest with artificials
    col_rows: dict[int, list[tuple[int, Fraction]]] = {}
    for i, row in enumerate(rows):
        for j, v in row.items():
            col_rows.setdefault(j, []).append((i, v))
    init: list[int | None] = [None] * m
    for j in sorted(col_rows):
        entries = col_rows[j]
        if len(entries) == 1 and entries[0][1] == 1 and init[entries[0][0]] is None:
            init[entries[0][0]] = j
    n_art = 0
    for i in range(m):
        if init[i] is None:
            init[i] = n + n_art
            rows[i][n + n_art] = Fraction(1)
            n_art += 1
    tab = _Tableau(rows, rhs, list(init))

    def is_art(j):
        return j >= n

    if n_art:
        rc = tab.reduced_costs({j: Fraction(1) for j in range(n, n + n_art)})
        tab.run(rc, lambda j: True)
        if sum((tab.rhs[i] for i in range(m) if is_art(tab.basis[i])), ZERO) > 0:
            return LPSolution(Status.INFEASIBLE, pivots=tab.pivots)
        for i in range(m):
            if is_art(tab.basis[i]):
                j = min((k for k in tab.rows[i] if not is_art(k)), default=None)
                if j is not None:
                    tab.pivot(i, j, {})

    cost = {j: v for j, v in enumerate(lp.c) if v}
    rc = tab.reduced_costs(cost)
    if tab.run(rc, lambda j: not is_art(j)) == "unbounded":
        return LPSolution(Status.UNBOUNDED, pivots=tab.pivots)

    x = [ZERO] * n
    for i, j in enumerate(tab.basis):
        if not is_art(j):
            x[j] = tab.rhs[i]
    # the column of init[i] started as e_i, so its reduced cost is c_j - y_i
    y = [flip[i] * (cost.get(j, ZERO) - rc.get(j, ZERO)) for i, j in enumerate(init)]
    value = sum((cj * xj for cj, xj in zip(lp.c, x)), ZERO)
    return LPSolution(Status.OPTIMAL, value, tuple(x), tuple(y), tab.pivots)
