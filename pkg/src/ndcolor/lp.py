"""Exact two-phase simplex over ``fractions.Fraction``.

Small dense tableau solver for ``min c.x  s.t.  rows (<=, >=, ==),  x >= 0``.
All pivoting decisions are made on exact rationals.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

LE, GE, EQ = "<=", ">=", "=="

# consecutive degenerate pivots tolerated before switching to Bland's rule
_DEGENERATE_LIMIT = 25


@dataclass(frozen=True)
class LpResult:
    status: str  # "optimal" | "infeasible" | "unbounded"
    value: Fraction | None = None
    x: tuple[Fraction, ...] = ()
    duals: tuple[Fraction, ...] = ()


class _Tableau:
    def __init__(self, rows: list[list[Fraction]], basis: list[int], ncols: int):
        self.rows = rows  # each row: ncols coefficients followed by the rhs
        self.basis = basis
        self.ncols = ncols
        self._z: list[Fraction] = []  # objective row left by the last optimise()

    def pivot(self, r: int, c: int) -> None:
        prow = self.rows[r]
        inv = 1 / prow[c]
        prow[:] = [a * inv for a in prow]
        nz = [j for j, a in enumerate(prow) if a]
        for i, row in enumerate(self.rows):
            if i != r and row[c]:
                f = row[c]
                for j in nz:
                    row[j] -= f * prow[j]
        self.basis[r] = c

    def objective_row(self, cost: Sequence[Fraction]) -> list[Fraction]:
        z = [Fraction(-c) for c in cost] + [Fraction(0)]
        for i, b in enumerate(self.basis):
            if cost[b]:
                cb = cost[b]
                z = [zj + cb * a for zj, a in zip(z, self.rows[i])]
        return z  # z[j] = c_B B^-1 a_j - c_j; last entry is the objective value

    def optimise(self, cost: Sequence[Fraction], allowed: Sequence[bool]) -> str:
        z = self.objective_row(cost)
        self.rows.append(z)
        zi = len(self.rows) - 1
        degenerate = 0
        try:
            while True:
                bland = degenerate > _DEGENERATE_LIMIT
                enter, best = -1, Fraction(0)
                for j in range(self.ncols):
                    if allowed[j] and z[j] > 0:
                        if bland:
                            enter = j
                            break
                        if z[j] > best:
                            enter, best = j, z[j]
                if enter < 0:
                    return "optimal"
                leave, ratio = -1, None
                for i in range(zi):
                    a = self.rows[i][enter]
                    if a > 0:
                        q = self.rows[i][-1] / a
                        if ratio is None or q < ratio or (q == ratio and self.basis[i] < self.basis[leave]):
                            leave, ratio = i, q
                if leave < 0:
                    return "unbounded"
                degenerate = degenerate + 1 if ratio == 0 else 0
                self.pivot(leave, enter)
        finally:
            self.rows.pop()
            self._z = z


def solve_lp(matrix: Sequence[Sequence[int | Fraction]], senses: Sequence[str],
             rhs: Sequence[int | Fraction], cost: Sequence[int | Fraction]) -> LpResult:
    """Minimise ``cost . x`` subject to ``matrix[i] . x  senses[i]  rhs[i]``, ``x >= 0``.

    On optimality ``duals`` holds ``y`` with ``y . rhs == value`` and
    ``y^T matrix <= cost``; for a ``>=`` row ``y_i >= 0``.
    """
    m, n = len(matrix), len(cost)
    flip = [rhs[i] < 0 for i in range(m)]
    sense = [s if not f else {LE: GE, GE: LE, EQ: EQ}[s] for s, f in zip(senses, flip)]

    # column layout: structural | one slack/surplus per inequality | artificials
    extra: list[tuple[int, int]] = []  # (row, coefficient)
    ident = [0] * m  # column holding the initial identity entry of each row
    artificial: list[int] = []
    for i, s in enumerate(sense):
        if s == LE:
            ident[i] = n + len(extra)
            extra.append((i, 1))
        elif s == GE:
            extra.append((i, -1))
    base = n + len(extra)
    for i, s in enumerate(sense):
        if s != LE:
            ident[i] = base + len(artificial)
            artificial.append(i)
    ncols = base + len(artificial)

    rows = []
    for i in range(m):
        sign = -1 if flip[i] else 1
        row = [Fraction(sign * a) for a in matrix[i]] + [Fraction(0)] * (ncols - n)
        row.append(Fraction(sign * rhs[i]))
        rows.append(row)
    for c, (i, coef) in enumerate(extra):
        rows[i][n + c] = Fraction(coef)
    for i in range(m):
        rows[i][ident[i]] = Fraction(1)

    tab = _Tableau(rows, list(ident), ncols)
    allow_all = [True] * ncols
    if artificial:
        phase1 = [Fraction(0)] * base + [Fraction(1)] * len(artificial)
        tab.optimise(phase1, allow_all)
        if tab._z[-1] > 0:
            return LpResult("infeasible")
        # drive zero-level artificials out of the basis where possible
        for i, b in enumerate(tab.basis):
            if b >= base:
                for j in range(base):
                    if rows[i][j]:
                        tab.pivot(i, j)
                        break
    c2 = [Fraction(c) for c in cost] + [Fraction(0)] * (ncols - n)
    allowed = [j < base for j in range(ncols)]
    if tab.optimise(c2, allowed) == "unbounded":
        return LpResult("unbounded")

    x = [Fraction(0)] * n
    for i, b in enumerate(tab.basis):
        if b < n:
            x[b] = rows[i][-1]
    # y_i = c_B B^-1 e_i, where B^-1 e_i is the current column of row i's identity slot
    duals = []
    for i in range(m):
        y = sum((c2[b] * rows[r][ident[i]] for r, b in enumerate(tab.basis)), Fraction(0))
        duals.append(-y if flip[i] else y)
    value = sum((Fraction(c) * xi for c, xi in zip(cost, x)), Fraction(0))
    return LpResult("optimal", value, tuple(x), tuple(duals))
