"""The covering integer program behind colouring by type graph, and its solver.

One variable per maximal independent set ``I`` of the type graph counts the
colours whose classes live inside ``I``.  Row ``i`` demands ``|P_i|`` such
colours for a clique class and one for an independent class.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .lp import EQ, GE, LE, LpResult, solve_lp
from .mis import MisFamily
from .nd import TypeGraph

DEFAULT_BUDGET = 200_000


class BudgetExceeded(RuntimeError):
    """The branch-and-bound node budget ran out before optimality was proven."""


class IlpFormatError(ValueError):
    pass


@dataclass(frozen=True)
class CoveringIlp:
    """``min sum(x)`` s.t. ``sum(x_j : i in columns[j]) >= rhs[i]``, ``x`` integral >= 0."""

    rows: int
    columns: tuple[tuple[int, ...], ...]
    rhs: tuple[int, ...]

    def __post_init__(self):
        if len(self.rhs) != self.rows:
            raise ValueError("one right-hand side per row")
        for j, col in enumerate(self.columns):
            if any(not 0 <= i < self.rows for i in col):
                raise ValueError(f"column {j + 1} references a row outside 1..{self.rows}")

    @property
    def d(self) -> int:
        return len(self.columns)

    def matrix(self) -> list[list[int]]:
        a = [[0] * self.d for _ in range(self.rows)]
        for j, col in enumerate(self.columns):
            for i in col:
                a[i][j] = 1
        return a

    def coverage(self, x: Sequence[int]) -> list[int]:
        cov = [0] * self.rows
        for xj, col in zip(x, self.columns):
            if xj:
                for i in col:
                    cov[i] += xj
        return cov

    def is_feasible(self, x: Sequence[int]) -> bool:
        return len(x) == self.d and all(v >= 0 for v in x) and \
            all(c >= b for c, b in zip(self.coverage(x), self.rhs))

    def with_rhs(self, rhs: Sequence[int]) -> CoveringIlp:
        return CoveringIlp(self.rows, self.columns, tuple(rhs))


@dataclass(frozen=True)
class EqualityIlp:
    """``min cost.x`` s.t. ``matrix x == rhs``, ``x >= 0`` integral."""

    matrix: tuple[tuple[int, ...], ...]
    rhs: tuple[int, ...]
    cost: tuple[int, ...]


@dataclass(frozen=True)
class IlpSolution:
    x: tuple[int, ...]
    objective_value: int
    lower_bound: int
    lp_value: Fraction
    duals: tuple[Fraction, ...] = field(repr=False)
    certificate: str  # "lp": ceil(LP) matches; "search": exhausted branch and bound
    nodes: int = 0

    @property
    def is_proven_optimal(self) -> bool:
        return self.lower_bound == self.objective_value


def build_coloring_ilp(t: TypeGraph, fam: MisFamily) -> CoveringIlp:
    for s in fam.sets:
        if any(not 0 <= i < t.k for i in s):
            raise ValueError(f"family set {[i + 1 for i in s]} references an index outside 1..{t.k}")
    rhs = tuple(t.weights[i] if t.loops[i] else 1 for i in range(t.k))
    return CoveringIlp(t.k, fam.sets, rhs)


def to_equality_form(p: CoveringIlp) -> EqualityIlp:
    """Append one surplus column per row: ``A x - s = b``, ``s >= 0``, zero cost."""
    a = p.matrix()
    rows = tuple(tuple(a[i]) + tuple(-1 if r == i else 0 for r in range(p.rows))
                 for i in range(p.rows))
    return EqualityIlp(rows, p.rhs, (1,) * p.d + (0,) * p.rows)


def lp_relaxation(p: CoveringIlp) -> LpResult:
    return solve_lp(p.matrix(), [GE] * p.rows, p.rhs, [1] * p.d)


def greedy_cover(p: CoveringIlp) -> list[int]:
    """Multi-cover greedy: take the column hitting the most unmet rows, in bulk."""
    residual = list(p.rhs)
    x = [0] * p.d
    while any(r > 0 for r in residual):
        best, key = -1, None
        for j, col in enumerate(p.columns):
            hit = [residual[i] for i in col if residual[i] > 0]
            cand = (len(hit), sum(hit))
            if hit and (key is None or cand > key):
                best, key = j, cand
        if best < 0:
            raise ValueError("covering instance is infeasible")
        take = min(residual[i] for i in p.columns[best] if residual[i] > 0)
        x[best] += take
        for i in p.columns[best]:
            residual[i] = max(0, residual[i] - take)
    return x


def _ceil(q: Fraction) -> int:
    return -((-q.numerator) // q.denominator)


class _Search:
    """Depth-first branch and bound on ``min cost.x`` over rows with senses."""

    def __init__(self, matrix, senses, rhs, cost, budget: int):
        self.matrix = [list(r) for r in matrix]
        self.senses = list(senses)
        self.rhs = list(rhs)
        self.cost = list(cost)
        self.budget = budget
        self.nodes = 0

    def run(self, incumbent: list[int] | None, incumbent_value: int | float) -> tuple[list[int] | None, int | float]:
        n = len(self.cost)
        stack: list[tuple[tuple[int, str, int], ...]] = [()]
        best, best_value = incumbent, incumbent_value
        while stack:
            bounds = stack.pop()
            self.nodes += 1
            if self.nodes > self.budget:
                raise BudgetExceeded(f"branch and bound exceeded {self.budget} nodes")
            rows = self.matrix + [[1 if c == j else 0 for c in range(n)] for j, _, _ in bounds]
            lp = solve_lp(rows, self.senses + [s for _, s, _ in bounds],
                          self.rhs + [b for _, _, b in bounds], self.cost)
            if lp.status != "optimal":
                continue
            if _ceil(lp.value) >= best_value:
                continue
            frac = [(abs(xj - math.floor(xj) - Fraction(1, 2)), j)
                    for j, xj in enumerate(lp.x) if xj.denominator != 1]
            if not frac:
                best, best_value = [int(xj) for xj in lp.x], int(lp.value)
                continue
            _, j = min(frac)  # most fractional; ties to the lowest index
            v = lp.x[j]
            # pushed last, popped first: the rounded-up branch
            stack.append(bounds + ((j, LE, math.floor(v)),))
            stack.append(bounds + ((j, GE, math.ceil(v)),))
        return best, best_value


def _solve_residual(p: CoveringIlp, budget: int) -> tuple[list[int], int]:
    if not any(p.rhs):
        return [0] * p.d, 0
    greedy = greedy_cover(p)
    search = _Search(p.matrix(), [GE] * p.rows, p.rhs, [1] * p.d, budget)
    x, _ = search.run(greedy, sum(greedy))
    return x, search.nodes


def solve_covering_ilp(p: CoveringIlp, budget: int | None = None) -> IlpSolution:
    """Exact optimum of a 0/1 covering program with all-ones objective.

    The root LP optimum is floored into a base assignment, the small residual
    demand is solved by branch and bound, and the result is certified by
    ``ceil(LP)``.  When that bound is not tight the full instance is searched
    with the combined answer as incumbent.  Raises :class:`BudgetExceeded`
    rather than returning an unproven answer.
    """
    budget = DEFAULT_BUDGET if budget is None else budget
    if p.rows and any(not any(i in col for col in p.columns) for i in range(p.rows) if p.rhs[i] > 0):
        raise ValueError("covering instance is infeasible: a demanded row has no column")
    root = lp_relaxation(p)
    if root.status != "optimal":
        raise ValueError(f"root LP {root.status}")
    # dual certificate: y >= 0 with y(I) <= 1 for every column gives b.y <= OPT
    y = root.duals
    assert all(v >= 0 for v in y) and sum(b * v for b, v in zip(p.rhs, y)) == root.value
    assert all(sum(y[i] for i in col) <= 1 for col in p.columns)
    lower = _ceil(root.value)

    base = [math.floor(v) for v in root.x]
    residual = [max(0, b - c) for b, c in zip(p.rhs, p.coverage(base))]
    res_x, nodes = _solve_residual(p.with_rhs(residual), budget)
    x = [a + b for a, b in zip(base, res_x)]
    greedy = greedy_cover(p)
    if sum(greedy) < sum(x):
        x = greedy

    certificate = "lp"
    if sum(x) > lower:
        search = _Search(p.matrix(), [GE] * p.rows, p.rhs, [1] * p.d, budget - nodes)
        found, _ = search.run(x, sum(x))
        x = found
        nodes += search.nodes
        lower = sum(x)
        certificate = "search"
    return IlpSolution(tuple(x), sum(x), lower, root.value, y, certificate, nodes)


def solve_equality_form(e: EqualityIlp, budget: int | None = None) -> tuple[list[int], int]:
    """Plain branch and bound on an equality-form instance (no saturation)."""
    budget = DEFAULT_BUDGET if budget is None else budget
    search = _Search(e.matrix, [EQ] * len(e.rhs), e.rhs, e.cost, budget)
    x, value = search.run(None, math.inf)
    if x is None:
        raise ValueError("equality-form instance is infeasible")
    return x, int(value)


# -- text dump ------------------------------------------------------------

def write_ilp_dump(p: CoveringIlp) -> str:
    lines = [f"ilp {p.rows} {p.d}"]
    for i in range(p.rows):
        cols = [j + 1 for j, col in enumerate(p.columns) if i in col]
        lines.append(f"row {i + 1} >= {p.rhs[i]} : " + " ".join(map(str, cols)))
    return "\n".join(line.rstrip() for line in lines) + "\n"


def parse_ilp_dump(text: str) -> CoveringIlp:
    lines = [ln.split() for ln in text.splitlines() if ln.strip() and not ln.startswith("c ")]
    if not lines or lines[0][0] != "ilp" or len(lines[0]) != 3:
        raise IlpFormatError("expected 'ilp <r> <d>' header")
    r, d = int(lines[0][1]), int(lines[0][2])
    if len(lines) - 1 != r:
        raise IlpFormatError(f"header declares {r} rows, found {len(lines) - 1}")
    rhs = [0] * r
    members: list[list[int]] = [[] for _ in range(d)]
    seen = set()
    for parts in lines[1:]:
        if len(parts) < 5 or parts[0] != "row" or parts[2] != ">=" or parts[4] != ":":
            raise IlpFormatError(f"bad row line: {' '.join(parts)}")
        i = int(parts[1]) - 1
        if not 0 <= i < r or i in seen:
            raise IlpFormatError(f"row index {i + 1} out of range or repeated")
        seen.add(i)
        rhs[i] = int(parts[3])
        for c in parts[5:]:
            j = int(c) - 1
            if not 0 <= j < d:
                raise IlpFormatError(f"column {j + 1} out of range 1..{d}")
            members[j].append(i)
    return CoveringIlp(r, tuple(tuple(sorted(m)) for m in members), tuple(rhs))
