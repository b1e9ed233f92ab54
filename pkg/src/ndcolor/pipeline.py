"""End-to-end exact colouring through the type graph and the covering ILP."""
from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Sequence

from .graph import Graph, low_bit
from .ilp import CoveringIlp, IlpSolution, build_coloring_ilp, solve_covering_ilp
from .mis import MisFamily, dominates, enumerate_mis, induces
from .nd import (NdDecomposition, TypeGraph, build_type_graph, compute_nd_decomposition,
                 type_graph_decomposition)


class ContractViolation(ValueError):
    """Inputs that break an operation's precondition."""


@dataclass(frozen=True)
class Coloring:
    """``colors[v]`` in ``1..num_colors`` for every vertex ``v``."""

    colors: tuple[int, ...]
    num_colors: int

    def classes(self) -> list[list[int]]:
        out: list[list[int]] = [[] for _ in range(self.num_colors)]
        for v, c in enumerate(self.colors):
            out[c - 1].append(v)
        return out


class ColoringCheck(NamedTuple):
    ok: bool
    bad_edge: tuple[int, int] | None = None
    unused_color: int | None = None

    def __bool__(self) -> bool:
        return self.ok


@dataclass(frozen=True)
class PipelineResult:
    decomposition: NdDecomposition
    type_graph: TypeGraph
    family: MisFamily
    ilp: CoveringIlp
    solution: IlpSolution
    coloring: Coloring

    @property
    def chi(self) -> int:
        return self.coloring.num_colors


def _demands(dec: NdDecomposition) -> list[int]:
    return [len(c) if dec.is_clique(i) else 1 for i, c in enumerate(dec.classes)]


def reconstruct_coloring(g: Graph | None, dec: NdDecomposition, fam: MisFamily,
                         sol: IlpSolution | Sequence[int]) -> Coloring:
    """Turn an ILP solution into a canonical colouring.

    For each ``I`` (in family order) and each of its ``x_I`` repetitions, the
    classes of ``I`` with remaining demand each give one vertex (clique) or
    all their vertices (independent set) to a fresh colour.  Repetitions that
    find no remaining demand are skipped without using a colour.  ``g`` is only
    used to check sizes and may be None when the graph is implicit.
    """
    x = list(sol.x if isinstance(sol, IlpSolution) else sol)
    if g is not None and g.n != dec.n:
        raise ContractViolation(f"decomposition covers {dec.n} vertices, graph has {g.n}")
    if len(x) != len(fam):
        raise ContractViolation(f"solution has {len(x)} entries, family has {len(fam)} sets")
    p = CoveringIlp(dec.k, fam.sets, tuple(_demands(dec)))
    if not p.is_feasible(x):
        raise ContractViolation("solution does not satisfy the covering constraints")

    residual = _demands(dec)
    cursor = [0] * dec.k  # next uncoloured vertex of each clique class
    colors = [0] * dec.n
    chi = 0
    for mis, reps in zip(fam.sets, x):
        for _ in range(reps):
            active = [i for i in mis if residual[i] >= 1]
            if not active:
                continue
            chi += 1
            for i in active:
                cls = dec.classes[i]
                if dec.is_clique(i):
                    colors[cls[cursor[i]]] = chi
                    cursor[i] += 1
                    residual[i] -= 1
                else:
                    for v in cls:
                        colors[v] = chi
                    residual[i] = 0
    return Coloring(tuple(colors), chi)


def verify_coloring(g: Graph, c: Coloring) -> ColoringCheck:
    if len(c.colors) != g.n:
        raise ValueError(f"coloring has {len(c.colors)} entries for {g.n} vertices")
    for v, col in enumerate(c.colors):
        if not 1 <= col <= c.num_colors:
            raise ValueError(f"vertex {v + 1} has no color in 1..{c.num_colors}")
    masks = [0] * (c.num_colors + 1)
    for v, col in enumerate(c.colors):
        masks[col] |= 1 << v
    for v, col in enumerate(c.colors):
        clash = g.adj[v] & masks[col]
        if clash:
            return ColoringCheck(False, bad_edge=tuple(sorted((v, low_bit(clash)))))
    used = set(c.colors)
    for col in range(1, c.num_colors + 1):
        if col not in used:
            return ColoringCheck(False, unused_color=col)
    return ColoringCheck(True)


def verify_coloring_on_type_graph(t: TypeGraph, dec: NdDecomposition, c: Coloring) -> ColoringCheck:
    """:func:`verify_coloring` for the implicit blow-up of ``t``, edge-free.

    A clique class needs distinct colours, and joined classes disjoint colour
    sets; a witness edge is rebuilt from the clashing pair.
    """
    if len(c.colors) != dec.n:
        raise ValueError(f"coloring has {len(c.colors)} entries for {dec.n} vertices")
    first: list[dict[int, int]] = []
    for i, cls in enumerate(dec.classes):
        seen: dict[int, int] = {}
        for v in cls:
            col = c.colors[v]
            if not 1 <= col <= c.num_colors:
                raise ValueError(f"vertex {v + 1} has no color in 1..{c.num_colors}")
            if col in seen and t.loops[i]:
                return ColoringCheck(False, bad_edge=(seen[col], v))
            seen.setdefault(col, v)
        first.append(seen)
    for i, j in sorted(t.edges):
        small, big = sorted((first[i], first[j]), key=len)
        for col, v in small.items():
            if col in big:
                return ColoringCheck(False, bad_edge=tuple(sorted((v, big[col]))))
    used = set(c.colors)
    for col in range(1, c.num_colors + 1):
        if col not in used:
            return ColoringCheck(False, unused_color=col)
    return ColoringCheck(True)


def check_canonical(dec: NdDecomposition, c: Coloring) -> str | None:
    """Return a description of the first canonicity violation, or None."""
    for i, cls in enumerate(dec.classes):
        cols = [c.colors[v] for v in cls]
        if dec.is_clique(i) and len(set(cols)) != len(cols):
            return f"a color meets clique class {i + 1} more than once"
        if not dec.is_clique(i) and len(set(cols)) != 1:
            return f"independent class {i + 1} is not monochromatic"
    return None


def canonical_solution_from_coloring(g: Graph | None, dec: NdDecomposition, fam: MisFamily,
                                     c: Coloring) -> list[int]:
    """Converse direction: count each colour class against a dominating MIS.

    The colour class ``J`` induces the set of type vertices it touches; the
    lexicographically first family member containing that set is charged.
    """
    problem = check_canonical(dec, c)
    if problem:
        raise ContractViolation(f"coloring is not canonical: {problem}")
    owner = dec.class_of
    touched: list[set[int]] = [set() for _ in range(c.num_colors)]
    for v, col in enumerate(c.colors):
        touched[col - 1].add(owner[v])
    x = [0] * len(fam)
    for col, classes in enumerate(touched, start=1):
        i_prime = induces(classes)
        for j, mis in enumerate(fam.sets):
            if dominates(mis, i_prime):
                x[j] += 1
                break
        else:
            raise ContractViolation(f"color {col} touches classes that are not independent in T(G)")
    return x


def color_with_decomposition(t: TypeGraph, dec: NdDecomposition, budget: int | None = None,
                             g: Graph | None = None) -> PipelineResult:
    fam = enumerate_mis(t)
    p = build_coloring_ilp(t, fam)
    sol = solve_covering_ilp(p, budget)
    coloring = reconstruct_coloring(g, dec, fam, sol)
    return PipelineResult(dec, t, fam, p, sol, coloring)


def color_graph(g: Graph, budget: int | None = None) -> PipelineResult:
    dec = compute_nd_decomposition(g)
    t = build_type_graph(g, dec)
    return color_with_decomposition(t, dec, budget, g)


def color_type_graph(t: TypeGraph, budget: int | None = None) -> PipelineResult:
    """Colour the blow-up of ``t`` given only ``t`` (vertices numbered class by class)."""
    return color_with_decomposition(t, type_graph_decomposition(t), budget)


def chromatic_number(g: Graph, budget: int | None = None) -> tuple[int, Coloring]:
    res = color_graph(g, budget)
    return res.chi, res.coloring


# -- text format ----------------------------------------------------------

def write_coloring(c: Coloring) -> str:
    lines = [f"s {c.num_colors}"]
    lines.extend(f"v {v + 1} {col}" for v, col in enumerate(c.colors))
    return "\n".join(lines) + "\n"


def parse_coloring(text: str) -> Coloring:
    chi = None
    assigned: dict[int, int] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        parts = raw.split()
        if not parts or parts[0] == "c":
            continue
        try:
            nums = [int(p) for p in parts[1:]]
        except ValueError:
            raise ValueError(f"line {lineno}: non-integer field") from None
        if parts[0] == "s" and len(nums) == 1 and chi is None:
            chi = nums[0]
        elif parts[0] == "v" and len(nums) == 2:
            if nums[0] in assigned:
                raise ValueError(f"line {lineno}: vertex {nums[0]} colored twice")
            assigned[nums[0]] = nums[1]
        else:
            raise ValueError(f"line {lineno}: expected 's <chi>' once or 'v <vertex> <color>'")
    if chi is None:
        raise ValueError("missing 's <chi>' line")
    n = len(assigned)
    if sorted(assigned) != list(range(1, n + 1)):
        missing = next(v for v in range(1, n + 2) if v not in assigned)
        raise ValueError(f"vertex {missing} has no color")
    return Coloring(tuple(assigned[v] for v in range(1, n + 1)), chi)
