"""Membership in the (4K1, C4, C6)-free graphs with an induced C7, and the
structural bounds such graphs are known to satisfy."""
from __future__ import annotations

from dataclasses import dataclass, field

from .graph import Graph, PatternName, contains_induced, is_induced_pattern
from .nd import ClassKind, NdDecomposition, build_type_graph, compute_nd_decomposition

ND_BOUND = 13
UNIFORM_RANGE = (7, 13)


class NotInClass(ValueError):
    pass


@dataclass(frozen=True)
class ClassReport:
    is_4k1_free: bool
    is_c4_free: bool
    is_c6_free: bool
    has_c7: bool
    witnesses: dict[PatternName, list[int]] = field(default_factory=dict)

    @property
    def in_class(self) -> bool:
        return self.is_4k1_free and self.is_c4_free and self.is_c6_free and self.has_c7


@dataclass(frozen=True)
class StructureVerdict:
    nd: int
    nd_ok: bool
    uniform_k: int  # size of the k-uniform partition found
    uniform_ok: bool
    uniform_classes: tuple[tuple[int, ...], ...] = ()

    @property
    def ok(self) -> bool:
        return self.nd_ok and self.uniform_ok


def pattern_core(dec: NdDecomposition, cap: int) -> list[int]:
    """At most ``cap`` vertices from every class, as an induced-subgraph vertex set.

    Twins are interchangeable and an induced pattern on ``cap`` vertices uses
    at most ``cap`` from any class, so ``g`` contains the pattern iff the core does.
    """
    return sorted(v for cls in dec.classes for v in cls[:cap])


def core_cap(p: PatternName) -> int:
    """Vertices an induced copy of ``p`` can take from one twin class.

    Adjacent twins on an induced cycle of length >= 4 would force a chord, and
    non-adjacent ones share both cycle neighbours, which only C4 allows.
    """
    return 2 if p.is_cycle else p.order


def check_class(g: Graph, dec: NdDecomposition | None = None) -> ClassReport:
    dec = dec or compute_nd_decomposition(g)
    cores: dict[int, tuple[list[int], Graph]] = {}
    witnesses = {}
    for p in PatternName:
        cap = core_cap(p)
        if cap not in cores:
            core = pattern_core(dec, cap)
            cores[cap] = (core, g.induced(core))
        core, h = cores[cap]
        w = contains_induced(h, p)
        if w is not None:
            witnesses[p] = [core[v] for v in w]
            assert is_induced_pattern(g, witnesses[p], p)
    return ClassReport(
        is_4k1_free=PatternName.FOUR_K1 not in witnesses,
        is_c4_free=PatternName.C4 not in witnesses,
        is_c6_free=PatternName.C6 not in witnesses,
        has_c7=PatternName.C7 in witnesses,
        witnesses=witnesses,
    )


def uniform_partition(g: Graph, dec: NdDecomposition) -> list[tuple[int, ...]]:
    """A partition into cliques with complete-or-empty joins between parts.

    Independent classes are split into singletons, then clique parts that are
    joined to each other and agree on every other part are merged greedily.
    The result is one such partition, not necessarily the smallest.
    """
    parts: list[tuple[int, ...]] = []
    for i, cls in enumerate(dec.classes):
        if dec.kinds[i] is ClassKind.CLIQUE:
            parts.append(cls)
        else:
            parts.extend((v,) for v in cls)
    merged = True
    while merged:
        merged = False
        reps = [p[0] for p in parts]
        for a in range(len(parts)):
            for b in range(a + 1, len(parts)):
                ra, rb = reps[a], reps[b]
                if not g.has_edge(ra, rb):
                    continue
                others = [reps[c] for c in range(len(parts)) if c not in (a, b)]
                if all(g.has_edge(ra, o) == g.has_edge(rb, o) for o in others):
                    parts[a] = tuple(sorted(parts[a] + parts[b]))
                    del parts[b]
                    merged = True
                    break
            if merged:
                break
    return sorted(parts)


def assert_structure_bounds(g: Graph, report: ClassReport, dec: NdDecomposition) -> StructureVerdict:
    """nd(G) <= 13 and a k-uniform partition with 7 <= k <= 13, for in-class graphs."""
    if not report.in_class:
        raise NotInClass("structure bounds only apply to (4K1, C4, C6)-free graphs with a C7")
    parts = uniform_partition(g, dec)
    build_type_graph(g, dec)  # validates dec against g
    lo, hi = UNIFORM_RANGE
    k = len(parts)
    return StructureVerdict(
        nd=dec.k,
        nd_ok=dec.k <= ND_BOUND,
        uniform_k=k,
        uniform_ok=lo <= k <= hi,
        uniform_classes=tuple(parts),
    )


def write_report(r: ClassReport) -> str:
    yes = {True: "yes", False: "no"}
    lines = [
        f"4K1-free {yes[r.is_4k1_free]}",
        f"C4-free {yes[r.is_c4_free]}",
        f"C6-free {yes[r.is_c6_free]}",
        f"C7 {yes[r.has_c7]}",
        f"in_class {yes[r.in_class]}",
    ]
    for p in PatternName:
        if p in r.witnesses:
            lines.append(f"w {p.value} " + " ".join(str(v + 1) for v in r.witnesses[p]))
    return "\n".join(lines) + "\n"
