"""Brute-force oracles and seeded instance generators.

Nothing here calls into the decomposition, MIS, ILP or pipeline code; the
oracles work from plain ``set`` adjacency built through ``Graph.has_edge``.

Randomness comes from NumPy's PCG64 (``numpy.random.Generator(PCG64(seed))``),
so a ``(GeneratorSpec, seed)`` pair always yields the same instance.
"""
from __future__ import annotations

import hashlib
import itertools
from dataclasses import dataclass, field

import numpy as np

from .graph import Graph, PatternName, contains_induced, write_dimacs
from .ilp import CoveringIlp
from .mis import MisFamily
from .nd import ClassKind, NdDecomposition, TypeGraph, blow_up

# paper_class_like: neighbourhood draws per new type vertex before giving up
_GROW_ATTEMPTS = 300


class OracleRangeError(ValueError):
    """Input larger than an oracle is allowed to handle."""


class GeneratorExhausted(RuntimeError):
    pass


def _adjacency_sets(g: Graph) -> list[set[int]]:
    nbrs: list[set[int]] = [set() for _ in range(g.n)]
    for u, v in itertools.combinations(range(g.n), 2):
        if g.has_edge(u, v):
            nbrs[u].add(v)
            nbrs[v].add(u)
    return nbrs


# -- chromatic number -----------------------------------------------------

def _max_clique(nbrs: list[set[int]]) -> int:
    best = 0

    def grow(size: int, cand: set[int]) -> None:
        nonlocal best
        if not cand:
            best = max(best, size)
            return
        if size + len(cand) <= best:
            return
        for v in sorted(cand):
            grow(size + 1, cand & nbrs[v])
            cand = cand - {v}
            if size + len(cand) <= best:
                return

    grow(0, set(range(len(nbrs))))
    return best


def oracle_chromatic(g: Graph) -> int:
    """Exact chromatic number by DSATUR branch and bound (n <= 20)."""
    if g.n > 20:
        raise OracleRangeError(f"oracle_chromatic handles n <= 20, got {g.n}")
    n = g.n
    if n == 0:
        return 0
    nbrs = _adjacency_sets(g)
    lower = _max_clique(nbrs)
    best = n
    color = [0] * n

    def search(colored: int, used: int) -> None:
        nonlocal best
        if used >= best:
            return
        if colored == n:
            best = used
            return
        # DSATUR: most distinct neighbour colours, then highest degree
        v = max((u for u in range(n) if not color[u]),
                key=lambda u: (len({color[w] for w in nbrs[u] if color[w]}), len(nbrs[u]), -u))
        taken = {color[w] for w in nbrs[v]}
        for c in range(1, used + 2):
            if c in taken:
                continue
            if max(used, c) >= best:
                break
            color[v] = c
            search(colored + 1, max(used, c))
            color[v] = 0
            if best == lower:
                return

    search(0, 0)
    return best


# -- neighbourhood diversity ----------------------------------------------

def oracle_nd(g: Graph) -> NdDecomposition:
    """Twin classes by direct pairwise comparison of neighbourhoods (n <= 200)."""
    if g.n > 200:
        raise OracleRangeError(f"oracle_nd handles n <= 200, got {g.n}")
    nbrs = _adjacency_sets(g)
    label = list(range(g.n))
    for u in range(g.n):
        if label[u] != u:
            continue
        for v in range(u + 1, g.n):
            if label[v] == v and nbrs[u] - {v} == nbrs[v] - {u}:
                label[v] = u
    groups: dict[int, list[int]] = {}
    for v in range(g.n):
        groups.setdefault(label[v], []).append(v)
    classes = sorted(tuple(vs) for vs in groups.values())
    kinds = tuple(ClassKind.CLIQUE if all(b in nbrs[a] for a, b in itertools.combinations(c, 2))
                  else ClassKind.INDEPENDENT for c in classes)
    return NdDecomposition(g.n, tuple(classes), kinds)


# -- maximal independent sets ---------------------------------------------

def oracle_mis(t: TypeGraph) -> MisFamily:
    """Filter all ``2^k`` subsets for independence and maximality (k <= 16)."""
    if t.k > 16:
        raise OracleRangeError(f"oracle_mis handles k <= 16, got {t.k}")
    edges = {(i, j) for i, j in t.edges} | {(j, i) for i, j in t.edges}
    sets = []
    for r in range(t.k + 1):
        for s in itertools.combinations(range(t.k), r):
            if any((a, b) in edges for a, b in itertools.combinations(s, 2)):
                continue
            if all(any((v, u) in edges for u in s) for v in range(t.k) if v not in s):
                sets.append(s)
    return MisFamily(t.k, tuple(sorted(sets)))


# -- covering ILP ---------------------------------------------------------

def oracle_ilp(p: CoveringIlp) -> int:
    """Exhaustive minimum of ``sum(x)`` over ``x in {0..max b}^d`` (d <= 12, b <= 8).

    Depth-first over the columns in order.  A branch is cut when its partial
    sum plus the largest unmet demand (each column adds at most one per row)
    reaches the best total, when some unmet row has no later column, or when
    the same ``(column, residual)`` state was already reached more cheaply.
    """
    if p.d > 12 or max(p.rhs, default=0) > 8:
        raise OracleRangeError("oracle_ilp handles d <= 12 and b_i <= 8")
    cap = max(p.rhs, default=0)
    cols = [set(c) for c in p.columns]
    later = [set().union(*cols[j:]) for j in range(p.d)] + [set()]
    best = cap * p.d + 1

    seen: dict[tuple[int, tuple[int, ...]], int] = {}

    def go(j: int, residual: tuple[int, ...], total: int) -> None:
        nonlocal best
        if total + max(residual, default=0) >= best:
            return
        unmet = {i for i, r in enumerate(residual) if r > 0}
        if not unmet:
            best = total
            return
        if j == p.d or not unmet <= later[j]:
            return
        if seen.get((j, residual), best) <= total:
            return
        seen[(j, residual)] = total
        for v in range(cap, -1, -1):
            nxt = tuple(max(0, r - v) if i in cols[j] else r for i, r in enumerate(residual))
            go(j + 1, nxt, total + v)

    go(0, tuple(p.rhs), 0)
    if best > cap * p.d:
        raise ValueError("covering instance is infeasible")
    return best


# -- generators -----------------------------------------------------------

KINDS = ("random_gnp", "blow_up_random", "paper_class_like")


@dataclass(frozen=True)
class GeneratorSpec:
    kind: str
    seed: int
    n: int = 10
    p: float = 0.5
    k_min: int = 7
    k_max: int = 13
    w_min: int = 1
    w_max: int = 4
    loop_prob: float = 0.5
    edge_prob: float = 0.5
    shuffle: bool = False
    attempts: int = 1000
    shape: TypeGraph | None = field(default=None, compare=False)

    def params(self) -> str:
        if self.kind == "random_gnp":
            keys = ["n", "p"]
        elif self.kind == "blow_up_random":
            keys = ["k_min", "k_max", "w_min", "w_max", "loop_prob", "edge_prob", "shuffle"]
        else:
            keys = ["k_min", "k_max", "w_min", "w_max", "edge_prob", "shuffle"]
        return " ".join(f"{k}={getattr(self, k)}" for k in keys)


@dataclass(frozen=True)
class Instance:
    spec: GeneratorSpec
    graph: Graph
    type_graph: TypeGraph | None = None

    def manifest_line(self) -> str:
        digest = hashlib.sha256(write_dimacs(self.graph).encode()).hexdigest()
        return f"{self.spec.seed} {self.spec.kind} {self.spec.params()} {digest}"


def _rng(seed: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(seed))


def _weights(rng: np.random.Generator, k: int, spec: GeneratorSpec) -> tuple[int, ...]:
    return tuple(int(w) for w in rng.integers(spec.w_min, spec.w_max + 1, size=k))


def _is_twin_free(k: int, edges: set[tuple[int, int]]) -> bool:
    nbrs = [set() for _ in range(k)]
    for i, j in edges:
        nbrs[i].add(j)
        nbrs[j].add(i)
    return all(nbrs[i] - {j} != nbrs[j] - {i} for i, j in itertools.combinations(range(k), 2))


def _gnp(rng: np.random.Generator, spec: GeneratorSpec) -> Instance:
    pairs = list(itertools.combinations(range(spec.n), 2))
    draws = rng.random(len(pairs))
    return Instance(spec, Graph.from_edges(spec.n, [e for e, r in zip(pairs, draws) if r < spec.p]))


def _finish(rng: np.random.Generator, spec: GeneratorSpec, t: TypeGraph) -> Instance:
    labels = [int(v) for v in rng.permutation(t.n)] if spec.shuffle else None
    g, _ = blow_up(t, labels)
    return Instance(spec, g, t)


def _blow_up_random(rng: np.random.Generator, spec: GeneratorSpec) -> Instance:
    if spec.shape is not None:
        t = spec.shape.with_weights(_weights(rng, spec.shape.k, spec))
        return _finish(rng, spec, t)
    for _ in range(spec.attempts):
        k = int(rng.integers(spec.k_min, spec.k_max + 1))
        weights = _weights(rng, k, spec)
        loops = tuple(bool(b) for b in rng.random(k) < spec.loop_prob)
        pairs = list(itertools.combinations(range(k), 2))
        edges = frozenset(e for e, r in zip(pairs, rng.random(len(pairs))) if r < spec.edge_prob)
        t = TypeGraph(k, weights, edges, loops)
        if not t.twin_pairs():
            return _finish(rng, spec, t)
    raise GeneratorExhausted(f"no twin-free type graph after {spec.attempts} attempts")


def _in_class_shape(k: int, edges: set[tuple[int, int]]) -> bool:
    shape = Graph.from_edges(k, edges)
    return all(contains_induced(shape, p) is None
               for p in (PatternName.FOUR_K1, PatternName.C4, PatternName.C6))


def grow_class_shape(rng: np.random.Generator, k_target: int, edge_prob: float,
                     attempts: int = _GROW_ATTEMPTS) -> set[tuple[int, int]]:
    """Extend a 7-cycle one vertex at a time, keeping it (4K1, C4, C6)-free and twin-free.

    Stops early when no drawn neighbourhood works for the next vertex.
    """
    edges = {(i, i + 1) for i in range(6)} | {(0, 6)}
    k = 7
    while k < k_target:
        for _ in range(attempts):
            nbrs = [i for i, r in enumerate(rng.random(k)) if r < edge_prob]
            cand = edges | {(i, k) for i in nbrs}
            if _is_twin_free(k + 1, cand) and _in_class_shape(k + 1, cand):
                edges, k = cand, k + 1
                break
        else:
            break
    return edges


def _paper_class_like(rng: np.random.Generator, spec: GeneratorSpec) -> Instance:
    # local import: classcheck is only needed to certify these instances
    from .classcheck import check_class

    for _ in range(spec.attempts):
        k_target = int(rng.integers(max(7, spec.k_min), min(13, spec.k_max) + 1))
        edges = grow_class_shape(rng, k_target, spec.edge_prob)
        k = 1 + max(max(e) for e in edges)
        t = TypeGraph(k, _weights(rng, k, spec), frozenset(edges), (True,) * k)
        inst = _finish(rng, spec, t)
        if check_class(inst.graph).in_class:
            return inst
    raise GeneratorExhausted(f"no certified in-class instance after {spec.attempts} attempts")


def generate(spec: GeneratorSpec) -> Instance:
    rng = _rng(spec.seed)
    if spec.kind == "random_gnp":
        return _gnp(rng, spec)
    if spec.kind == "blow_up_random":
        return _blow_up_random(rng, spec)
    if spec.kind == "paper_class_like":
        return _paper_class_like(rng, spec)
    raise ValueError(f"unknown generator kind {spec.kind!r}; expected one of {KINDS}")


def random_type_graph(seed: int, k_min: int = 1, k_max: int = 14, loop_prob: float = 0.5,
                      edge_prob: float | None = None, w_max: int = 5) -> TypeGraph:
    """Unconstrained random type graph (twins allowed), for MIS testing."""
    rng = _rng(seed)
    k = int(rng.integers(k_min, k_max + 1))
    ep = float(rng.uniform(0.1, 0.9)) if edge_prob is None else edge_prob
    pairs = list(itertools.combinations(range(k), 2))
    edges = frozenset(e for e, r in zip(pairs, rng.random(len(pairs))) if r < ep)
    loops = tuple(bool(b) for b in rng.random(k) < loop_prob)
    weights = tuple(int(w) for w in rng.integers(1, w_max + 1, size=k))
    return TypeGraph(k, weights, edges, loops)


def random_covering_ilp(seed: int, max_rows: int = 6, max_cols: int = 12, max_rhs: int = 6) -> CoveringIlp:
    """Random feasible 0/1 covering instance: every row lies in some column."""
    rng = _rng(seed)
    r = int(rng.integers(1, max_rows + 1))
    d = int(rng.integers(1, max_cols + 1))
    density = float(rng.uniform(0.2, 0.8))
    cols = [tuple(i for i in range(r) if rng.random() < density) for _ in range(d)]
    for i in range(r):
        if not any(i in c for c in cols):
            j = int(rng.integers(0, d))
            cols[j] = tuple(sorted(set(cols[j]) | {i}))
    rhs = tuple(int(b) for b in rng.integers(1, max_rhs + 1, size=r))
    return CoveringIlp(r, tuple(cols), rhs)
