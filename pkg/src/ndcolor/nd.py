"""Neighbourhood-diversity decomposition, type graphs and blow-ups."""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from functools import cached_property
from typing import Sequence

from .graph import Graph, bitset, iter_bits


class DecompositionError(ValueError):
    """A partition that is not a valid nd-decomposition of the graph."""


class TypeGraphFormatError(ValueError):
    pass


class ClassKind(enum.Enum):
    CLIQUE = "clique"
    INDEPENDENT = "independent"

    @property
    def tag(self) -> str:
        return "K" if self is ClassKind.CLIQUE else "I"


@dataclass(frozen=True)
class NdDecomposition:
    """Ordered partition ``P_1..P_k`` of ``0..n-1`` into twin classes.

    Classes are sorted tuples ordered by their minimum vertex; singletons are
    always flagged :attr:`ClassKind.CLIQUE`.
    """

    n: int
    classes: tuple[tuple[int, ...], ...]
    kinds: tuple[ClassKind, ...]

    def __post_init__(self):
        if len(self.classes) != len(self.kinds):
            raise DecompositionError("one kind per class required")
        if sum(len(c) for c in self.classes) != self.n:
            raise DecompositionError("classes do not partition the vertex set")
        if any(not c for c in self.classes):
            raise DecompositionError("empty class")
        kinds = tuple(ClassKind.CLIQUE if len(c) == 1 else kd
                      for c, kd in zip(self.classes, self.kinds))
        object.__setattr__(self, "kinds", kinds)

    @property
    def k(self) -> int:
        return len(self.classes)

    @property
    def sizes(self) -> tuple[int, ...]:
        return tuple(len(c) for c in self.classes)

    @cached_property
    def class_of(self) -> list[int]:
        owner = [-1] * self.n
        for i, cls in enumerate(self.classes):
            for v in cls:
                if owner[v] != -1:
                    raise DecompositionError(f"vertex {v} in classes {owner[v]} and {i}")
                owner[v] = i
        return owner

    def is_clique(self, i: int) -> bool:
        return self.kinds[i] is ClassKind.CLIQUE


@dataclass(frozen=True)
class TypeGraph:
    """Weighted type graph: ``k`` vertices, weights, simple edges, loop flags.

    Vertices are ``0..k-1`` internally; the text format is 1-based.  A
    weight-1 vertex always gets a loop.
    """

    k: int
    weights: tuple[int, ...]
    edges: frozenset[tuple[int, int]]
    loops: tuple[bool, ...]
    _nbr: tuple[int, ...] = field(default=(), compare=False, repr=False)

    def __post_init__(self):
        if len(self.weights) != self.k or len(self.loops) != self.k:
            raise ValueError("weights and loops need one entry per type vertex")
        if any(w < 1 for w in self.weights):
            raise ValueError("type-graph weights must be >= 1")
        edges = frozenset((min(i, j), max(i, j)) for i, j in self.edges)
        for i, j in edges:
            if i == j or not (0 <= i < self.k and 0 <= j < self.k):
                raise ValueError(f"bad type-graph edge ({i}, {j})")
        object.__setattr__(self, "edges", edges)
        object.__setattr__(self, "loops", tuple(bool(l) or w == 1
                                                for l, w in zip(self.loops, self.weights)))
        nbr = [0] * self.k
        for i, j in edges:
            nbr[i] |= 1 << j
            nbr[j] |= 1 << i
        object.__setattr__(self, "_nbr", tuple(nbr))

    @property
    def n(self) -> int:
        return sum(self.weights)

    def nbr_mask(self, i: int) -> int:
        """Bitset of type vertices joined to ``i`` (loops excluded)."""
        return self._nbr[i]

    def is_clique(self, i: int) -> bool:
        return self.loops[i]

    def shape(self) -> Graph:
        """The loop-stripped type graph as a plain :class:`Graph`."""
        return Graph(self.k, self._nbr)

    def with_weights(self, weights: Sequence[int]) -> TypeGraph:
        return TypeGraph(self.k, tuple(weights), self.edges, self.loops)

    def twin_pairs(self) -> list[tuple[int, int]]:
        """Pairs of type vertices whose blow-up classes would merge."""
        pairs = []
        for i in range(self.k):
            for j in range(i + 1, self.k):
                ni = self._nbr[i] & ~(1 << j)
                nj = self._nbr[j] & ~(1 << i)
                if ni != nj:
                    continue
                joined = (i, j) in self.edges
                # true twins: joined cliques; false twins: unjoined independent sets
                if joined and self.loops[i] and self.loops[j]:
                    pairs.append((i, j))
                elif not joined and (self.weights[i] == 1 or not self.loops[i]) \
                        and (self.weights[j] == 1 or not self.loops[j]):
                    pairs.append((i, j))
        return pairs


def compute_nd_decomposition(g: Graph) -> NdDecomposition:
    """Minimum nd-decomposition: the classes of ``N(u)-v == N(v)-u``.

    True twins share a closed neighbourhood, false twins an open one, and no
    vertex can have both kinds of twin, so grouping vertices by the two
    bitsets gives the equivalence classes directly.
    """
    by_open: dict[int, list[int]] = {}
    by_closed: dict[int, list[int]] = {}
    for v, a in enumerate(g.adj):
        by_open.setdefault(a, []).append(v)
        by_closed.setdefault(a | (1 << v), []).append(v)

    classes: list[tuple[tuple[int, ...], ClassKind]] = []
    for v, a in enumerate(g.adj):
        closed = by_closed[a | (1 << v)]
        if closed[0] == v and len(closed) > 1:
            classes.append((tuple(closed), ClassKind.CLIQUE))
            continue
        opened = by_open[a]
        if opened[0] == v and len(opened) > 1:
            classes.append((tuple(opened), ClassKind.INDEPENDENT))
        elif len(closed) == 1 and len(opened) == 1:
            classes.append(((v,), ClassKind.CLIQUE))
    classes.sort(key=lambda ck: ck[0][0])
    return NdDecomposition(g.n, tuple(c for c, _ in classes), tuple(kd for _, kd in classes))


def build_type_graph(g: Graph, dec: NdDecomposition) -> TypeGraph:
    """Type graph of ``g`` w.r.t. ``dec``, validating homogeneity on the way."""
    if dec.n != g.n:
        raise DecompositionError(f"decomposition covers {dec.n} vertices, graph has {g.n}")
    dec.class_of  # noqa: B018 -- validates disjointness
    masks = [bitset(c) for c in dec.classes]
    edges = []
    for i, cls in enumerate(dec.classes):
        rep = cls[0]
        own = masks[i]
        outside = g.adj[rep] & ~own
        for u in cls:
            inner = g.adj[u] & own
            if dec.is_clique(i) and inner != own ^ (1 << u):
                raise DecompositionError(f"class {i + 1} flagged clique is not a clique")
            if not dec.is_clique(i) and inner:
                raise DecompositionError(f"class {i + 1} flagged independent has an edge")
            if g.adj[u] & ~own != outside:
                j = next(j for j, mj in enumerate(masks)
                         if j != i and (g.adj[u] ^ outside) & mj)
                raise DecompositionError(f"classes {i + 1} and {j + 1}: mixed bipartite block")
        for j in range(i + 1, dec.k):
            block = outside & masks[j]
            if block == masks[j]:
                edges.append((i, j))
            elif block:
                raise DecompositionError(f"classes {i + 1} and {j + 1}: mixed bipartite block")
    return TypeGraph(dec.k, dec.sizes, frozenset(edges), tuple(dec.is_clique(i) for i in range(dec.k)))


def is_k_uniform(dec: NdDecomposition) -> bool:
    return all(kd is ClassKind.CLIQUE for kd in dec.kinds)


def type_graph_decomposition(t: TypeGraph) -> NdDecomposition:
    """Decomposition of the blow-up of ``t`` without materialising its edges.

    Class ``i`` receives the consecutive vertex block of length ``weights[i]``.
    """
    classes, start = [], 0
    for w in t.weights:
        classes.append(tuple(range(start, start + w)))
        start += w
    kinds = tuple(ClassKind.CLIQUE if t.loops[i] else ClassKind.INDEPENDENT for i in range(t.k))
    return NdDecomposition(start, tuple(classes), kinds)


def blow_up(t: TypeGraph, labels: Sequence[int] | None = None) -> tuple[Graph, NdDecomposition]:
    """Replace each type vertex by a clique/independent set and edges by joins.

    Class ``i`` of the returned decomposition belongs to type vertex ``i``.
    ``labels``, a permutation of ``0..n-1``, renames the blocked vertex
    numbering (block vertex ``v`` becomes ``labels[v]``).
    """
    dec = type_graph_decomposition(t)
    if labels is not None:
        if sorted(labels) != list(range(dec.n)):
            raise ValueError("labels must be a permutation of the vertex set")
        dec = NdDecomposition(dec.n, tuple(tuple(sorted(labels[v] for v in c)) for c in dec.classes),
                              dec.kinds)
    masks = [bitset(c) for c in dec.classes]
    adj = [0] * dec.n
    for i, cls in enumerate(dec.classes):
        out = 0
        for j in iter_bits(t.nbr_mask(i)):
            out |= masks[j]
        for v in cls:
            adj[v] = out | (masks[i] ^ (1 << v) if t.loops[i] else 0)
    return Graph(dec.n, tuple(adj)), dec


# -- text format ----------------------------------------------------------

def write_type_graph(t: TypeGraph) -> str:
    lines = [f"t {t.k}", "w " + " ".join(map(str, t.weights)) if t.k else "w"]
    lines.extend(f"l {i + 1}" for i in range(t.k) if t.loops[i])
    lines.extend(f"e {i + 1} {j + 1}" for i, j in sorted(t.edges))
    return "\n".join(lines) + "\n"


def parse_type_graph(text: str) -> TypeGraph:
    k = None
    weights: list[int] | None = None
    loops: list[bool] = []
    edges = []

    def fail(lineno, msg):
        raise TypeGraphFormatError(f"line {lineno}: {msg}")

    for lineno, raw in enumerate(text.splitlines(), start=1):
        parts = raw.split()
        if not parts or parts[0] == "c":
            continue
        try:
            nums = [int(p) for p in parts[1:]]
        except ValueError:
            fail(lineno, "non-integer field")
        tag = parts[0]
        if tag == "t":
            if k is not None or len(nums) != 1 or nums[0] < 1:
                fail(lineno, "expected a single 't <k>' header with k >= 1")
            k = nums[0]
            loops = [False] * k
        elif k is None:
            fail(lineno, "line before 't <k>' header")
        elif tag == "w":
            if weights is not None or len(nums) != k:
                fail(lineno, f"expected one 'w' line with {k} weights")
            if any(w < 1 for w in nums):
                fail(lineno, "weights must be >= 1")
            weights = nums
        elif tag == "l":
            if len(nums) != 1 or not 1 <= nums[0] <= k:
                fail(lineno, f"loop index out of range 1..{k}")
            loops[nums[0] - 1] = True
        elif tag == "e":
            if len(nums) != 2 or not all(1 <= x <= k for x in nums) or nums[0] == nums[1]:
                fail(lineno, f"edge needs two distinct indices in 1..{k}")
            edges.append((nums[0] - 1, nums[1] - 1))
        else:
            fail(lineno, f"unknown line type {tag!r}")
    if k is None or weights is None:
        raise TypeGraphFormatError("missing 't' header or 'w' line")
    return TypeGraph(k, tuple(weights), frozenset(edges), tuple(loops))


def encoding_bound(t: TypeGraph, c: float = 16.0) -> float:
    """``c * k^2 * (1 + log2 n)``: the size budget for the text encoding."""
    return c * t.k ** 2 * (1 + math.log2(max(t.n, 1)))
