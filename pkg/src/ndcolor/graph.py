"""Simple undirected graphs, DIMACS ``.col`` I/O and induced-pattern search.

Adjacency is stored as one Python ``int`` bitset per vertex.  This keeps
graphs with a few thousand vertices and millions of edges cheap to build
(blow-ups of type graphs are dense) and makes neighbourhood comparisons a
single integer equality.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence


class DimacsError(ValueError):
    """Malformed DIMACS input; ``lineno`` is 1-based."""

    def __init__(self, lineno: int, msg: str):
        super().__init__(f"line {lineno}: {msg}")
        self.lineno = lineno


def bitset(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def low_bit(mask: int) -> int:
    return (mask & -mask).bit_length() - 1


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph on vertices ``0..n-1``.

    ``adj[v]`` is the bitset of neighbours of ``v``.  Use :meth:`from_edges`
    or :meth:`from_adjacency` rather than the raw constructor.
    """

    n: int
    adj: tuple[int, ...]
    _m: int = field(default=-1, compare=False, repr=False)

    def __post_init__(self):
        if len(self.adj) != self.n:
            raise ValueError("adjacency length does not match vertex count")
        if self._m < 0:
            object.__setattr__(self, "_m", sum(a.bit_count() for a in self.adj) // 2)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        adj = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, tuple(adj))

    @classmethod
    def from_adjacency(cls, adj: Sequence[int]) -> Graph:
        """Build from bitsets, checking symmetry and the absence of loops."""
        n = len(adj)
        full = (1 << n) - 1
        for v, a in enumerate(adj):
            if a >> v & 1:
                raise ValueError(f"self-loop at vertex {v}")
            if a & ~full:
                raise ValueError(f"neighbour of {v} out of range")
            for u in iter_bits(a):
                if not adj[u] >> v & 1:
                    raise ValueError(f"asymmetric adjacency between {v} and {u}")
        return cls(n, tuple(adj))

    @property
    def m(self) -> int:
        return self._m

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return list(iter_bits(self.adj[v]))

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def edges(self) -> Iterator[tuple[int, int]]:
        """Edges as ``(u, v)`` with ``u < v``, in lexicographic order."""
        for u, a in enumerate(self.adj):
            yield from ((u, v) for v in iter_bits(a >> (u + 1) << (u + 1)))

    def edge_set(self) -> frozenset[tuple[int, int]]:
        return frozenset(self.edges())

    def induced(self, vertices: Sequence[int]) -> Graph:
        """Induced subgraph, relabelled ``vertices[i] -> i``."""
        pos = {v: i for i, v in enumerate(vertices)}
        keep = bitset(vertices)
        edges = [(pos[u], pos[w]) for u in vertices for w in iter_bits(self.adj[u] & keep)
                 if pos[u] < pos[w]]
        return Graph.from_edges(len(vertices), edges)

    def complement(self) -> Graph:
        full = (1 << self.n) - 1
        return Graph(self.n, tuple(full & ~a & ~(1 << v) for v, a in enumerate(self.adj)))


# -- common graphs --------------------------------------------------------

def cycle(n: int) -> Graph:
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph(n, tuple(full ^ (1 << v) for v in range(n)))


def empty(n: int) -> Graph:
    return Graph(n, (0,) * n)


def path(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def complete_bipartite(a: int, b: int) -> Graph:
    return Graph.from_edges(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(10, outer + spokes + inner)


# -- DIMACS ---------------------------------------------------------------

def parse_dimacs(text: str) -> Graph:
    """Parse DIMACS ``.col`` text (``p edge n m`` header, ``e u v`` lines)."""
    n = m = None
    header_line = 0
    edges: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        parts = raw.split()
        if not parts or parts[0] == "c":
            continue
        tag = parts[0]
        if tag == "p":
            if n is not None:
                raise DimacsError(lineno, f"second header (first on line {header_line})")
            if len(parts) != 4 or parts[1] != "edge":
                raise DimacsError(lineno, "expected 'p edge <n> <m>'")
            try:
                n, m = int(parts[2]), int(parts[3])
            except ValueError:
                raise DimacsError(lineno, "non-integer vertex or edge count") from None
            if n < 0 or m < 0:
                raise DimacsError(lineno, "negative count in header")
            header_line = lineno
        elif tag == "e":
            if n is None:
                raise DimacsError(lineno, "edge line before header")
            if len(parts) != 3:
                raise DimacsError(lineno, "expected 'e <u> <v>'")
            try:
                u, v = int(parts[1]), int(parts[2])
            except ValueError:
                raise DimacsError(lineno, "non-integer endpoint") from None
            if not (1 <= u <= n and 1 <= v <= n):
                raise DimacsError(lineno, f"vertex out of range 1..{n}")
            if u == v:
                raise DimacsError(lineno, f"self-loop on vertex {u}")
            edges.append((u - 1, v - 1))
        else:
            raise DimacsError(lineno, f"unknown line type {tag!r}")
    if n is None:
        raise DimacsError(max(1, len(text.splitlines())), "missing 'p edge' header")
    if len(edges) != m:
        raise DimacsError(header_line, f"header declares {m} edges, found {len(edges)} edge lines")
    return Graph.from_edges(n, edges)


def write_dimacs(g: Graph) -> str:
    lines = [f"p edge {g.n} {g.m}"]
    lines.extend(f"e {u + 1} {v + 1}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


# -- induced patterns -----------------------------------------------------

class PatternName(enum.Enum):
    FOUR_K1 = "4K1"
    C4 = "C4"
    C6 = "C6"
    C7 = "C7"

    @property
    def order(self) -> int:
        return {"4K1": 4, "C4": 4, "C6": 6, "C7": 7}[self.value]

    @property
    def is_cycle(self) -> bool:
        return self is not PatternName.FOUR_K1

    def graph(self) -> Graph:
        return empty(4) if self is PatternName.FOUR_K1 else cycle(self.order)

    @classmethod
    def parse(cls, name: str) -> PatternName:
        for p in cls:
            if p.value.lower() == name.lower():
                return p
        raise ValueError(f"unknown pattern {name!r}")


def _find_independent(g: Graph, size: int) -> list[int] | None:
    # ascending degree: low-degree vertices have the most non-neighbours
    order = sorted(range(g.n), key=lambda v: (g.degree(v), v))
    rank = [0] * g.n
    for i, v in enumerate(order):
        rank[v] = i
    later = [0] * g.n  # bitset of vertices after v in the search order
    acc = 0
    for v in reversed(order):
        later[v] = acc
        acc |= 1 << v

    def extend(chosen: list[int], cand: int) -> list[int] | None:
        if len(chosen) == size:
            return chosen
        if cand.bit_count() < size - len(chosen):
            return None
        for v in sorted(iter_bits(cand), key=rank.__getitem__):
            found = extend(chosen + [v], cand & later[v] & ~g.adj[v])
            if found:
                return found
        return None

    return extend([], (1 << g.n) - 1)


def _find_induced_cycle(g: Graph, length: int) -> list[int] | None:
    adj = g.adj

    def grow(seq: list[int], forbidden: int, above: int) -> list[int] | None:
        # forbidden: closed neighbourhoods of seq[1:-1] plus the start vertex
        start, last = seq[0], seq[-1]
        cand = adj[last] & ~forbidden & above
        if len(seq) == length - 1:
            # closing vertex: adjacent to the start, and above seq[1] so each
            # cycle is found in one orientation only
            cand &= adj[start] & ~((1 << (seq[1] + 1)) - 1)
            return seq + [low_bit(cand)] if cand else None
        cand &= ~adj[start]
        for v in iter_bits(cand):
            found = grow(seq + [v], forbidden | adj[last] | (1 << last), above)
            if found:
                return found
        return None

    for s in range(g.n):
        above = ~((1 << (s + 1)) - 1)  # s is the minimum vertex of the cycle
        for v in iter_bits(adj[s] & above):
            found = grow([s, v], 1 << s, above)
            if found:
                return found
    return None


def contains_induced(g: Graph, pattern: PatternName) -> list[int] | None:
    """Return vertices of ``g`` inducing ``pattern`` (in cycle order), or None."""
    if pattern is PatternName.FOUR_K1:
        return _find_independent(g, 4)
    return _find_induced_cycle(g, pattern.order)


def is_induced_pattern(g: Graph, vertices: Sequence[int], pattern: PatternName) -> bool:
    """Check that ``vertices`` are distinct and induce ``pattern`` in ``g``."""
    if len(set(vertices)) != len(vertices) or len(vertices) != pattern.order:
        return False
    h = g.induced(list(vertices))
    if pattern is PatternName.FOUR_K1:
        return h.m == 0
    if h.m != h.n or any(h.degree(v) != 2 for v in range(h.n)):
        return False
    # 2-regular and connected means a single cycle
    seen, stack = {0}, [0]
    while stack:
        for w in h.neighbors(stack.pop()):
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == h.n
