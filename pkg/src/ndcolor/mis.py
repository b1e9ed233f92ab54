"""Maximal independent sets of a (loop-stripped) type graph."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .graph import iter_bits
from .nd import TypeGraph


@dataclass(frozen=True)
class MisFamily:
    """All maximal independent sets of a type graph, as sorted index tuples.

    Indices are 0-based type vertices; ``sets`` is lexicographically sorted.
    """

    k: int
    sets: tuple[tuple[int, ...], ...]

    def __len__(self) -> int:
        return len(self.sets)

    def __iter__(self):
        return iter(self.sets)

    def masks(self) -> list[int]:
        return [sum(1 << i for i in s) for s in self.sets]


def enumerate_mis(t: TypeGraph) -> MisFamily:
    """Bron-Kerbosch with pivoting, run on non-neighbourhoods.

    Loops never enter: ``t.nbr_mask`` excludes them.
    """
    k = t.k
    full = (1 << k) - 1
    # maximal independent sets of T are maximal cliques of its complement
    non_nbr = [full & ~t.nbr_mask(v) & ~(1 << v) for v in range(k)]
    found: list[tuple[int, ...]] = []

    def expand(r: int, p: int, x: int) -> None:
        if not p and not x:
            found.append(tuple(iter_bits(r)))
            return
        pivot = max(iter_bits(p | x), key=lambda u: ((p & non_nbr[u]).bit_count(), -u))
        for v in iter_bits(p & ~non_nbr[pivot]):
            expand(r | (1 << v), p & non_nbr[v], x & non_nbr[v])
            p &= ~(1 << v)
            x |= 1 << v

    if k:
        expand(0, full, 0)
    return MisFamily(k, tuple(sorted(found)))


def induces(j_classes: Iterable[int]) -> frozenset[int]:
    """Type vertices induced by a vertex set touching exactly ``j_classes``."""
    return frozenset(j_classes)


def dominates(i: Iterable[int], i_prime: Iterable[int]) -> bool:
    return set(i_prime) <= set(i)
