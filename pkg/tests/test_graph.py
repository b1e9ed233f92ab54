import itertools

import pytest
from hypothesis import given

from ndcolor.graph import (DimacsError, Graph, PatternName, complete, contains_induced, cycle,
                           empty, is_induced_pattern, parse_dimacs, path, write_dimacs)

from conftest import graphs


def brute_contains(g, pattern):
    return any(is_induced_pattern(g, s, pattern)
               for s in itertools.combinations(range(g.n), pattern.order))


def test_parse_path():
    g = parse_dimacs("p edge 3 2\ne 1 2\ne 2 3")
    assert g == path(3)
    assert g.m == 2


def test_parse_c7():
    text = "p edge 7 7\ne 1 2\ne 2 3\ne 3 4\ne 4 5\ne 5 6\ne 6 7\ne 7 1"
    assert parse_dimacs(text) == cycle(7)


def test_parse_4k1():
    g = parse_dimacs("p edge 4 0")
    assert g.n == 4 and g.m == 0


def test_parse_collapses_duplicates_and_comments():
    g = parse_dimacs("c a comment\np edge 3 3\ne 1 2\ne 2 1\ne 1 2\n")
    assert g.edge_set() == {(0, 1)}


@pytest.mark.parametrize("text, lineno", [
    ("p edge 3 1\ne 1 4", 2),
    ("p edge 3 1\ne 2 2", 2),
    ("p col 3 0", 1),
    ("p edge 3 1\nx 1 2", 2),
    ("e 1 2\np edge 3 1", 1),
    ("p edge 3 0\np edge 3 0", 2),
    ("p edge 3 2\ne 1 2", 1),
    ("p edge 3 1\ne 1 two", 2),
])
def test_parse_errors_name_line(text, lineno):
    with pytest.raises(DimacsError) as err:
        parse_dimacs(text)
    assert err.value.lineno == lineno
    assert f"line {lineno}" in str(err.value)


def test_write_examples():
    assert write_dimacs(complete(2)) == "p edge 2 1\ne 1 2\n"
    assert write_dimacs(empty(4)) == "p edge 4 0\n"
    assert write_dimacs(cycle(4)) == "p edge 4 4\ne 1 2\ne 1 4\ne 2 3\ne 3 4\n"


@given(graphs(max_n=14))
def test_dimacs_round_trip(g):
    text = write_dimacs(g)
    assert parse_dimacs(text) == g
    assert write_dimacs(parse_dimacs(text)) == text
    assert text.isascii() and "\r" not in text
    assert all(line == line.rstrip() for line in text.splitlines())


@given(graphs(max_n=14))
def test_adjacency_invariants(g):
    assert sum(len(g.neighbors(v)) for v in range(g.n)) == 2 * g.m
    for u in range(g.n):
        assert u not in g.neighbors(u)
        for v in g.neighbors(u):
            assert u in g.neighbors(v)
    assert Graph.from_adjacency(g.adj) == g


def test_from_adjacency_rejects_asymmetry():
    with pytest.raises(ValueError):
        Graph.from_adjacency([0b10, 0])
    with pytest.raises(ValueError):
        Graph.from_adjacency([0b1])


def test_pattern_shapes():
    assert PatternName.FOUR_K1.graph().m == 0 and PatternName.FOUR_K1.order == 4
    for p, n in ((PatternName.C4, 4), (PatternName.C6, 6), (PatternName.C7, 7)):
        assert p.graph() == cycle(n) and p.order == n


def test_contains_c7_in_c7():
    w = contains_induced(cycle(7), PatternName.C7)
    assert sorted(w) == list(range(7))
    assert is_induced_pattern(cycle(7), w, PatternName.C7)


def test_no_4k1_in_k4():
    assert contains_induced(complete(4), PatternName.FOUR_K1) is None


def test_no_c4_in_c6():
    # exhaustive: all 15 four-subsets of C6 induce paths or 2K2
    c6 = cycle(6)
    subsets = list(itertools.combinations(range(6), 4))
    assert len(subsets) == 15
    assert not any(is_induced_pattern(c6, s, PatternName.C4) for s in subsets)
    assert contains_induced(c6, PatternName.C4) is None


@given(graphs(max_n=12))
def test_contains_induced_matches_brute_force(g):
    for p in PatternName:
        w = contains_induced(g, p)
        assert (w is not None) == brute_contains(g, p)
        if w is not None:
            assert is_induced_pattern(g, w, p)
