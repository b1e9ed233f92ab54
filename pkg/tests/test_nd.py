import itertools

import pytest
from hypothesis import given, strategies as st

from ndcolor.graph import Graph, complete, cycle, empty
from ndcolor.nd import (ClassKind, DecompositionError, NdDecomposition, TypeGraph,
                        TypeGraphFormatError, blow_up, build_type_graph, compute_nd_decomposition,
                        encoding_bound, is_k_uniform, parse_type_graph, type_graph_decomposition,
                        write_type_graph)
from ndcolor.testkit import oracle_nd

from conftest import graphs, type_graphs


def test_k5_single_clique(k5):
    dec = compute_nd_decomposition(k5)
    assert dec.classes == ((0, 1, 2, 3, 4),)
    assert dec.kinds == (ClassKind.CLIQUE,)


def test_c7_singletons(c7):
    dec = compute_nd_decomposition(c7)
    assert dec.k == 7
    assert all(kd is ClassKind.CLIQUE for kd in dec.kinds)
    assert dec == oracle_nd(c7)


def test_k33_two_independent_classes(k33):
    dec = compute_nd_decomposition(k33)
    assert dec.classes == ((0, 1, 2), (3, 4, 5))
    assert dec.kinds == (ClassKind.INDEPENDENT,) * 2


def test_p4_singletons(p4):
    dec = compute_nd_decomposition(p4)
    assert dec.k == 4
    assert dec == oracle_nd(p4)


@given(graphs(max_n=12))
def test_matches_twin_oracle(g):
    assert compute_nd_decomposition(g) == oracle_nd(g)


@given(graphs(max_n=12))
def test_decomposition_is_homogeneous(g):
    dec = compute_nd_decomposition(g)
    assert sorted(v for c in dec.classes for v in c) == list(range(g.n))
    assert [c[0] for c in dec.classes] == sorted(c[0] for c in dec.classes)
    for i, cls in enumerate(dec.classes):
        for u, v in itertools.combinations(cls, 2):
            assert g.has_edge(u, v) == dec.is_clique(i)
            assert set(g.neighbors(u)) - {v} == set(g.neighbors(v)) - {u}
    for (i, a), (j, b) in itertools.combinations(enumerate(dec.classes), 2):
        assert len({g.has_edge(u, v) for u in a for v in b}) == 1
    build_type_graph(g, dec)


def test_type_graph_examples(k5, k33, c7):
    t = build_type_graph(k5, compute_nd_decomposition(k5))
    assert (t.k, t.weights, t.edges, t.loops) == (1, (5,), frozenset(), (True,))
    t = build_type_graph(k33, compute_nd_decomposition(k33))
    assert (t.k, t.weights, t.edges, t.loops) == (2, (3, 3), frozenset({(0, 1)}), (False, False))
    t = build_type_graph(c7, compute_nd_decomposition(c7))
    assert t.weights == (1,) * 7 and all(t.loops)
    assert t.shape() == c7


def test_type_graph_rejects_bad_decompositions(p4):
    bad_kind = NdDecomposition(3, ((0, 1), (2,)), (ClassKind.CLIQUE, ClassKind.CLIQUE))
    with pytest.raises(DecompositionError, match="class 1"):
        build_type_graph(Graph.from_edges(3, [(1, 2)]), bad_kind)
    # {a, c} in P4 a-b-c-d: not adjacent, and b sees a and c but d sees only c
    mixed = NdDecomposition(4, ((0, 2), (1,), (3,)),
                            (ClassKind.INDEPENDENT, ClassKind.CLIQUE, ClassKind.CLIQUE))
    with pytest.raises(DecompositionError, match="mixed bipartite block"):
        build_type_graph(p4, mixed)


def test_is_k_uniform(c7, k33, k5):
    assert is_k_uniform(compute_nd_decomposition(c7))
    assert not is_k_uniform(compute_nd_decomposition(k33))
    assert is_k_uniform(compute_nd_decomposition(k5))


def test_blow_up_examples(c7):
    g, dec = blow_up(TypeGraph(1, (5,), frozenset(), (True,)))
    assert g == complete(5) and dec.k == 1
    g, _ = blow_up(TypeGraph(2, (3, 4), frozenset({(0, 1)}), (True, False)))
    expected = [(a, b) for a, b in itertools.combinations(range(7), 2) if a < 3]
    assert g == Graph.from_edges(7, expected)
    g, _ = blow_up(TypeGraph(7, (1,) * 7, frozenset((i, (i + 1) % 7) for i in range(7)), (True,) * 7))
    assert g == c7


def test_zero_weight_rejected():
    with pytest.raises(ValueError):
        TypeGraph(2, (1, 0), frozenset(), (True, True))


def test_singletons_always_looped():
    t = TypeGraph(2, (1, 3), frozenset(), (False, False))
    assert t.loops == (True, False)


@given(type_graphs(max_k=7, max_w=3))
def test_blow_up_round_trip(t):
    g, dec = blow_up(t)
    assert g.n == t.n
    assert build_type_graph(g, dec) == t
    if not t.twin_pairs():
        assert build_type_graph(g, compute_nd_decomposition(g)) == t


@given(type_graphs(max_k=6, max_w=3), st.randoms(use_true_random=False))
def test_blow_up_relabelled(t, rnd):
    labels = list(range(t.n))
    rnd.shuffle(labels)
    g, dec = blow_up(t, labels)
    assert build_type_graph(g, dec) == t
    base, _ = blow_up(t)
    assert g.m == base.m


@given(type_graphs(max_k=9, max_w=50))
def test_type_graph_text_round_trip(t):
    text = write_type_graph(t)
    assert parse_type_graph(text) == t
    assert len(text) <= encoding_bound(t)


def test_encoding_grows_with_log_n():
    t = TypeGraph(13, (1,) * 13, frozenset(itertools.combinations(range(13), 2)), (True,) * 13)
    for n_per_class in (1, 10, 10_000, 10 ** 9):
        big = t.with_weights((n_per_class,) * 13)
        assert len(write_type_graph(big)) <= encoding_bound(big)


@pytest.mark.parametrize("text", ["w 1", "t 2\nw 1", "t 2\nw 1 1\ne 1 1", "t 2\nw 1 0",
                                  "t 1\nw 1\nq 1", "t 2\nw 1 1\nl 3"])
def test_type_graph_parse_errors(text):
    with pytest.raises(TypeGraphFormatError):
        parse_type_graph(text)


def test_type_graph_decomposition_is_implicit_blow_up():
    t = TypeGraph(3, (2, 1, 3), frozenset({(0, 1)}), (True, True, False))
    g, dec = blow_up(t)
    assert type_graph_decomposition(t) == dec
    assert dec.classes == ((0, 1), (2,), (3, 4, 5))


def test_empty_graph_one_independent_class():
    dec = compute_nd_decomposition(empty(4))
    assert dec.classes == ((0, 1, 2, 3),) and dec.kinds == (ClassKind.INDEPENDENT,)
    assert compute_nd_decomposition(cycle(4)).kinds == (ClassKind.INDEPENDENT,) * 2
