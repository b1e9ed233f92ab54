import pytest
from hypothesis import given

from ndcolor.classcheck import (NotInClass, assert_structure_bounds, check_class, core_cap, pattern_core,
                                uniform_partition, write_report)
from ndcolor.graph import PatternName, complete, contains_induced, cycle, empty, is_induced_pattern
from ndcolor.nd import TypeGraph, blow_up, compute_nd_decomposition
from ndcolor.testkit import GeneratorSpec, generate

from conftest import graphs, type_graphs


def c7_shape(weights):
    return TypeGraph(7, tuple(weights), frozenset((i, (i + 1) % 7) for i in range(7)), (True,) * 7)


def test_c7_in_class(c7):
    r = check_class(c7)
    assert r.in_class
    assert (r.is_4k1_free, r.is_c4_free, r.is_c6_free, r.has_c7) == (True, True, True, True)
    assert sorted(r.witnesses[PatternName.C7]) == list(range(7))


def test_c4_not_in_class():
    r = check_class(cycle(4))
    assert not r.in_class and not r.is_c4_free
    assert is_induced_pattern(cycle(4), r.witnesses[PatternName.C4], PatternName.C4)


def test_4k1_not_in_class(four_k1):
    r = check_class(four_k1)
    assert not r.in_class and not r.is_4k1_free and not r.has_c7


@given(graphs(max_n=11))
def test_report_matches_direct_search(g):
    r = check_class(g)
    direct = {p: contains_induced(g, p) is not None for p in PatternName}
    assert r.is_4k1_free == (not direct[PatternName.FOUR_K1])
    assert r.is_c4_free == (not direct[PatternName.C4])
    assert r.is_c6_free == (not direct[PatternName.C6])
    assert r.has_c7 == direct[PatternName.C7]
    for p, w in r.witnesses.items():
        assert is_induced_pattern(g, w, p)


@given(type_graphs(max_k=6, max_w=9))
def test_core_preserves_patterns(t):
    g, _ = blow_up(t)
    dec = compute_nd_decomposition(g)
    for p in PatternName:
        h = g.induced(pattern_core(dec, core_cap(p)))
        assert (contains_induced(g, p) is None) == (contains_induced(h, p) is None)


def test_structure_bounds_c7(c7):
    dec = compute_nd_decomposition(c7)
    v = assert_structure_bounds(c7, check_class(c7), dec)
    assert v.nd == 7 and v.nd_ok and v.uniform_k == 7 and v.ok


def test_structure_bounds_weighted_c7():
    g, _ = blow_up(c7_shape([2, 1, 1, 1, 1, 1, 1]))
    r = check_class(g)
    assert r.in_class
    v = assert_structure_bounds(g, r, compute_nd_decomposition(g))
    assert v.nd == 7 and v.ok


def test_structure_bounds_precondition(k5):
    with pytest.raises(NotInClass):
        assert_structure_bounds(k5, check_class(k5), compute_nd_decomposition(k5))


def test_uniform_partition_splits_independent_classes():
    g = empty(3)
    assert uniform_partition(g, compute_nd_decomposition(g)) == [(0,), (1,), (2,)]
    g = complete(4)
    assert uniform_partition(g, compute_nd_decomposition(g)) == [(0, 1, 2, 3)]


def test_generated_instances_satisfy_bounds():
    for seed in range(10):
        inst = generate(GeneratorSpec("paper_class_like", seed, w_max=6, shuffle=True))
        dec = compute_nd_decomposition(inst.graph)
        r = check_class(inst.graph, dec)
        assert r.in_class
        v = assert_structure_bounds(inst.graph, r, dec)
        assert v.ok and 7 <= v.uniform_k <= 13 and dec.k == inst.type_graph.k


def test_report_text(c7):
    lines = write_report(check_class(c7)).splitlines()
    assert lines[:5] == ["4K1-free yes", "C4-free yes", "C6-free yes", "C7 yes", "in_class yes"]
    assert lines[5].startswith("w C7 ")
