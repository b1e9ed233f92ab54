import pytest
from hypothesis import given

from ndcolor.graph import Graph, complete, complete_bipartite, cycle, empty, petersen
from ndcolor.ilp import IlpSolution, build_coloring_ilp, solve_covering_ilp
from ndcolor.mis import MisFamily, enumerate_mis
from ndcolor.nd import TypeGraph, blow_up, build_type_graph, compute_nd_decomposition
from ndcolor.pipeline import (Coloring, ContractViolation, canonical_solution_from_coloring,
                              check_canonical, chromatic_number, color_graph, color_type_graph,
                              parse_coloring, reconstruct_coloring, verify_coloring,
                              verify_coloring_on_type_graph, write_coloring)
from ndcolor.testkit import oracle_chromatic

from conftest import graphs, type_graphs


def stages(g):
    dec = compute_nd_decomposition(g)
    t = build_type_graph(g, dec)
    fam = enumerate_mis(t)
    return dec, t, fam


def test_reconstruct_k5(k5):
    dec, _, fam = stages(k5)
    c = reconstruct_coloring(k5, dec, fam, [5])
    assert c.colors == (1, 2, 3, 4, 5) and c.num_colors == 5


def test_reconstruct_c7(c7):
    res = color_graph(c7)
    assert res.solution.objective_value == 3 == oracle_chromatic(c7)
    assert verify_coloring(c7, res.coloring)
    assert res.coloring.num_colors == 3


def test_reconstruct_split_graph(split_type_graph):
    g, dec = blow_up(split_type_graph)
    fam = enumerate_mis(split_type_graph)
    assert fam.sets == ((0,), (1,))
    c = reconstruct_coloring(g, dec, fam, [3, 1])
    assert c.colors == (1, 2, 3, 4, 4, 4, 4)
    assert verify_coloring(g, c)


def test_reconstruct_skips_empty_repetitions(c7):
    dec, _, fam = stages(c7)
    x = [1] * len(fam)  # 7 colors offered, every vertex needs only one
    c = reconstruct_coloring(c7, dec, fam, x)
    assert c.num_colors < sum(x)
    assert verify_coloring(c7, c)
    assert sorted(set(c.colors)) == list(range(1, c.num_colors + 1))


def test_reconstruct_rejects_infeasible(c7):
    dec, _, fam = stages(c7)
    with pytest.raises(ContractViolation):
        reconstruct_coloring(c7, dec, fam, [1, 0, 0, 0, 0, 0, 0])
    with pytest.raises(ContractViolation):
        reconstruct_coloring(c7, dec, fam, [1])


@pytest.mark.parametrize("g, chi", [(cycle(7), 3), (complete(5), 5), (empty(4), 1),
                                    (complete_bipartite(3, 3), 2), (petersen(), 3),
                                    (Graph(0, ()), 0)])
def test_chromatic_number_examples(g, chi):
    got, c = chromatic_number(g)
    assert got == chi == c.num_colors
    assert verify_coloring(g, c)


def test_verify_examples(c7):
    k2 = complete(2)
    assert verify_coloring(k2, Coloring((1, 1), 1)) == (False, (0, 1), None)
    assert verify_coloring(k2, Coloring((1, 2), 2))
    assert verify_coloring(k2, Coloring((1, 2), 3)).unused_color == 3
    with pytest.raises(ValueError):
        verify_coloring(k2, Coloring((1, 0), 2))
    with pytest.raises(ValueError):
        verify_coloring(k2, Coloring((1,), 1))
    assert verify_coloring(c7, chromatic_number(c7)[1])


def test_canonical_solution_examples(k5, c7, split_type_graph):
    dec, _, fam = stages(k5)
    assert canonical_solution_from_coloring(k5, dec, fam, chromatic_number(k5)[1]) == [5]
    res = color_graph(c7)
    x = canonical_solution_from_coloring(c7, res.decomposition, res.family, res.coloring)
    assert sum(x) == 3 and res.ilp.is_feasible(x)
    g, dec = blow_up(split_type_graph)
    fam = enumerate_mis(split_type_graph)
    c = reconstruct_coloring(g, dec, fam, [3, 1])
    x = canonical_solution_from_coloring(g, dec, fam, c)
    assert x == [3, 1]


def test_canonical_solution_rejects_non_canonical(k33):
    dec, _, fam = stages(k33)
    c = Coloring((1, 2, 1, 3, 3, 3), 3)  # proper, but one side uses two colors
    assert check_canonical(dec, c) is not None
    with pytest.raises(ContractViolation, match="monochromatic"):
        canonical_solution_from_coloring(k33, dec, fam, c)


def check_result(g, res):
    assert verify_coloring(g, res.coloring)
    assert check_canonical(res.decomposition, res.coloring) is None
    assert res.chi == res.solution.objective_value
    assert len(set(res.coloring.colors)) == res.chi
    x = canonical_solution_from_coloring(g, res.decomposition, res.family, res.coloring)
    assert res.ilp.is_feasible(x) and sum(x) == res.solution.objective_value


@given(graphs(max_n=9))
def test_pipeline_matches_oracle(g):
    res = color_graph(g)
    assert res.chi == oracle_chromatic(g)
    check_result(g, res)


@given(type_graphs(max_k=6, max_w=3))
def test_blow_ups_match_oracle(t):
    g, _ = blow_up(t)
    res = color_graph(g)
    assert res.chi == oracle_chromatic(g)
    check_result(g, res)


@given(type_graphs(max_k=7, max_w=40))
def test_type_graph_input_agrees_with_graph_input(t):
    res = color_type_graph(t)
    assert verify_coloring_on_type_graph(t, res.decomposition, res.coloring)
    g, _ = blow_up(t)
    assert verify_coloring(g, res.coloring)
    assert color_graph(g).chi == res.chi


def test_type_graph_verifier_finds_clash():
    t = TypeGraph(2, (2, 1), frozenset({(0, 1)}), (True, True))
    res = color_type_graph(t)
    assert res.chi == 3
    bad = Coloring((1, 1, 2), 2)
    assert verify_coloring_on_type_graph(t, res.decomposition, bad).bad_edge == (0, 1)
    bad = Coloring((1, 2, 2), 2)
    assert verify_coloring_on_type_graph(t, res.decomposition, bad).bad_edge == (1, 2)


def test_accepts_plain_vector_or_solution(c7):
    dec, t, fam = stages(c7)
    sol = solve_covering_ilp(build_coloring_ilp(t, fam))
    assert isinstance(sol, IlpSolution)
    assert reconstruct_coloring(c7, dec, fam, sol) == reconstruct_coloring(None, dec, fam, list(sol.x))


def test_coloring_text_round_trip(c7):
    c = chromatic_number(c7)[1]
    text = write_coloring(c)
    assert text.splitlines()[0] == "s 3" and len(text.splitlines()) == 8
    assert parse_coloring(text) == c


@pytest.mark.parametrize("text", ["v 1 1", "s 2\nv 2 1", "s 2\nv 1 1\nv 1 2", "s x"])
def test_coloring_parse_errors(text):
    with pytest.raises(ValueError):
        parse_coloring(text)


def test_family_order_drives_colors():
    fam = MisFamily(1, ((0,),))
    dec = compute_nd_decomposition(complete(3))
    assert reconstruct_coloring(None, dec, fam, [4]).num_colors == 3
