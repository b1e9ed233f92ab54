import itertools

import pytest
from hypothesis import HealthCheck, settings, strategies as st

from ndcolor.graph import Graph, complete, complete_bipartite, cycle, empty, path
from ndcolor.nd import TypeGraph

settings.register_profile("default", max_examples=100, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


@st.composite
def graphs(draw, max_n=10, min_n=0):
    n = draw(st.integers(min_n, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    keep = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, [e for e, k in zip(pairs, keep) if k])


@st.composite
def type_graphs(draw, max_k=8, max_w=4, min_k=1):
    k = draw(st.integers(min_k, max_k))
    pairs = list(itertools.combinations(range(k), 2))
    keep = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    loops = draw(st.lists(st.booleans(), min_size=k, max_size=k))
    weights = draw(st.lists(st.integers(1, max_w), min_size=k, max_size=k))
    return TypeGraph(k, tuple(weights), frozenset(e for e, x in zip(pairs, keep) if x), tuple(loops))


@pytest.fixture
def c7():
    return cycle(7)


@pytest.fixture
def k5():
    return complete(5)


@pytest.fixture
def k33():
    return complete_bipartite(3, 3)


@pytest.fixture
def four_k1():
    return empty(4)


@pytest.fixture
def p4():
    return path(4)


@pytest.fixture
def split_type_graph():
    # K3 joined to an independent set of 4
    return TypeGraph(2, (3, 4), frozenset({(0, 1)}), (True, False))
