import pytest
from hypothesis import strategies as st

from hypereuler import Hypergraph


def tri():
    return Hypergraph.build({1, 2, 3}, [{1, 2}, {2, 3}, {1, 3}])


def bowtie():
    return Hypergraph.build(
        {1, 2, 3, 4, 5}, [{1, 2}, {2, 3}, {1, 3}, {3, 4}, {4, 5}, {3, 5}]
    )


def two_tri():
    return Hypergraph.build(
        {1, 2, 3, 4, 5, 6}, [{1, 2}, {2, 3}, {1, 3}, {4, 5}, {5, 6}, {4, 6}]
    )


def h3():
    return Hypergraph.build({1, 2, 3, 4}, [{1, 2, 3}, {1, 2, 4}, {3, 4}])


def star():
    return Hypergraph.build({0, 1, 2}, [{0, 1}, {0, 1}, {0, 2}])


def bridge():
    return Hypergraph.build(
        {1, 2, 3, 4, 5, 6},
        [{1, 2}, {2, 3}, {1, 3}, {3, 4}, {4, 5}, {5, 6}, {4, 6}],
    )


@pytest.fixture
def TRI():
    return tri()


@pytest.fixture
def BOWTIE():
    return bowtie()


@pytest.fixture
def TWO_TRI():
    return two_tri()


@pytest.fixture
def H3():
    return h3()


@pytest.fixture
def STAR():
    return star()


@pytest.fixture
def BRIDGE():
    return bridge()


@pytest.fixture
def all_fixtures():
    return {
        "TRI": tri(),
        "BOWTIE": bowtie(),
        "TWO_TRI": two_tri(),
        "H3": h3(),
        "STAR": star(),
        "BRIDGE": bridge(),
    }


@st.composite
def small_hypergraphs(draw, max_n=6, max_m=5, min_edge_size=0):
    """Arbitrary small hypergraphs (possibly disconnected, small edges allowed)."""
    n = draw(st.integers(min_value=max(1, min_edge_size), max_value=max(max_n, min_edge_size)))
    vs = list(range(1, n + 1))
    m = draw(st.integers(min_value=0, max_value=max_m))
    edges = [
        draw(st.frozensets(st.sampled_from(vs), min_size=min_edge_size, max_size=n))
        for _ in range(m)
    ]
    return Hypergraph(frozenset(vs), tuple(edges))
