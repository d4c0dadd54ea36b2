import pytest

from cubiccensus.canonical import are_isomorphic
from cubiccensus.counting import count_perfect_matchings
from cubiccensus.errors import ParameterOutOfRangeError
from cubiccensus.families import (
    KINDS,
    FamilySpec,
    complete_graph,
    cube,
    k33,
    k44_minus_matching,
    m_graph,
    mc_graph,
    moebius,
    named_graph,
    petersen,
    prism,
)
from cubiccensus.graph import classify, cyclomatic_number, find_ladder_bridges


def _cubic_connected(g):
    c = classify(g)
    return c.is_cubic and c.is_connected


@pytest.mark.parametrize("n", range(2, 20))
def test_m_graph_shape(n):
    g = m_graph(n)
    assert g.num_vertices == 2 * n and g.num_edges == 3 * n
    assert _cubic_connected(g)


def test_small_m_graphs():
    assert are_isomorphic(m_graph(2), complete_graph(4))
    assert are_isomorphic(m_graph(3), k33())
    assert are_isomorphic(m_graph(4), cube())
    assert are_isomorphic(cube(), k44_minus_matching())
    assert are_isomorphic(m_graph(5), moebius(10))


def test_m_graph_bipartite_from_three():
    # the Moebius ladder on 10 vertices has an odd number of rungs, hence bipartite
    assert not classify(m_graph(2)).is_bipartite
    for n in range(3, 16):
        assert classify(m_graph(n)).is_bipartite, n


def test_m_graph_numbering_is_deterministic():
    assert m_graph(9) == m_graph(9)


def test_m8_has_ladder_bridge_and_52_matchings():
    g = m_graph(8)
    assert find_ladder_bridges(g)
    assert count_perfect_matchings(g) == 52


@pytest.mark.parametrize("k", range(3, 15))
def test_mc_graph_shape(k):
    g = mc_graph(k)
    assert _cubic_connected(g)
    assert g.num_edges == 3 * k
    assert cyclomatic_number(g) == k + 1


def test_mc3_rungs():
    g = mc_graph(3)
    x = lambda i: i - 1  # noqa: E731
    y = lambda i: 3 + i - 1  # noqa: E731
    for a, b in [(x(1), y(2)), (x(2), y(1)), (x(3), y(3))]:
        assert g.has_edge(a, b)
    assert not g.has_edge(x(1), y(1))


def test_mc_graph_bipartite_exactly_for_even_k():
    for k in range(3, 15):
        assert classify(mc_graph(k)).is_bipartite == (k % 2 == 0)


def test_named_graphs():
    assert are_isomorphic(named_graph(FamilySpec("CUBE")), m_graph(4))
    assert are_isomorphic(named_graph(FamilySpec("MOEBIUS", 10)), m_graph(5))
    p3 = named_graph(FamilySpec("PRISM", 3))
    assert p3.num_vertices == 6 and _cubic_connected(p3) and not classify(p3).is_bipartite
    for kind in KINDS:
        param = {"Mn": 6, "MCk": 5, "MOEBIUS": 8, "PRISM": 4}.get(kind)
        assert _cubic_connected(named_graph(FamilySpec(kind, param)))
    assert petersen().num_vertices == 10 and prism(5).num_vertices == 10


@pytest.mark.parametrize(
    "kind, param",
    [("Mn", 1), ("MCk", 2), ("MOEBIUS", 4), ("PRISM", 2), ("Mn", None), ("HEAWOOD", None)],
)
def test_parameter_ranges(kind, param):
    with pytest.raises(ParameterOutOfRangeError):
        named_graph(FamilySpec(kind, param))
