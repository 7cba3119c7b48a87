import itertools

import networkx as nx
import pytest

from eo_strata.catalog.golden import golden_hasse_edges, names_by_young
from eo_strata.strata.core import GroupMismatchError, InvalidTypeError, YoungType, enumerate_young_types, \
    stratum_codim
from eo_strata.strata.poset import hasse, orders_match, to_dot, young_leq
from tests.conftest import mu

G4_EDGES = {
    ("{}", "{1}"), ("{1}", "{2}"), ("{2}", "{3}"), ("{3}", "{4}"), ("{2}", "{2,1}"), ("{3}", "{3,1}"),
    ("{4}", "{4,1}"), ("{2,1}", "{3,1}"), ("{3,1}", "{4,1}"), ("{3,1}", "{3,2}"), ("{4,1}", "{4,2}"),
    ("{3,2}", "{4,2}"), ("{4,2}", "{4,3}"), ("{3,2}", "{3,2,1}"), ("{4,2}", "{4,2,1}"), ("{4,3}", "{4,3,1}"),
    ("{3,2,1}", "{4,2,1}"), ("{4,2,1}", "{4,3,1}"), ("{4,3,1}", "{4,3,2}"), ("{4,3,2}", "{4,3,2,1}"),
}


def test_young_leq_examples():
    for young in enumerate_young_types(3):
        assert young_leq(mu(3), young)
    assert young_leq(mu(4, 2, 1), mu(4, 3, 1))
    assert not young_leq(mu(4, 4), mu(4, 3, 1))
    assert not young_leq(mu(4, 3, 1), mu(4, 4))
    with pytest.raises(GroupMismatchError):
        young_leq(mu(2, 1), mu(3, 1))


@pytest.mark.parametrize("g", range(1, 6))
def test_young_leq_is_partial_order(g):
    types = enumerate_young_types(g)
    for a in types:
        assert young_leq(a, a)
    for a, b in itertools.product(types, repeat=2):
        if young_leq(a, b) and young_leq(b, a):
            assert a == b
    for a, b, c in itertools.product(types, repeat=3):
        if young_leq(a, b) and young_leq(b, c):
            assert young_leq(a, c)


def test_small_diagrams():
    assert hasse(1).edge_strings() == {("{}", "{1}")}
    assert hasse(2).edge_strings() == {("{}", "{1}"), ("{1}", "{2}"), ("{2}", "{2,1}")}


def test_g4_diagram():
    diagram = hasse(4)
    assert len(diagram.nodes) == 16
    assert len(diagram.edges) == 20
    assert diagram.edge_strings() == G4_EDGES
    assert set(diagram.edges) == set(golden_hasse_edges())


@pytest.mark.parametrize("g", range(1, 7))
def test_diagram_closes_to_young_order(g):
    diagram = hasse(g)
    graph = diagram.graph
    assert nx.is_directed_acyclic_graph(graph)
    for a in diagram.nodes:
        assert nx.descendants(graph, a) == {b for b in diagram.nodes if b != a and young_leq(a, b)}
    assert [n for n in graph if graph.in_degree(n) == 0] == [YoungType(g, ())]
    assert [n for n in graph if graph.out_degree(n) == 0] == [YoungType(g, range(g, 0, -1))]
    for a, b in diagram.edges:
        assert stratum_codim(b) >= stratum_codim(a) + 1


@pytest.mark.parametrize("g", range(1, 5))
def test_orders_match(g):
    assert orders_match(g)


def test_orders_match_bound():
    with pytest.raises(InvalidTypeError):
        orders_match(7)


def test_to_dot():
    diagram = hasse(4)
    dot = to_dot(diagram)
    assert dot == to_dot(hasse(4))
    assert dot.startswith("digraph hasse_g4 {")
    assert sum(1 for line in dot.splitlines() if "->" in line) == 20
    assert sum(1 for line in dot.splitlines() if "[label=" in line) == 16
    assert '  "{4,3,1}" -> "{4,3,2}";' in dot.splitlines()
    named = to_dot(diagram, names_by_young(4))
    assert "I[4,3]" in named
