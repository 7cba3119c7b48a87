"""
Specialization order on Young types, its Hasse diagram and the comparison with Bruhat order.
"""
import itertools
import logging
from typing import Dict, Optional, Tuple

import attr
import networkx as nx
from cached_property import cached_property

from eo_strata.strata.core import GroupMismatchError, InvalidTypeError, YoungType, enumerate_young_types, \
    stratum_codim
from eo_strata.strata.weyl import bruhat_leq, from_young

__all__ = ["MAX_ORDER_MATCH_G", "HasseDiagram", "young_leq", "hasse", "orders_match", "to_dot"]
log = logging.getLogger(__name__)

MAX_ORDER_MATCH_G = 6


def young_leq(a: YoungType, b: YoungType) -> bool:
    """containment of Young diagrams, missing parts read as 0"""
    if a.g != b.g:
        raise GroupMismatchError("Young types %s and %s belong to different g (%s, %s)" % (a, b, a.g, b.g))
    return all(a.part(j) <= b.part(j) for j in range(1, a.g + 1))


def _node_key(mu: YoungType):
    return stratum_codim(mu), mu.mu


@attr.s(frozen=True)
class HasseDiagram(object):
    g = attr.ib()  # type: int
    nodes = attr.ib(converter=tuple)  # type: Tuple[YoungType, ...]
    edges = attr.ib(converter=tuple)  # type: Tuple[Tuple[YoungType, YoungType], ...]

    @cached_property
    def graph(self) -> nx.DiGraph:
        graph = nx.DiGraph()
        graph.add_nodes_from(self.nodes)
        graph.add_edges_from(self.edges)
        return graph

    def edge_strings(self):
        return {(str(a), str(b)) for a, b in self.edges}


def _covers(mu: YoungType):
    """Young types obtained from mu by adding a single box"""
    parts = list(mu.mu) + [0]
    for j, part in enumerate(parts):
        bigger = parts[:j] + [part + 1] + parts[j + 1:]
        bigger = [v for v in bigger if v]
        if bigger[j] > mu.g or (j > 0 and bigger[j - 1] <= bigger[j]):
            continue
        yield YoungType(mu.g, bigger)


def hasse(g: int) -> HasseDiagram:
    if g < 1:
        raise InvalidTypeError("Dimension g must be a positive integer, got %r" % (g,))
    nodes = sorted(enumerate_young_types(g), key=_node_key)
    edges = sorted(((mu, cover) for mu in nodes for cover in _covers(mu)),
                   key=lambda edge: (_node_key(edge[0]), _node_key(edge[1])))
    diagram = HasseDiagram(g, nodes, edges)
    log.debug("Hasse diagram for g=%s has %s nodes and %s edges", g, len(nodes), len(edges))
    return diagram


def orders_match(g: int) -> bool:
    """young_leq(mu, mu') iff from_young(mu') <= from_young(mu) in Bruhat order, for all pairs"""
    if not 1 <= g <= MAX_ORDER_MATCH_G:
        raise InvalidTypeError("orders_match is only supported for 1 <= g <= %s, got %s" % (MAX_ORDER_MATCH_G, g))
    types = enumerate_young_types(g)
    elements = {mu: from_young(mu) for mu in types}
    mismatches = [(mu, nu) for mu, nu in itertools.product(types, repeat=2)
                  if young_leq(mu, nu) != bruhat_leq(elements[nu], elements[mu])]
    for mu, nu in mismatches:
        log.warning("Order mismatch at g=%s: %s <= %s is %s for Young types but %s for Bruhat order",
                    g, mu, nu, young_leq(mu, nu), bruhat_leq(elements[nu], elements[mu]))
    return not mismatches


def to_dot(diagram: HasseDiagram, names: Optional[Dict[YoungType, str]] = None) -> str:
    """
    DOT source of the diagram, edges pointing from the more generic to the more special type.
    Node ids are the Young type strings, so output only depends on the diagram.
    """
    lines = ["digraph hasse_g%s {" % diagram.g, "  rankdir=TB;"]
    for mu in diagram.nodes:
        label = str(mu)
        if names and mu in names:
            label = "%s\\n%s" % (label, names[mu])
        lines.append('  "%s" [label="%s"];' % (mu, label))
    for a, b in diagram.edges:
        lines.append('  "%s" -> "%s";' % (a, b))
    lines.append("}")
    return "\n".join(lines) + "\n"
