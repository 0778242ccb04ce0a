import logging
from collections import Counter
from typing import Optional, Sequence

import networkx as nx
from networkx.algorithms.isomorphism import GraphMatcher

from ..config import Caps, resolve_caps
from ..exceptions import InvalidArgumentError
from ..guards import require_cap
from ..models import Hypergraph, VertexBijection

logger = logging.getLogger(__name__)


def is_isomorphic_under(h1: Hypergraph, h2: Hypergraph, bijection: Sequence[int]) -> bool:
    """True iff ``bijection`` maps E(h1) exactly onto E(h2)."""
    if h1.n != h2.n:
        raise InvalidArgumentError(f"vertex counts differ: {h1.n} != {h2.n}")
    if len(bijection) != h1.n or sorted(bijection) != list(range(h1.n)):
        raise InvalidArgumentError("map is not a bijection of the vertex set")
    if h1.m != h2.m:
        return False
    image = {tuple(sorted(bijection[v] for v in e)) for e in h1.edges}
    return image == h2.edge_set


def _invariants(h: Hypergraph):
    return (
        h.n,
        h.m,
        tuple(sorted(Counter(len(e) for e in h.edges).items())),
        tuple(sorted(h.degree(v) for v in h.vertices)),
    )


def _incidence_graph(h: Hypergraph) -> nx.Graph:
    graph = nx.Graph()
    for v in h.vertices:
        graph.add_node(("v", v), label=("v", h.degree(v)))
    for index, edge in enumerate(h.edges):
        graph.add_node(("e", index), label=("e", len(edge)))
        graph.add_edges_from((("e", index), ("v", v)) for v in edge)
    return graph


def _same_label(a, b) -> bool:
    return a["label"] == b["label"]


def find_isomorphism(h1: Hypergraph, h2: Hypergraph, caps: Optional[Caps] = None) -> Optional[VertexBijection]:
    """Search a vertex bijection mapping h1 onto h2, or None.

    Vertex/edge incidence graphs are matched with VF2; nodes only match
    when they agree on kind and degree (vertices) or size (edges).
    """
    caps = resolve_caps(caps)
    require_cap("iso_vertices", max(h1.n, h2.n), caps.iso_vertices)
    if _invariants(h1) != _invariants(h2):
        return None
    matcher = GraphMatcher(_incidence_graph(h1), _incidence_graph(h2), node_match=_same_label)
    if not matcher.is_isomorphic():
        return None
    bijection = [0] * h1.n
    for (kind, source), (_, target) in matcher.mapping.items():
        if kind == "v":
            bijection[source] = target
    result = tuple(bijection)
    if not is_isomorphic_under(h1, h2, result):
        logger.error("incidence isomorphism did not lift to the hypergraphs %s / %s", h1, h2)
        return None
    return result


def are_isomorphic(h1: Hypergraph, h2: Hypergraph, caps: Optional[Caps] = None) -> bool:
    return find_isomorphism(h1, h2, caps) is not None
