"""Hypergraph primitives: validation, neighborhoods, thinness, 2-section, paths."""

import math
from itertools import combinations
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple, Union

import networkx as nx

from ..exceptions import InvalidArgumentError
from ..guards import require_vertex
from ..models import Edge, Graph, Hypergraph, ValidationReport

HypergraphLike = Union[Hypergraph, Graph]


def as_hypergraph(h: HypergraphLike) -> Hypergraph:
    return h.as_hypergraph() if isinstance(h, Graph) else h


def k1() -> Hypergraph:
    return Hypergraph(1, ())


def single_edge(k: int) -> Hypergraph:
    return Hypergraph(k, (tuple(range(k)),))


def complete_graph(n: int) -> Hypergraph:
    return Hypergraph(n, tuple(combinations(range(n), 2)))


def path_graph(n: int) -> Hypergraph:
    return Hypergraph(n, tuple((i, i + 1) for i in range(n - 1)))


def cycle_graph(n: int) -> Hypergraph:
    if n < 3:
        raise InvalidArgumentError("a cycle needs at least 3 vertices")
    return Hypergraph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def closed_neighborhoods(h: HypergraphLike) -> Tuple[FrozenSet[int], ...]:
    if isinstance(h, Graph):
        return h.closed_neighborhoods
    sets: List[set] = [{v} for v in range(h.n)]
    for edge in h.edges:
        for v in edge:
            sets[v].update(edge)
    return tuple(frozenset(s) for s in sets)


def closed_neighborhood(h: HypergraphLike, v: int) -> FrozenSet[int]:
    require_vertex(h, v)
    return closed_neighborhoods(h)[v]


def open_neighborhood(h: HypergraphLike, v: int) -> FrozenSet[int]:
    return closed_neighborhood(h, v) - {v}


def simplicity_witness(h: HypergraphLike) -> Tuple[Edge, ...]:
    """Return () when simple, (e,) for a singleton edge, (e, f) when e ⊂ f."""
    h = as_hypergraph(h)
    for edge in h.edges:
        if len(edge) < 2:
            return (edge,)
    members = [frozenset(e) for e in h.edges]
    for index, edge in enumerate(h.edges):
        for other in h.incidence[edge[0]]:
            if other != index and members[index] <= members[other]:
                return (edge, h.edges[other])
    return ()


def is_simple(h: HypergraphLike) -> bool:
    return not simplicity_witness(h)


def twin_classes(h: HypergraphLike) -> Tuple[Tuple[int, ...], ...]:
    """Classes (size >= 2) of vertices sharing a closed neighborhood."""
    groups: Dict[FrozenSet[int], List[int]] = {}
    for v, hood in enumerate(closed_neighborhoods(h)):
        groups.setdefault(hood, []).append(v)
    return tuple(sorted(tuple(g) for g in groups.values() if len(g) > 1))


def is_thin(h: HypergraphLike) -> Tuple[bool, Optional[Tuple[int, int]]]:
    classes = twin_classes(h)
    if not classes:
        return True, None
    first = classes[0]
    return False, (first[0], first[1])


def two_section(h: HypergraphLike) -> Graph:
    if isinstance(h, Graph):
        return h
    pairs = set()
    for edge in h.edges:
        pairs.update(combinations(edge, 2))
    return Graph.from_edges(h.n, pairs)


def _nx_two_section(h: HypergraphLike) -> nx.Graph:
    return two_section(h).to_networkx()


def connected_components(h: HypergraphLike) -> Tuple[Tuple[int, ...], ...]:
    """Vertex sets of the components, each ascending, ordered by smallest vertex."""
    components = (tuple(sorted(c)) for c in nx.connected_components(_nx_two_section(h)))
    return tuple(sorted(components))


def connectivity_witness(h: HypergraphLike) -> Optional[Tuple[int, int]]:
    components = connected_components(h)
    if len(components) <= 1:
        return None
    return components[0][0], components[1][0]


def is_connected(h: HypergraphLike) -> bool:
    return connectivity_witness(h) is None


def distance(h: HypergraphLike, u: int, v: int) -> float:
    """Shortest path length; equals the hypergraph distance by the distance formula."""
    require_vertex(h, u)
    require_vertex(h, v)
    try:
        return nx.shortest_path_length(_nx_two_section(h), u, v)
    except nx.NetworkXNoPath:
        return math.inf


def all_distances(h: HypergraphLike) -> Dict[int, Dict[int, int]]:
    return {u: dict(lengths) for u, lengths in nx.all_pairs_shortest_path_length(_nx_two_section(h))}


def validate(h: Hypergraph) -> ValidationReport:
    simple_witness = simplicity_witness(h)
    connected_witness = connectivity_witness(h)
    thin, thin_witness = is_thin(h)
    return ValidationReport(
        simple=not simple_witness,
        connected=connected_witness is None,
        thin=thin,
        simple_witness=simple_witness,
        connected_witness=connected_witness,
        thin_witness=thin_witness,
    )


def induced(h: Hypergraph, vertices: Iterable[int]) -> Tuple[Hypergraph, Tuple[int, ...]]:
    """Induced partial hypergraph <V'> relabeled densely; returns (hypergraph, new->old map)."""
    keep = tuple(sorted(set(vertices)))
    if not keep:
        raise InvalidArgumentError("induced hypergraph needs at least one vertex")
    for v in keep:
        require_vertex(h, v)
    position = {v: i for i, v in enumerate(keep)}
    edges = [tuple(position[v] for v in e) for e in h.edges if all(v in position for v in e)]
    return Hypergraph.from_edges(len(keep), edges), keep


def partial(h: Hypergraph, edges: Iterable[Sequence[int]]) -> Hypergraph:
    """Spanning partial hypergraph keeping only the given edges of ``h``."""
    chosen = Hypergraph.from_edges(h.n, edges)
    missing = chosen.edge_set - h.edge_set
    if missing:
        raise InvalidArgumentError(f"{sorted(missing)[0]} is not an edge of the hypergraph")
    return chosen


def relabel(h: Hypergraph, mapping: Sequence[int], n: Optional[int] = None) -> Hypergraph:
    """Image of ``h`` under the vertex map ``v -> mapping[v]``."""
    return Hypergraph.from_edges(h.n if n is None else n, ([mapping[v] for v in e] for e in h.edges))


def is_homomorphism(h1: Hypergraph, h2: Hypergraph, phi: Sequence[int]) -> bool:
    if len(phi) != h1.n:
        raise InvalidArgumentError("map length differs from the source vertex count")
    if any(not 0 <= x < h2.n for x in phi):
        return False
    return all(tuple(sorted({phi[v] for v in e})) in h2.edge_set for e in h1.edges)
