"""Prime factor decomposition with respect to the Cartesian product.

Graphs are coloured by a square-property closure whose classes refine the
product relation; the finest factorization is then found by splitting off
minimal colour groups whose binary split reproduces the input edge-exactly.
Hypergraphs reuse the colouring of their 2-section: every hyperedge is a
clique and cliques never leave a layer, so each hyperedge is monochromatic
and hyperedge colours can be grouped the same way.
"""

import logging
from itertools import combinations
from typing import Dict, List, Optional, Sequence, Set, Tuple

import networkx as nx

from ..config import Caps, resolve_caps
from ..exceptions import FactorizationInvariantError, InvalidArgumentError
from ..guards import require_cap, require_connected, require_simple
from ..models import (
    Coordinates,
    Graph,
    GraphFactorization,
    Hypergraph,
    HypergraphFactorization,
    ProductKind,
)
from .hypergraphs import is_simple, two_section
from .products import product, product_all

logger = logging.getLogger(__name__)


class _Partition:
    def __init__(self, size: int) -> None:
        self.parent = list(range(size))

    def find(self, item: int) -> int:
        root = item
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[item] != root:
            self.parent[item], item = root, self.parent[item]
        return root

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[max(ra, rb)] = min(ra, rb)


def product_coloring(g: Graph) -> Tuple[int, ...]:
    """Colour class per edge of ``g`` (aligned with ``g.edges``).

    Two edges xy, xz at a common vertex get one class when y and z are
    adjacent or do not span exactly one chordless square; otherwise the
    opposite edges of that square are merged.
    """
    index = {pair: i for i, pair in enumerate(g.edges)}

    def edge_id(a: int, b: int) -> int:
        return index[(a, b) if a < b else (b, a)]

    classes = _Partition(len(g.edges))
    adjacency = [set(neighbors) for neighbors in g.adjacency]
    for x in range(g.n):
        for y, z in combinations(g.adjacency[x], 2):
            xy, xz = edge_id(x, y), edge_id(x, z)
            if z in adjacency[y]:
                classes.union(xy, xz)
                continue
            common = (adjacency[y] & adjacency[z]) - {x}
            if len(common) != 1:
                classes.union(xy, xz)
                continue
            (w,) = common
            classes.union(xy, edge_id(z, w))
            classes.union(xz, edge_id(y, w))

    numbering: Dict[int, int] = {}
    colors = []
    for i in range(len(g.edges)):
        root = classes.find(i)
        colors.append(numbering.setdefault(root, len(numbering)))
    return tuple(colors)


def _component_labels(h: Hypergraph, keep: Sequence[bool]) -> Tuple[int, ...]:
    """Component label per vertex using only edges flagged in ``keep``."""
    graph = nx.Graph()
    graph.add_nodes_from(range(h.n))
    for edge, flag in zip(h.edges, keep):
        if flag:
            graph.add_edges_from(zip(edge, edge[1:]))
    labels = [0] * h.n
    for label, component in enumerate(sorted(nx.connected_components(graph), key=min)):
        for v in component:
            labels[v] = label
    return tuple(labels)


def _factor_image(h: Hypergraph, keep: Sequence[bool], labels: Sequence[int]) -> Optional[Hypergraph]:
    """Quotient of the kept edges under ``labels``; None if an edge collapses."""
    edges = set()
    for edge, flag in zip(h.edges, keep):
        if not flag:
            continue
        image = tuple(sorted({labels[v] for v in edge}))
        if len(image) != len(edge):
            return None
        edges.add(image)
    return Hypergraph(max(labels) + 1, tuple(sorted(edges)))


def try_split(h: Hypergraph, colors: Sequence[int], group: Set[int]) -> Optional[Tuple[Hypergraph, Hypergraph]]:
    """Return (A, B) when h = A □ B with A carrying exactly the colours in ``group``."""
    in_group = [c in group for c in colors]
    a_labels = _component_labels(h, [not flag for flag in in_group])
    b_labels = _component_labels(h, in_group)
    na, nb = max(a_labels) + 1, max(b_labels) + 1
    if na * nb != h.n or na == 1 or nb == 1:
        return None
    if len(set(zip(a_labels, b_labels))) != h.n:
        return None
    a = _factor_image(h, in_group, a_labels)
    b = _factor_image(h, [not flag for flag in in_group], b_labels)
    if a is None or b is None or not is_simple(a) or not is_simple(b):
        return None
    rebuilt, _ = product(a, b, ProductKind.CARTESIAN)
    mapped = {tuple(sorted(a_labels[v] * nb + b_labels[v] for v in e)) for e in h.edges}
    if mapped != rebuilt.edge_set:
        return None
    return a, b


def finest_grouping(h: Hypergraph, colors: Sequence[int], caps: Optional[Caps] = None) -> List[Tuple[int, ...]]:
    """Group colours into prime factors: minimal valid groups first, lexicographic within a size."""
    caps = resolve_caps(caps)
    palette = sorted(set(colors))
    require_cap("max_classes", len(palette), caps.max_classes)
    groups: List[Tuple[int, ...]] = []
    remaining = list(palette)
    while remaining:
        found = None
        for size in range(1, len(remaining)):
            for candidate in combinations(remaining, size):
                if try_split(h, colors, set(candidate)) is not None:
                    found = candidate
                    break
            if found is not None:
                break
        if found is None:
            groups.append(tuple(remaining))
            break
        logger.debug("split off colour group %s", found)
        groups.append(found)
        remaining = [c for c in remaining if c not in found]
    return sorted(groups)


def _assemble(
    h: Hypergraph, colors: Sequence[int], groups: Sequence[Tuple[int, ...]]
) -> Tuple[Tuple[Hypergraph, ...], Coordinates, Tuple[int, ...]]:
    group_of = {color: i for i, group in enumerate(groups) for color in group}
    edge_group = tuple(group_of[c] for c in colors)
    labels = []
    factors = []
    for i in range(len(groups)):
        keep = [g == i for g in edge_group]
        own = _component_labels(h, [not flag for flag in keep])
        factor = _factor_image(h, keep, own)
        if factor is None:
            raise FactorizationInvariantError(f"factor {i} collapses an edge")
        labels.append(own)
        factors.append(factor)
    try:
        coords = Coordinates(
            tuple(f.n for f in factors),
            tuple(tuple(own[v] for own in labels) for v in range(h.n)),
        )
    except InvalidArgumentError as exc:
        raise FactorizationInvariantError(f"coordinates are not a product grid ({exc.detail})")
    _verify_reconstruction(h, factors, coords)
    return tuple(factors), coords, edge_group


def _verify_reconstruction(h: Hypergraph, factors: Sequence[Hypergraph], coords: Coordinates) -> None:
    if not all(is_simple(f) for f in factors):
        raise FactorizationInvariantError("a factor is not simple")
    rebuilt, _ = product_all(factors, ProductKind.CARTESIAN)
    mapped = {tuple(sorted(coords.code(v) for v in e)) for e in h.edges}
    if mapped != rebuilt.edge_set:
        raise FactorizationInvariantError("factors do not reconstruct the input")
    if len(factors) > 1 and 2 ** len(factors) > h.n:
        raise FactorizationInvariantError(f"{len(factors)} factors exceed log2 of {h.n} vertices")


def graph_cartesian_pfd(g: Graph, caps: Optional[Caps] = None) -> GraphFactorization:
    h = g.as_hypergraph()
    require_connected(h)
    colors = product_coloring(g)
    groups = finest_grouping(h, colors, caps)
    factors, coords, edge_group = _assemble(h, colors, groups)
    logger.info("graph Cartesian PFD: %d vertices, %d colour classes, %d factors", g.n, len(set(colors)), len(factors))
    return GraphFactorization(
        factors=tuple(Graph.from_edges(f.n, f.edges) for f in factors),
        coords=coords,
        edge_color=edge_group,
    )


def hypergraph_cartesian_pfd(h: Hypergraph, caps: Optional[Caps] = None) -> HypergraphFactorization:
    require_simple(h)
    require_connected(h)
    section = two_section(h)
    graph_pfd = graph_cartesian_pfd(section, caps)
    pair_color = dict(zip(section.edges, graph_pfd.edge_color))

    colors = []
    for edge in h.edges:
        seen = {pair_color[pair] for pair in combinations(edge, 2)}
        if len(seen) != 1:
            raise FactorizationInvariantError(f"hyperedge {edge} spans several 2-section layers", edge)
        colors.append(seen.pop())

    groups = finest_grouping(h, colors, caps)
    factors, coords, edge_group = _assemble(h, colors, groups)
    logger.info(
        "hypergraph Cartesian PFD: %d graph factors grouped into %d hypergraph factors",
        len(graph_pfd.factors),
        len(factors),
    )
    return HypergraphFactorization(factors=factors, coords=coords, edge_color=edge_group)


def assign_coordinates(h: Hypergraph, f: HypergraphFactorization) -> Coordinates:
    """Coordinates of every vertex with respect to a Cartesian factorization of ``h``."""
    if len(f.edge_color) != h.m:
        raise FactorizationInvariantError("edge colouring does not match the hypergraph")
    groups = [(i,) for i in range(len(f.factors))]
    if set(f.edge_color) - set(range(len(f.factors))):
        raise FactorizationInvariantError("edge colour outside the factor index set")
    _, coords, _ = _assemble(h, f.edge_color, groups)
    if coords.dims != tuple(factor.n for factor in f.factors):
        raise FactorizationInvariantError("layer sizes differ from the factor sizes")
    return coords


def is_prime_cartesian(h: Hypergraph, caps: Optional[Caps] = None) -> bool:
    return len(hypergraph_cartesian_pfd(h, caps).factors) <= 1
