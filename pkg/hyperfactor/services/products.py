"""Cartesian, normal and strong products of simple hypergraphs.

Product vertices are encoded row-major: vertex (v1, v2) of H1 x H2 has id
v1 * n2 + v2. Non-Cartesian edges of the normal product are the graphs of
injective maps from the smaller factor edge into the larger one; those of
the strong product are the graphs of surjections from the larger edge onto
the smaller one.
"""

import logging
from functools import reduce
from itertools import permutations, product as cartesian_power
from typing import Iterator, Optional, Sequence, Tuple

from ..config import Caps, resolve_caps
from ..exceptions import CapExceededError, InvalidArgumentError
from ..guards import require_cap, require_simple, require_vertex
from ..models import (
    Bracketing,
    Coordinates,
    CountReport,
    Edge,
    EdgeClassification,
    Graph,
    Hypergraph,
    ProductKind,
)
from .counting import count_noncartesian_formula
from .hypergraphs import induced, single_edge
from .isomorphism import find_isomorphism, is_isomorphic_under

logger = logging.getLogger(__name__)


def _injective_edges(e1: Edge, e2: Edge, n2: int) -> Iterator[Edge]:
    if len(e1) <= len(e2):
        for image in permutations(e2, len(e1)):
            yield tuple(a * n2 + b for a, b in zip(e1, image))
    else:
        for image in permutations(e1, len(e2)):
            yield tuple(sorted(a * n2 + b for b, a in zip(e2, image)))


def _surjective_edges(e1: Edge, e2: Edge, n2: int) -> Iterator[Edge]:
    if len(e1) >= len(e2):
        target = len(e2)
        for image in cartesian_power(e2, repeat=len(e1)):
            if len(set(image)) == target:
                yield tuple(a * n2 + b for a, b in zip(e1, image))
    else:
        target = len(e1)
        for image in cartesian_power(e1, repeat=len(e2)):
            if len(set(image)) == target:
                yield tuple(sorted(a * n2 + b for b, a in zip(e2, image)))


def noncartesian_edges(e1: Edge, e2: Edge, n2: int, kind: ProductKind) -> Iterator[Edge]:
    """Non-Cartesian edges of e1 ⊛ e2 inside a product whose second factor has n2 vertices."""
    if kind is ProductKind.NORMAL:
        return _injective_edges(e1, e2, n2)
    if kind is ProductKind.STRONG:
        return _surjective_edges(e1, e2, n2)
    return iter(())


def product(
    h1: Hypergraph, h2: Hypergraph, kind: ProductKind, caps: Optional[Caps] = None
) -> Tuple[Hypergraph, Coordinates]:
    kind = ProductKind.parse(kind)
    caps = resolve_caps(caps)
    require_simple(h1)
    require_simple(h2)
    n1, n2 = h1.n, h2.n
    require_cap("max_vertices", n1 * n2, caps.max_vertices)
    require_cap("rank", max(h1.rank, h2.rank), caps.rank)

    edges = set()
    for e1 in h1.edges:
        for x2 in range(n2):
            edges.add(tuple(a * n2 + x2 for a in e1))
    for x1 in range(n1):
        base = x1 * n2
        for e2 in h2.edges:
            edges.add(tuple(base + b for b in e2))
    require_cap("max_edges", len(edges), caps.max_edges)

    if kind is not ProductKind.CARTESIAN:
        for e1 in h1.edges:
            for e2 in h2.edges:
                edges.update(noncartesian_edges(e1, e2, n2, kind))
                if len(edges) > caps.max_edges:
                    raise CapExceededError("max_edges", len(edges), caps.max_edges)

    result = Hypergraph(n1 * n2, tuple(sorted(edges)))
    logger.debug("%s product: %d x %d vertices -> %d edges", kind.value, n1, n2, result.m)
    return result, Coordinates.grid((n1, n2))


def product_all(
    factors: Sequence[Hypergraph], kind: ProductKind, caps: Optional[Caps] = None
) -> Tuple[Hypergraph, Coordinates]:
    """Left-nested product ((H1 ⊛ H2) ⊛ H3) ... with row-major grid coordinates.

    The Cartesian and normal products do not depend on the nesting. The
    strong product does once an edge has more than two vertices: with
    T3 a single 3-edge, (T3 ⊠ K2) ⊠ K2 has 82 edges and T3 ⊠ (K2 ⊠ K2)
    has 58. Use ``product_tree`` to rebuild a specific nesting.
    """
    if not factors:
        return Hypergraph(1, ()), Coordinates((), ((),))
    result = reduce(lambda acc, h: product(acc, h, kind, caps)[0], factors[1:], factors[0])
    return result, Coordinates.grid(tuple(h.n for h in factors))


def bracketing_leaves(tree: Bracketing) -> Tuple[int, ...]:
    if isinstance(tree, int):
        return (tree,)
    left, right = tree
    return bracketing_leaves(left) + bracketing_leaves(right)


def left_nested(count: int) -> Optional[Bracketing]:
    """The nesting used by ``product_all`` for ``count`` factors."""
    if count == 0:
        return None
    return reduce(lambda acc, i: (acc, i), range(1, count), 0)


def format_bracketing(tree: Optional[Bracketing]) -> str:
    if tree is None:
        return "-"
    if isinstance(tree, int):
        return f"H{tree}"
    sides = (format_bracketing(side) if isinstance(side, int) else f"({format_bracketing(side)})" for side in tree)
    return " * ".join(sides)


def product_tree(
    factors: Sequence[Hypergraph], tree: Bracketing, kind: ProductKind, caps: Optional[Caps] = None
) -> Tuple[Hypergraph, Coordinates]:
    """Product of ``factors`` nested as ``tree``; leaves must read 0, 1, ... from left to right.

    Row-major codes do not depend on the nesting, so the coordinates are
    the same grid as for ``product_all``.
    """
    if bracketing_leaves(tree) != tuple(range(len(factors))):
        raise InvalidArgumentError(f"bracketing {tree!r} does not list factors 0..{len(factors) - 1} in order")

    def build(node: Bracketing) -> Hypergraph:
        if isinstance(node, int):
            return factors[node]
        left, right = node
        return product(build(left), build(right), kind, caps)[0]

    return build(tree), Coordinates.grid(tuple(h.n for h in factors))


def edge_product(a: int, b: int, kind: ProductKind, caps: Optional[Caps] = None) -> Tuple[Hypergraph, Coordinates]:
    """Product e1 ⊛ e2 of two single-edge hypergraphs with |e1| = a, |e2| = b."""
    if a < 2 or b < 2:
        raise InvalidArgumentError("edges of simple hypergraphs have at least two vertices")
    return product(single_edge(a), single_edge(b), kind, caps)


def graph_product(g1: Graph, g2: Graph, kind: ProductKind) -> Graph:
    """Cartesian or strong graph product; normal and strong coincide on graphs."""
    kind = ProductKind.parse(kind)
    n2 = g2.n
    pairs = []
    for x1 in range(g1.n):
        for a, b in g2.edges:
            pairs.append((x1 * n2 + a, x1 * n2 + b))
    for a, b in g1.edges:
        for x2 in range(n2):
            pairs.append((a * n2 + x2, b * n2 + x2))
        if kind is not ProductKind.CARTESIAN:
            for c, d in g2.edges:
                pairs.append((a * n2 + c, b * n2 + d))
                pairs.append((a * n2 + d, b * n2 + c))
    return Graph.from_edges(g1.n * n2, pairs)


def combine_coordinates(c1: Coordinates, c2: Coordinates) -> Coordinates:
    """Coordinates of a product whose factors carry their own coordinates."""
    return Coordinates(
        c1.dims + c2.dims,
        tuple(t1 + t2 for t1 in c1.coord for t2 in c2.coord),
    )


def _check_coordinates(h: Hypergraph, c: Coordinates) -> None:
    if c.n != h.n:
        raise InvalidArgumentError(f"coordinates cover {c.n} vertices, hypergraph has {h.n}")


def edge_color(e: Edge, c: Coordinates) -> Optional[int]:
    varying = [j for j in range(c.factor_count) if len(c.projection(e, j)) > 1]
    if len(varying) == 1 and len(e) > 1 and len(c.projection(e, varying[0])) == len(e):
        return varying[0]
    return None


def classify_edges(h: Hypergraph, c: Coordinates) -> EdgeClassification:
    _check_coordinates(h, c)
    return EdgeClassification(tuple(edge_color(e, c) for e in h.edges))


def _check_index(c: Coordinates, j: int) -> None:
    if not 0 <= j < c.factor_count:
        raise InvalidArgumentError(f"factor index {j} outside [0, {c.factor_count})")


def layer_vertices(c: Coordinates, j: int, w: int) -> Tuple[int, ...]:
    fixed = c.coord[w]
    return tuple(
        v for v, tup in enumerate(c.coord)
        if all(x == y for k, (x, y) in enumerate(zip(tup, fixed)) if k != j)
    )


def layer(h: Hypergraph, c: Coordinates, j: int, w: int) -> Tuple[Hypergraph, Tuple[int, ...]]:
    """The H_j-layer through w as an induced partial hypergraph, relabeled densely."""
    _check_coordinates(h, c)
    _check_index(c, j)
    require_vertex(h, w)
    return induced(h, layer_vertices(c, j, w))


def layers_isomorphic(h: Hypergraph, c: Coordinates, j: int, caps: Optional[Caps] = None) -> bool:
    """Every H_j-layer is isomorphic to the layer through vertex 0."""
    _check_coordinates(h, c)
    _check_index(c, j)
    reference, reference_map = layer(h, c, j, 0)
    by_coordinate = {c.coord[v][j]: i for i, v in enumerate(reference_map)}
    seen = {reference_map}
    for w in range(h.n):
        current, current_map = layer(h, c, j, w)
        if current_map in seen:
            continue
        seen.add(current_map)
        if current.n != reference.n:
            return False
        seeded = tuple(by_coordinate.get(c.coord[v][j], -1) for v in current_map)
        if sorted(seeded) == list(range(current.n)) and is_isomorphic_under(current, reference, seeded):
            continue
        if find_isomorphism(current, reference, caps) is None:
            return False
    return True


def count_noncartesian_exact(
    h1: Hypergraph, h2: Hypergraph, kind: ProductKind, caps: Optional[Caps] = None
) -> CountReport:
    """Distinct non-Cartesian edges actually present, next to the closed-form count."""
    kind = ProductKind.parse(kind)
    if kind is ProductKind.CARTESIAN:
        raise InvalidArgumentError("the Cartesian product has no non-Cartesian edges to count")
    h, coords = product(h1, h2, kind, caps)
    enumerated = len(classify_edges(h, coords).noncartesian_indices())
    formula = count_noncartesian_formula(h1, h2, kind, caps)
    if enumerated != formula:
        logger.warning(
            "%s product: formula counts %d non-Cartesian edges, %d are distinct "
            "(factor edges sharing two or more vertices)",
            kind.value,
            formula,
            enumerated,
        )
    return CountReport(kind=kind, formula_value=formula, enumerated_value=enumerated)
