"""Dispensable edges and the Cartesian skeleton.

Dispensability is evaluated on the 2-section only; a hyperedge is removed
when it contains a dispensable pair of the 2-section.
"""

import logging
from typing import FrozenSet, Iterable, Optional, Tuple

from ..guards import require_connected, require_simple
from ..models import DispensableSet, Graph, Hypergraph, SkeletonResult
from .hypergraphs import HypergraphLike, as_hypergraph, is_connected, is_thin, two_section

logger = logging.getLogger(__name__)


def _first_condition(nx_: FrozenSet[int], ny: FrozenSet[int], nz: FrozenSet[int]) -> bool:
    common = nx_ & ny
    return common < (nx_ & nz) or (nx_ < nz < ny)


def is_dispensable_pair(g: Graph, x: int, y: int, z: int) -> bool:
    """Both conditions of the dispensability definition for the edge xy and witness z."""
    hoods = g.closed_neighborhoods
    nx_, ny, nz = hoods[x], hoods[y], hoods[z]
    return _first_condition(nx_, ny, nz) and _first_condition(ny, nx_, nz)


def dispensable_graph_pairs(g: Graph, candidates: Optional[Iterable[int]] = None) -> FrozenSet[Tuple[int, int]]:
    """Edges {x, y} of ``g`` that are dispensable.

    A witness z must satisfy N[x] ∩ N[y] ⊊ N[x] ∩ N[z] or N[x] ⊊ N[z], both
    of which put z next to x, so only z in N(x) ∪ N(y) is scanned unless an
    explicit candidate set is given.
    """
    dispensable = set()
    scan_all = tuple(candidates) if candidates is not None else None
    for x, y in g.edges:
        pool = scan_all if scan_all is not None else (set(g.adjacency[x]) | set(g.adjacency[y]))
        for z in sorted(pool):
            if z in (x, y):
                continue
            if is_dispensable_pair(g, x, y, z):
                dispensable.add((x, y))
                break
    return frozenset(dispensable)


def lift_dispensable(h: Hypergraph, pairs: Iterable[Tuple[int, int]]) -> Tuple[Tuple[int, ...], ...]:
    """Hyperedges containing at least one of the given pairs."""
    removed = set()
    for x, y in pairs:
        shared = set(h.incidence[x]) & set(h.incidence[y])
        removed.update(shared)
    return tuple(h.edges[i] for i in sorted(removed))


def cartesian_skeleton(h: HypergraphLike) -> SkeletonResult:
    h = as_hypergraph(h)
    require_simple(h)
    require_connected(h)
    thin, witness = is_thin(h)
    if not thin:
        logger.warning(
            "skeleton of a non-thin hypergraph (twins %s): computed literally, no product guarantees",
            witness,
        )
    pairs = dispensable_graph_pairs(two_section(h))
    removed = lift_dispensable(h, pairs)
    gone = set(removed)
    skeleton = Hypergraph(h.n, tuple(e for e in h.edges if e not in gone))
    if not is_connected(skeleton):
        logger.warning("skeleton lost connectivity: %d of %d edges removed", len(removed), h.m)
    logger.info("skeleton: %d dispensable pairs, %d of %d hyperedges removed", len(pairs), len(removed), h.m)
    return SkeletonResult(
        skeleton=skeleton,
        removed=DispensableSet(graph_pairs=pairs, hyperedges=removed),
        thin=thin,
    )
