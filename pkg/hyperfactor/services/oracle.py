"""Brute-force reference implementations.

Everything here is written from the definitions and deliberately avoids
the fast-path modules: only the Hypergraph type, the caps and the error
classes are shared.
"""

import logging
import math
from itertools import combinations, product as cartesian_power
from typing import Dict, FrozenSet, Iterator, List, Optional, Sequence, Set, Tuple

from ..config import Caps, resolve_caps
from ..exceptions import CapExceededError, InvalidArgumentError
from ..models import BruteFactorization, Hypergraph, ProductKind

logger = logging.getLogger(__name__)

Block = Tuple[int, ...]


def _cap(name: str, value: int, limit: int) -> None:
    if value > limit:
        raise CapExceededError(name, value, limit)


# ---- products, straight from the definition ---------------------------------


def _definitional_product(h1: Hypergraph, h2: Hypergraph, kind: ProductKind) -> FrozenSet[Tuple[int, ...]]:
    n2 = h2.n
    edges: Set[Tuple[int, ...]] = set()
    for e1 in h1.edges:
        for b in range(n2):
            edges.add(tuple(sorted(a * n2 + b for a in e1)))
    for a in range(h1.n):
        for e2 in h2.edges:
            edges.add(tuple(sorted(a * n2 + b for b in e2)))
    if kind is ProductKind.CARTESIAN:
        return frozenset(edges)
    for e1 in h1.edges:
        for e2 in h2.edges:
            pairs = [(a, b) for a in e1 for b in e2]
            small, big = min(len(e1), len(e2)), max(len(e1), len(e2))
            size = big if kind is ProductKind.STRONG else small
            for chosen in combinations(pairs, size):
                p1 = {a for a, _ in chosen}
                p2 = {b for _, b in chosen}
                if kind is ProductKind.STRONG:
                    ok = p1 == set(e1) and p2 == set(e2)
                else:
                    ok = len(p1) == len(p2) == size
                if ok:
                    edges.add(tuple(sorted(a * n2 + b for a, b in chosen)))
    return frozenset(edges)


# ---- factor search ----------------------------------------------------------


def _induced_edge_count(h: Hypergraph, block: Sequence[int]) -> int:
    members = set(block)
    return sum(1 for e in h.edges if members.issuperset(e))


def _partitions(vertices: Sequence[int], size: int) -> Iterator[List[Block]]:
    """Unordered partitions of ``vertices`` into blocks of ``size``."""
    if not vertices:
        yield []
        return
    first, rest = vertices[0], vertices[1:]
    for others in combinations(rest, size - 1):
        block = (first,) + others
        taken = set(block)
        remaining = [v for v in rest if v not in taken]
        for tail in _partitions(remaining, size):
            yield [block] + tail


def _transversals(blocks: Sequence[Block], used: Set[int]) -> Iterator[List[Block]]:
    """Partitions into blocks meeting each of ``blocks`` exactly once."""
    if len(used) == sum(len(b) for b in blocks):
        yield []
        return
    anchor = next(v for v in blocks[0] if v not in used)
    choices = [[v for v in b if v not in used] for b in blocks[1:]]
    for picks in cartesian_power(*choices):
        block = (anchor,) + tuple(picks)
        for tail in _transversals(blocks, used | set(block)):
            yield [block] + tail


def _crossing_ok(h: Hypergraph, block_of: Dict[int, int], kind: ProductKind) -> bool:
    """Edges leaving a block meet every block at most once (Cartesian and normal only)."""
    if kind is ProductKind.STRONG:
        return True
    for e in h.edges:
        owners = [block_of[v] for v in e]
        if len(set(owners)) not in (1, len(owners)):
            return False
    return True


def _factor_on(h: Hypergraph, block: Block, label: Dict[int, int], size: int) -> Hypergraph:
    members = set(block)
    edges = sorted({tuple(sorted(label[v] for v in e)) for e in h.edges if members.issuperset(e)})
    return Hypergraph(size, tuple(edges))


def _splits(h: Hypergraph, kind: ProductKind) -> Iterator[Tuple[Hypergraph, Hypergraph, Tuple[int, ...]]]:
    n = h.n
    for n1 in range(2, n // 2 + 1):
        if n % n1:
            continue
        orders = [(n1, n // n1)] if n1 * n1 == n else [(n1, n // n1), (n // n1, n1)]
        for first, second in orders:
            yield from _splits_for(h, kind, first, second)


def _splits_for(
    h: Hypergraph, kind: ProductKind, n1: int, n2: int
) -> Iterator[Tuple[Hypergraph, Hypergraph, Tuple[int, ...]]]:
    # P-blocks are the H2-layers (size n2), Q-blocks the H1-layers (size n1).
    reference: Dict[str, int] = {}

    def same_count(key: str, block: Block) -> bool:
        count = _induced_edge_count(h, block)
        return reference.setdefault(key, count) == count

    for p_blocks in _partitions(list(range(h.n)), n2):
        reference.pop("p", None)
        if not all(same_count("p", b) for b in p_blocks):
            continue
        p_of = {v: i for i, b in enumerate(p_blocks) for v in b}
        if not _crossing_ok(h, p_of, kind):
            continue
        for q_blocks in _transversals(p_blocks, set()):
            reference.pop("q", None)
            if not all(same_count("q", b) for b in q_blocks):
                continue
            q_of = {v: i for i, b in enumerate(q_blocks) for v in b}
            if not _crossing_ok(h, q_of, kind):
                continue
            h1 = _factor_on(h, q_blocks[0], p_of, n1)
            h2 = _factor_on(h, p_blocks[0], q_of, n2)
            bijection = tuple(p_of[v] * n2 + q_of[v] for v in range(h.n))
            mapped = frozenset(tuple(sorted(bijection[v] for v in e)) for e in h.edges)
            if mapped == _definitional_product(h1, h2, kind):
                yield h1, h2, bijection


def _check_pfd_input(h: Hypergraph, kind, caps: Optional[Caps]) -> Tuple[ProductKind, Caps]:
    caps = resolve_caps(caps)
    _cap("oracle_pfd_vertices", h.n, caps.oracle_pfd_vertices)
    return ProductKind.parse(kind), caps


def brute_splits(h: Hypergraph, kind: ProductKind, caps: Optional[Caps] = None) -> BruteFactorization:
    """Every nontrivial binary split of ``h``, each verified by rebuilding the product."""
    kind, _ = _check_pfd_input(h, kind, caps)
    return BruteFactorization(splits=tuple(_splits(h, kind)))


def brute_pfd(h: Hypergraph, kind: ProductKind, caps: Optional[Caps] = None) -> Tuple[Hypergraph, ...]:
    """Prime factors of ``h`` found by exhaustive split search, largest factors first.

    K1 has no factors.
    """
    kind, caps = _check_pfd_input(h, kind, caps)
    if h.n == 1:
        return ()
    found = next(_splits(h, kind), None)
    if found is None:
        return (h,)
    h1, h2, _ = found
    logger.debug("oracle split %d = %d x %d", h.n, h1.n, h2.n)
    factors = brute_pfd(h1, kind, caps) + brute_pfd(h2, kind, caps)
    return tuple(sorted(factors, key=lambda f: (-f.n, f.edges)))


# ---- maps, dispensability, distance ------------------------------------------


def brute_count_maps(a: int, b: int, kind: ProductKind, caps: Optional[Caps] = None) -> int:
    """Injective (normal) or surjective (strong) maps from an a-set to a b-set."""
    kind = ProductKind.parse(kind)
    caps = resolve_caps(caps)
    if a < 0 or b < 0:
        raise InvalidArgumentError("set sizes must be non-negative")
    _cap("oracle_map_size", max(a, b), caps.oracle_map_size)
    if kind is ProductKind.CARTESIAN:
        raise InvalidArgumentError("map counts are defined for normal and strong products only")
    target = a if kind is ProductKind.NORMAL else b
    return sum(1 for image in cartesian_power(range(b), repeat=a) if len(set(image)) == target)


def _closed_neighborhoods(h: Hypergraph) -> List[FrozenSet[int]]:
    hoods: List[Set[int]] = [{v} for v in range(h.n)]
    for e in h.edges:
        for v in e:
            hoods[v].update(e)
    return [frozenset(s) for s in hoods]


def _condition(nx_: FrozenSet[int], ny: FrozenSet[int], nz: FrozenSet[int]) -> bool:
    return (nx_ & ny) < (nx_ & nz) or (nx_ < nz and nz < ny)


def brute_dispensable(h: Hypergraph, caps: Optional[Caps] = None) -> FrozenSet[Tuple[int, ...]]:
    """Hyperedges dispensable in ``h`` itself, testing every pair inside the edge and every z."""
    caps = resolve_caps(caps)
    _cap("oracle_dispensable_vertices", h.n, caps.oracle_dispensable_vertices)
    hoods = _closed_neighborhoods(h)
    removed = set()
    for e in h.edges:
        for x, y in combinations(e, 2):
            if any(
                _condition(hoods[x], hoods[y], hoods[z]) and _condition(hoods[y], hoods[x], hoods[z])
                for z in range(h.n)
                if z not in (x, y)
            ):
                removed.add(e)
                break
    return frozenset(removed)


def brute_distance(h: Hypergraph, u: int, v: int, caps: Optional[Caps] = None) -> float:
    """Shortest path length over sequences with distinct vertices and distinct edges; inf if none."""
    caps = resolve_caps(caps)
    _cap("oracle_distance_vertices", h.n, caps.oracle_distance_vertices)
    for w in (u, v):
        if not 0 <= w < h.n:
            raise InvalidArgumentError(f"vertex {w} outside [0, {h.n})")
    if u == v:
        return 0
    best = math.inf

    def walk(current: int, length: int, seen_vertices: Set[int], seen_edges: Set[int]) -> None:
        nonlocal best
        if length + 1 >= best:
            return
        for index, e in enumerate(h.edges):
            if index in seen_edges or current not in e:
                continue
            for nxt in e:
                if nxt in seen_vertices:
                    continue
                if nxt == v:
                    best = min(best, length + 1)
                    continue
                walk(nxt, length + 1, seen_vertices | {nxt}, seen_edges | {index})

    walk(u, 0, {u}, set())
    return best
