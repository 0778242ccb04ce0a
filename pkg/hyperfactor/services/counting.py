"""Exact counts of non-Cartesian edges in normal and strong products.

For an edge pair of sizes a and b, the normal product contributes the
injective maps from the smaller edge into the larger, max!/|a-b|!, and the
strong product contributes the surjections from the larger edge onto the
smaller, min! * S(max, min).
"""

from functools import lru_cache
from typing import List, Optional

from ..config import Caps, resolve_caps
from ..exceptions import InvalidArgumentError
from ..guards import require_simple
from ..models import Hypergraph, ProductKind


@lru_cache(maxsize=None)
def _stirling_table(size: int) -> List[List[int]]:
    table = [[0] * (size + 1) for _ in range(size + 1)]
    table[0][0] = 1
    for n in range(1, size + 1):
        for k in range(1, n + 1):
            table[n][k] = k * table[n - 1][k] + table[n - 1][k - 1]
    return table


@lru_cache(maxsize=None)
def _factorial_table(size: int) -> List[int]:
    values = [1] * (size + 1)
    for i in range(1, size + 1):
        values[i] = values[i - 1] * i
    return values


def stirling2(n: int, k: int, caps: Optional[Caps] = None) -> int:
    """Stirling number of the second kind S(n, k)."""
    caps = resolve_caps(caps)
    if not 0 <= k <= n <= caps.rank:
        raise InvalidArgumentError(f"stirling2 needs 0 <= k <= n <= {caps.rank}, got n={n}, k={k}")
    return _stirling_table(caps.rank)[n][k]


def pair_count(a: int, b: int, kind: ProductKind, caps: Optional[Caps] = None) -> int:
    """Non-Cartesian edges of e1 ⊛ e2 for |e1| = a, |e2| = b."""
    caps = resolve_caps(caps)
    big, small = max(a, b), min(a, b)
    if small < 1 or big > caps.rank:
        raise InvalidArgumentError(f"edge sizes must lie in [1, {caps.rank}], got {a} and {b}")
    factorial = _factorial_table(caps.rank)
    if kind is ProductKind.NORMAL:
        return factorial[big] // factorial[big - small]
    if kind is ProductKind.STRONG:
        return factorial[small] * _stirling_table(caps.rank)[big][small]
    raise InvalidArgumentError("non-Cartesian edge counts are defined for normal and strong products only")


def count_noncartesian_formula(
    h1: Hypergraph, h2: Hypergraph, kind: ProductKind, caps: Optional[Caps] = None
) -> int:
    """Sum of the per-pair counts over all edge pairs of the two factors."""
    kind = ProductKind.parse(kind)
    if kind is ProductKind.CARTESIAN:
        raise InvalidArgumentError("the Cartesian product has no non-Cartesian edges to count")
    require_simple(h1)
    require_simple(h2)
    caps = resolve_caps(caps)
    sizes1 = [len(e) for e in h1.edges]
    sizes2 = [len(e) for e in h2.edges]
    total = 0
    for a in sizes1:
        for b in sizes2:
            total += pair_count(a, b, kind, caps)
    return total
