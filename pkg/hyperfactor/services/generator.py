"""Seeded random simple hypergraphs for tests and benchmarks.

Instances are rejection-sampled: each attempt draws edges of random size
at most ``rank_max`` over the vertices whose degree is still below
``degree_max`` and keeps only edges that preserve simplicity. When
thinness is required, edges through twin vertices are redrawn a few times
before the attempt is judged.
"""

import logging
from dataclasses import replace
from typing import List, Optional, Sequence, Set, Tuple

import numpy as np

from ..config import Caps, resolve_caps
from ..exceptions import GenerationError, RejectedInputError
from ..models import Edge, GeneratorSpec, Hypergraph
from .hypergraphs import is_connected, is_simple, twin_classes
from .oracle import brute_pfd
from .strong import is_prime

logger = logging.getLogger(__name__)

EDGE_TRIES = 32
THIN_ROUNDS = 8


def _fits(edge: Edge, edges: Sequence[Edge]) -> bool:
    members = set(edge)
    return all(not members.issubset(e) and not members.issuperset(e) for e in edges)


def _draw_edge(rng: np.random.Generator, spec: GeneratorSpec, degrees: Sequence[int]) -> Optional[Edge]:
    available = [v for v in range(spec.n) if degrees[v] < spec.degree_max]
    size = int(rng.integers(2, spec.rank_max, endpoint=True))
    if len(available) < size:
        return None
    chosen = rng.choice(available, size=size, replace=False)
    return tuple(sorted(int(v) for v in chosen))


def _fill(rng: np.random.Generator, spec: GeneratorSpec, edges: List[Edge], target: int) -> None:
    degrees = [0] * spec.n
    for e in edges:
        for v in e:
            degrees[v] += 1
    misses = 0
    while len(edges) < target and misses < EDGE_TRIES:
        edge = _draw_edge(rng, spec, degrees)
        if edge is None or not _fits(edge, edges):
            misses += 1
            continue
        edges.append(edge)
        for v in edge:
            degrees[v] += 1


def _thin_out(rng: np.random.Generator, spec: GeneratorSpec, edges: List[Edge]) -> None:
    for _ in range(THIN_ROUNDS):
        twins = twin_classes(Hypergraph(spec.n, tuple(sorted(edges))))
        if not twins:
            return
        offender: Set[int] = set(twins[0])
        through = [i for i, e in enumerate(edges) if offender & set(e)]
        if not through:
            return
        drop = through[int(rng.integers(len(through)))]
        target = len(edges)
        del edges[drop]
        _fill(rng, spec, edges, target)


def _satisfies(h: Hypergraph, spec: GeneratorSpec, caps: Caps) -> bool:
    if not is_simple(h):
        return False
    if "connected" in spec.require and not is_connected(h):
        return False
    if "thin" in spec.require and twin_classes(h):
        return False
    if "prime" in spec.require:
        if h.n <= caps.oracle_pfd_vertices:
            return len(brute_pfd(h, spec.prime_kind, caps)) <= 1
        try:
            return is_prime(h, spec.prime_kind, caps)
        except RejectedInputError:
            return False
    return True


def _sample(rng: np.random.Generator, spec: GeneratorSpec) -> Hypergraph:
    lower = max(1, (spec.n - 1 + spec.rank_max - 2) // (spec.rank_max - 1))
    upper = max(lower, spec.n * spec.degree_max // 2)
    target = int(rng.integers(lower, upper, endpoint=True))
    edges: List[Edge] = []
    _fill(rng, spec, edges, target)
    if "thin" in spec.require:
        _thin_out(rng, spec, edges)
    return Hypergraph(spec.n, tuple(sorted(edges)))


def generate(spec: GeneratorSpec, caps: Optional[Caps] = None) -> Tuple[Hypergraph, int]:
    """Return the first sampled instance meeting ``spec.require`` and the attempt count."""
    caps = resolve_caps(caps)
    if spec.n == 1:
        return Hypergraph(1, ()), 1
    if spec.rank_max > spec.n:
        logger.info("rank_max=%d clamped to n=%d", spec.rank_max, spec.n)
        spec = replace(spec, rank_max=spec.n)
    rng = np.random.default_rng(spec.seed)
    for attempt in range(1, caps.gen_attempts + 1):
        h = _sample(rng, spec)
        if _satisfies(h, spec, caps):
            logger.info("generated n=%d m=%d after %d attempt(s)", h.n, h.m, attempt)
            return h, attempt
    raise GenerationError(f"no instance meeting {sorted(spec.require)} within {caps.gen_attempts} attempts")


def provenance(spec: GeneratorSpec, attempts: int) -> List[str]:
    """Header comment lines recorded with a generated instance."""
    return [
        f"generated seed={spec.seed} n={spec.n} rank_max={spec.rank_max} degree_max={spec.degree_max}",
        f"require={','.join(sorted(spec.require))} attempts={attempts}",
    ]
