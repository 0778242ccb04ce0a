import math
from dataclasses import dataclass, field
from enum import Enum
from functools import cached_property
from itertools import product as grid_product
from typing import Dict, FrozenSet, Iterable, Optional, Sequence, Tuple, Union

import networkx as nx

from .exceptions import InputFormatError, InvalidArgumentError

Edge = Tuple[int, ...]
VertexBijection = Tuple[int, ...]
# Leaf i is the i-th factor; a pair is the binary product of its two sides.
Bracketing = Union[int, Tuple["Bracketing", "Bracketing"]]


def canonical_edge(vertices: Iterable[int]) -> Edge:
    return tuple(sorted(set(vertices)))


@dataclass(frozen=True)
class Hypergraph:
    """Finite hypergraph on vertices ``0..n-1`` with a canonical edge set.

    Edges are strictly ascending tuples and the edge tuple is sorted
    lexicographically without duplicates, so two hypergraphs are equal
    exactly when their vertex counts and edge sets are equal.
    """

    n: int
    edges: Tuple[Edge, ...] = ()

    def __post_init__(self) -> None:
        if self.n < 1:
            raise InputFormatError(f"vertex count must be positive, got {self.n}")
        previous: Optional[Edge] = None
        for edge in self.edges:
            if not edge:
                raise InputFormatError("empty hyperedge")
            if any(b <= a for a, b in zip(edge, edge[1:])):
                raise InputFormatError(f"hyperedge {edge} is not strictly ascending")
            if edge[0] < 0 or edge[-1] >= self.n:
                raise InputFormatError(f"hyperedge {edge} has a vertex outside [0, {self.n})")
            if previous is not None and edge <= previous:
                raise InputFormatError(f"hyperedges not in canonical order near {edge}")
            previous = edge

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Iterable[int]]) -> "Hypergraph":
        """Canonicalize arbitrary vertex collections into a hypergraph."""
        canonical = set()
        for raw in edges:
            raw = list(raw)
            edge = canonical_edge(raw)
            if len(edge) != len(raw):
                raise InputFormatError(f"hyperedge {raw} repeats a vertex")
            canonical.add(edge)
        return cls(n, tuple(sorted(canonical)))

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def vertices(self) -> range:
        return range(self.n)

    @property
    def rank(self) -> int:
        return max((len(e) for e in self.edges), default=0)

    @cached_property
    def incidence(self) -> Tuple[Tuple[int, ...], ...]:
        """Per-vertex ascending indices of incident edges."""
        incident = [[] for _ in range(self.n)]
        for index, edge in enumerate(self.edges):
            for v in edge:
                incident[v].append(index)
        return tuple(tuple(items) for items in incident)

    @cached_property
    def edge_set(self) -> FrozenSet[Edge]:
        return frozenset(self.edges)

    def degree(self, v: int) -> int:
        return len(self.incidence[v])

    @property
    def max_degree(self) -> int:
        return max((len(items) for items in self.incidence), default=0)

    def __str__(self) -> str:
        body = ", ".join("{" + ",".join(map(str, e)) + "}" for e in self.edges)
        return f"Hypergraph(n={self.n}, edges=[{body}])"


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph given by ascending adjacency lists."""

    n: int
    adjacency: Tuple[Tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if len(self.adjacency) != self.n:
            raise InputFormatError("adjacency length differs from vertex count")
        for v, neighbors in enumerate(self.adjacency):
            if v in neighbors:
                raise InputFormatError(f"self-loop at {v}")
            for u in neighbors:
                if not 0 <= u < self.n or v not in self.adjacency[u]:
                    raise InputFormatError(f"adjacency is not symmetric at {{{v},{u}}}")

    @classmethod
    def from_edges(cls, n: int, pairs: Iterable[Sequence[int]]) -> "Graph":
        neighbors = [set() for _ in range(n)]
        for x, y in pairs:
            if x == y:
                raise InputFormatError(f"self-loop at {x}")
            neighbors[x].add(y)
            neighbors[y].add(x)
        return cls(n, tuple(tuple(sorted(s)) for s in neighbors))

    @cached_property
    def edges(self) -> Tuple[Tuple[int, int], ...]:
        return tuple((x, y) for x in range(self.n) for y in self.adjacency[x] if x < y)

    @cached_property
    def closed_neighborhoods(self) -> Tuple[FrozenSet[int], ...]:
        return tuple(frozenset(self.adjacency[v]) | {v} for v in range(self.n))

    def has_edge(self, x: int, y: int) -> bool:
        return y in self.closed_neighborhoods[x] and x != y

    def as_hypergraph(self) -> Hypergraph:
        return Hypergraph(self.n, self.edges)

    def to_networkx(self) -> nx.Graph:
        graph = nx.Graph()
        graph.add_nodes_from(range(self.n))
        graph.add_edges_from(self.edges)
        return graph


class ProductKind(str, Enum):
    CARTESIAN = "cartesian"
    NORMAL = "normal"
    STRONG = "strong"

    @classmethod
    def parse(cls, value: "str | ProductKind") -> "ProductKind":
        try:
            return cls(value)
        except ValueError:
            raise InvalidArgumentError(f"unknown product kind {value!r}")


@dataclass(frozen=True)
class Coordinates:
    """Per-vertex tuples realizing a product structure over factor index set I."""

    dims: Tuple[int, ...]
    coord: Tuple[Tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if math.prod(self.dims) != len(self.coord):
            raise InvalidArgumentError(
                f"coordinates cover {len(self.coord)} vertices but dims {self.dims} need {math.prod(self.dims)}"
            )
        for tup in self.coord:
            if len(tup) != len(self.dims) or any(not 0 <= x < d for x, d in zip(tup, self.dims)):
                raise InvalidArgumentError(f"coordinate {tup} outside dims {self.dims}")
        if len(set(self.coord)) != len(self.coord):
            raise InvalidArgumentError("coordinates are not a bijection")

    @classmethod
    def grid(cls, dims: Sequence[int]) -> "Coordinates":
        """Row-major coordinates: vertex id equals the mixed-radix code of its tuple."""
        dims = tuple(dims)
        return cls(dims, tuple(grid_product(*(range(d) for d in dims))))

    @classmethod
    def identity(cls, n: int) -> "Coordinates":
        return cls.grid((n,))

    @property
    def factor_count(self) -> int:
        return len(self.dims)

    @property
    def n(self) -> int:
        return len(self.coord)

    @cached_property
    def _lookup(self) -> Dict[Tuple[int, ...], int]:
        return {tup: v for v, tup in enumerate(self.coord)}

    def project(self, v: int, j: int) -> int:
        return self.coord[v][j]

    def projection(self, edge: Iterable[int], j: int) -> FrozenSet[int]:
        return frozenset(self.coord[v][j] for v in edge)

    def vertex_at(self, tup: Sequence[int]) -> int:
        return self._lookup[tuple(tup)]

    def code(self, v: int) -> int:
        """Row-major (mixed-radix) encoding of the tuple of ``v``."""
        value = 0
        for x, d in zip(self.coord[v], self.dims):
            value = value * d + x
        return value

    def restrict(self, indices: Sequence[int]) -> Tuple[Tuple[int, ...], ...]:
        return tuple(tuple(tup[i] for i in indices) for tup in self.coord)

    def is_row_major(self) -> bool:
        return all(self.code(v) == v for v in range(self.n))


@dataclass(frozen=True)
class EdgeClassification:
    """Label per edge (aligned with ``H.edges``): colour k for Cartesian, None otherwise."""

    labels: Tuple[Optional[int], ...]

    def is_cartesian(self, index: int) -> bool:
        return self.labels[index] is not None

    def cartesian_indices(self, color: Optional[int] = None) -> Tuple[int, ...]:
        return tuple(
            i for i, label in enumerate(self.labels)
            if label is not None and (color is None or label == color)
        )

    def noncartesian_indices(self) -> Tuple[int, ...]:
        return tuple(i for i, label in enumerate(self.labels) if label is None)


@dataclass(frozen=True)
class CountReport:
    kind: ProductKind
    formula_value: int
    enumerated_value: int

    @property
    def discrepancy(self) -> int:
        return self.formula_value - self.enumerated_value


@dataclass(frozen=True)
class ValidationReport:
    simple: bool
    connected: bool
    thin: bool
    simple_witness: Tuple[Edge, ...] = ()
    connected_witness: Optional[Tuple[int, int]] = None
    thin_witness: Optional[Tuple[int, int]] = None


@dataclass(frozen=True)
class DispensableSet:
    graph_pairs: FrozenSet[Tuple[int, int]]
    hyperedges: Tuple[Edge, ...]


@dataclass(frozen=True)
class SkeletonResult:
    skeleton: Hypergraph
    removed: DispensableSet
    thin: bool = True


@dataclass(frozen=True)
class GraphFactorization:
    factors: Tuple[Graph, ...]
    coords: Coordinates
    edge_color: Tuple[int, ...]


@dataclass(frozen=True)
class HypergraphFactorization:
    factors: Tuple[Hypergraph, ...]
    coords: Coordinates
    edge_color: Tuple[int, ...]

    @property
    def is_prime(self) -> bool:
        return len(self.factors) <= 1


@dataclass(frozen=True)
class LayerHypergraph:
    R: FrozenSet[int]
    hypergraph: Hypergraph
    coords: Coordinates


@dataclass(frozen=True)
class Representative:
    """One connected component of a layer hypergraph, relabeled densely."""

    hypergraph: Hypergraph
    vertex_map: Tuple[int, ...]


@dataclass(frozen=True)
class CompletenessVerdict:
    exact: bool
    counting: bool
    counted: int = 0
    formula: int = 0
    overlapping: bool = False

    @property
    def agree(self) -> bool:
        return self.exact == self.counting


@dataclass(frozen=True)
class ReconstructionCertificate:
    valid: bool
    bijection: VertexBijection = ()


@dataclass(frozen=True)
class PrimeFactorReport:
    kind: ProductKind
    factors: Tuple[Hypergraph, ...]
    index_partition: Tuple[Tuple[int, ...], ...]
    coords: Coordinates
    certificate: ReconstructionCertificate
    verdicts: Tuple[CompletenessVerdict, ...] = ()
    bracketing: Optional[Bracketing] = None
    timings: Dict[str, float] = field(default_factory=dict, compare=False)


@dataclass(frozen=True)
class BruteFactorization:
    splits: Tuple[Tuple[Hypergraph, Hypergraph, VertexBijection], ...]


@dataclass(frozen=True)
class GeneratorSpec:
    n: int
    rank_max: int = 3
    degree_max: int = 3
    seed: int = 0
    require: FrozenSet[str] = frozenset({"simple"})
    prime_kind: ProductKind = ProductKind.STRONG

    def __post_init__(self) -> None:
        if self.rank_max < 2:
            raise InvalidArgumentError("rank_max must be at least 2")
        if self.n < 1:
            raise InvalidArgumentError("n must be positive")
        if self.degree_max < 1:
            raise InvalidArgumentError("degree_max must be positive")
        if not 0 <= self.seed < 2**64:
            raise InvalidArgumentError("seed must be an unsigned 64-bit integer")
        unknown = set(self.require) - {"simple", "connected", "thin", "prime"}
        if unknown:
            raise InvalidArgumentError(f"unknown requirement(s): {', '.join(sorted(unknown))}")


@dataclass(frozen=True)
class BenchReport:
    sizes: Tuple[int, ...]
    seconds: Tuple[float, ...]
    slope: float
    threshold: float

    @property
    def within_threshold(self) -> bool:
        return self.slope < self.threshold
