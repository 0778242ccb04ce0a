from typing import Union

from .exceptions import (
    CapExceededError,
    InvalidArgumentError,
    NotConnectedError,
    NotSimpleError,
    NotThinError,
)
from .models import Graph, Hypergraph


def require_vertex(h: Union[Hypergraph, Graph], v: int) -> int:
    if not isinstance(v, int) or not 0 <= v < h.n:
        raise InvalidArgumentError(f"vertex {v} outside [0, {h.n})")
    return v


def require_cap(name: str, value: int, limit: int) -> None:
    if value > limit:
        raise CapExceededError(name, value, limit)


def require_simple(h: Hypergraph) -> Hypergraph:
    from .services.hypergraphs import simplicity_witness

    witness = simplicity_witness(h)
    if witness:
        raise NotSimpleError(witness)
    return h


def require_connected(h: Hypergraph) -> Hypergraph:
    from .services.hypergraphs import connectivity_witness

    witness = connectivity_witness(h)
    if witness is not None:
        raise NotConnectedError(*witness)
    return h


def require_thin(h: Hypergraph) -> Hypergraph:
    from .services.hypergraphs import twin_classes

    classes = twin_classes(h)
    if classes:
        raise NotThinError(classes)
    return h
