"""Products and prime factor decompositions of finite simple hypergraphs."""

from .config import Caps, get_caps
from .exceptions import HyperfactorError
from .models import Coordinates, Graph, Hypergraph, ProductKind
from .services.cartesian import graph_cartesian_pfd, hypergraph_cartesian_pfd
from .services.products import product, product_all
from .services.skeleton import cartesian_skeleton
from .services.strong import pfd

__all__ = [
    "Caps",
    "Coordinates",
    "Graph",
    "Hypergraph",
    "HyperfactorError",
    "ProductKind",
    "cartesian_skeleton",
    "get_caps",
    "graph_cartesian_pfd",
    "hypergraph_cartesian_pfd",
    "pfd",
    "product",
    "product_all",
]
