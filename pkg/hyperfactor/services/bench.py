"""Wall-clock smoke check of skeleton + PFD growth on product instances.

Informational only: the fitted log-log slope is reported together with a
threshold, and callers decide what to do with a miss.
"""

import logging
import time
from typing import Optional, Sequence

import numpy as np

from ..config import Caps
from ..exceptions import InvalidArgumentError
from ..models import BenchReport, Hypergraph, ProductKind
from .hypergraphs import path_graph
from .products import product
from .skeleton import cartesian_skeleton
from .strong import pfd

logger = logging.getLogger(__name__)

DEFAULT_LENGTHS = (3, 6, 12)
DEFAULT_THRESHOLD = 4.5
BASE_FACTOR = Hypergraph(5, ((0, 1, 2), (1, 3), (2, 4)))


def _instance(length: int, kind: ProductKind, caps: Optional[Caps]) -> Hypergraph:
    h, _ = product(BASE_FACTOR, path_graph(length), kind, caps)
    return h


def _time_once(h: Hypergraph, kind: ProductKind, caps: Optional[Caps]) -> float:
    started = time.perf_counter()
    cartesian_skeleton(h)
    pfd(h, kind, caps)
    return time.perf_counter() - started


def run_bench(
    lengths: Sequence[int] = DEFAULT_LENGTHS,
    kind: ProductKind = ProductKind.STRONG,
    repeats: int = 3,
    threshold: float = DEFAULT_THRESHOLD,
    caps: Optional[Caps] = None,
) -> BenchReport:
    """Time skeleton + PFD on ``BASE_FACTOR ⊛ P_k`` for each k and fit the log-log slope."""
    kind = ProductKind.parse(kind)
    if len(lengths) < 2 or any(k < 3 for k in lengths):
        raise InvalidArgumentError("need at least two path lengths, each at least 3")
    if repeats < 1:
        raise InvalidArgumentError("repeats must be positive")
    sizes = []
    seconds = []
    for k in lengths:
        h = _instance(k, kind, caps)
        best = min(_time_once(h, kind, caps) for _ in range(repeats))
        logger.info("bench n=%d m=%d: %.4fs", h.n, h.m, best)
        sizes.append(h.n)
        seconds.append(best)
    slope = float(np.polyfit(np.log(sizes), np.log(np.maximum(seconds, 1e-9)), 1)[0])
    report = BenchReport(sizes=tuple(sizes), seconds=tuple(seconds), slope=slope, threshold=threshold)
    if not report.within_threshold:
        logger.warning("bench slope %.2f exceeds %.2f", slope, threshold)
    return report
