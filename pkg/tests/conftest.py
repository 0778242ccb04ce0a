from pathlib import Path

import pytest
from click.testing import CliRunner

from hyperfactor.config import Caps
from hyperfactor.models import Hypergraph
from hyperfactor.services.formats import write_text
from hyperfactor.services.hypergraphs import complete_graph, cycle_graph, k1, path_graph, single_edge
from hyperfactor.services.isomorphism import are_isomorphic


def hg(n, *edges):
    return Hypergraph.from_edges(n, edges)


def same_up_to_isomorphism(found, expected):
    """Whether two factor lists agree as multisets of isomorphism classes."""
    remaining = list(expected)
    for f in found:
        match = next((i for i, g in enumerate(remaining) if are_isomorphic(f, g)), None)
        if match is None:
            return False
        del remaining[match]
    return not remaining


# Thin connected factors used throughout the product and factorization tests.
T3_THIN = hg(5, (0, 1, 2), (1, 3), (2, 4))
T3_THIN_PLUS = hg(6, (0, 1, 2), (1, 3), (2, 4), (0, 5))
THIN_FACTORS = {
    "P3": path_graph(3),
    "P4": path_graph(4),
    "C4": cycle_graph(4),
    "C5": cycle_graph(5),
    "T3'": T3_THIN,
    "T3'+": T3_THIN_PLUS,
}


@pytest.fixture
def K1():
    return k1()


@pytest.fixture
def K2():
    return complete_graph(2)


@pytest.fixture
def T3():
    return single_edge(3)


@pytest.fixture
def P3():
    return path_graph(3)


@pytest.fixture
def caps():
    return Caps()


@pytest.fixture
def runner():
    return CliRunner()


@pytest.fixture
def hg_file(tmp_path: Path):
    """Write a hypergraph in the text format and return its path."""

    def write(h: Hypergraph, name: str = "input.hg") -> Path:
        path = tmp_path / name
        path.write_text(write_text(h), encoding="utf-8")
        return path

    return write
