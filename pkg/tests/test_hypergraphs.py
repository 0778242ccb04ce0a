import math
from itertools import permutations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import T3_THIN, hg
from hyperfactor.exceptions import InputFormatError, InvalidArgumentError
from hyperfactor.models import Graph, Hypergraph
from hyperfactor.services.hypergraphs import (
    closed_neighborhood,
    closed_neighborhoods,
    connected_components,
    distance,
    induced,
    is_connected,
    is_homomorphism,
    is_simple,
    is_thin,
    open_neighborhood,
    partial,
    relabel,
    twin_classes,
    two_section,
    validate,
)
from hyperfactor.services.isomorphism import are_isomorphic, find_isomorphism, is_isomorphic_under
from strategies import relabelings, simple_hypergraphs


def test_validate_single_three_edge():
    report = validate(hg(3, (0, 1, 2)))
    assert report.simple and report.connected
    assert not report.thin
    assert report.thin_witness == (0, 1)


def test_validate_containment_witness():
    report = validate(hg(3, (0, 1), (0, 1, 2)))
    assert not report.simple
    assert report.simple_witness == ((0, 1), (0, 1, 2))


def test_validate_thin_rank_three():
    report = validate(T3_THIN)
    assert (report.simple, report.connected, report.thin) == (True, True, True)


def test_singleton_edge_is_not_simple():
    assert not is_simple(hg(2, (0,), (0, 1)))


def test_k1_is_simple_connected_and_thin(K1):
    report = validate(K1)
    assert (report.simple, report.connected, report.thin) == (True, True, True)


@pytest.mark.parametrize(
    "h, v, expected",
    [
        (hg(3, (0, 1, 2)), 0, {0, 1, 2}),
        (hg(3, (0, 1), (1, 2)), 0, {0, 1}),
        (T3_THIN, 1, {0, 1, 2, 3}),
    ],
)
def test_closed_neighborhood(h, v, expected):
    assert closed_neighborhood(h, v) == frozenset(expected)
    assert open_neighborhood(h, v) == frozenset(expected) - {v}


def test_closed_neighborhood_rejects_out_of_range():
    with pytest.raises(InvalidArgumentError):
        closed_neighborhood(hg(3, (0, 1)), 3)


def test_is_thin_examples(P3, T3, K1):
    assert is_thin(P3) == (True, None)
    assert is_thin(T3) == (False, (0, 1))
    assert is_thin(K1) == (True, None)
    assert twin_classes(T3) == ((0, 1, 2),)


def test_two_section_examples(T3, K1):
    assert two_section(T3).edges == ((0, 1), (0, 2), (1, 2))
    assert two_section(hg(4, (0, 1, 2), (2, 3))).edges == ((0, 1), (0, 2), (1, 2), (2, 3))
    assert two_section(K1).edges == ()


def test_distance_examples():
    h = hg(4, (0, 1, 2), (2, 3))
    assert distance(h, 0, 3) == 2
    assert distance(h, 1, 1) == 0
    split = hg(4, (0, 1), (2, 3))
    assert distance(split, 0, 3) == math.inf
    assert not is_connected(split)
    assert connected_components(split) == ((0, 1), (2, 3))


def test_is_isomorphic_under_examples(K2):
    assert is_isomorphic_under(T3_THIN, T3_THIN, tuple(range(5)))
    assert is_isomorphic_under(K2, K2, (1, 0))
    assert not is_isomorphic_under(hg(3, (0, 1)), hg(3, (1, 2)), (0, 1, 2))
    with pytest.raises(InvalidArgumentError):
        is_isomorphic_under(K2, T3_THIN, (0, 1))


def test_find_isomorphism_examples(K1):
    k3 = hg(3, (0, 1), (0, 2), (1, 2))
    p3 = hg(3, (0, 1), (1, 2))
    assert find_isomorphism(k3, p3) is None
    assert find_isomorphism(K1, K1) == (0,)


def test_induced_and_partial():
    sub, mapping = induced(T3_THIN, [1, 2, 3])
    assert mapping == (1, 2, 3)
    assert sub.edges == ((0, 2),)
    assert partial(T3_THIN, [(1, 3)]).edges == ((1, 3),)
    with pytest.raises(InvalidArgumentError):
        partial(T3_THIN, [(0, 3)])


def test_is_homomorphism_onto_single_edge(T3):
    assert is_homomorphism(hg(3, (0, 1), (1, 2)), hg(2, (0, 1)), (0, 1, 0))
    assert is_homomorphism(T3, hg(2, (0, 1)), (0, 1, 0))
    assert not is_homomorphism(T3, hg(3, (0, 1)), (0, 1, 2))


def test_hypergraph_rejects_malformed_edges():
    with pytest.raises(InputFormatError):
        Hypergraph(3, ((0, 3),))
    with pytest.raises(InputFormatError):
        Hypergraph(3, ((1, 2), (0, 1)))
    with pytest.raises(InputFormatError):
        Hypergraph.from_edges(3, [(0, 0, 1)])
    with pytest.raises(InputFormatError):
        Graph(2, ((0,), ()))


@pytest.mark.property_based
@given(simple_hypergraphs(max_n=6))
def test_neighborhoods_and_thinness_agree_with_two_section(h):
    assert closed_neighborhoods(h) == closed_neighborhoods(two_section(h))
    assert is_thin(h)[0] == is_thin(two_section(h))[0]


@pytest.mark.property_based
@given(simple_hypergraphs(max_n=6))
def test_simple_edges_are_cliques_of_the_two_section(h):
    section = two_section(h)
    assert is_simple(h)
    for e in h.edges:
        assert all(section.has_edge(x, y) for i, x in enumerate(e) for y in e[i + 1:])


@pytest.mark.property_based
@settings(max_examples=50)
@given(st.data())
def test_relabeled_copies_are_isomorphic(data):
    h = data.draw(simple_hypergraphs(max_n=7))
    perm = data.draw(relabelings(h))
    image = relabel(h, perm)
    found = find_isomorphism(h, image)
    assert found is not None
    assert is_isomorphic_under(h, image, found)


@pytest.mark.property_based
@settings(max_examples=50)
@given(simple_hypergraphs(max_n=5), simple_hypergraphs(max_n=5))
def test_find_isomorphism_none_matches_exhaustive_search(h1, h2):
    if h1.n != h2.n:
        return
    exhaustive = any(is_isomorphic_under(h1, h2, p) for p in permutations(range(h1.n)))
    assert are_isomorphic(h1, h2) == exhaustive
