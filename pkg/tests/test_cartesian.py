import pytest

from conftest import T3_THIN, THIN_FACTORS, hg
from hyperfactor.config import Caps
from hyperfactor.exceptions import CapExceededError, NotConnectedError
from hyperfactor.models import ProductKind
from hyperfactor.services.cartesian import (
    assign_coordinates,
    graph_cartesian_pfd,
    hypergraph_cartesian_pfd,
    is_prime_cartesian,
    product_coloring,
)
from hyperfactor.services.hypergraphs import complete_graph, cycle_graph, path_graph, two_section
from hyperfactor.services.isomorphism import are_isomorphic, is_isomorphic_under
from hyperfactor.services.products import product, product_all


def _sorted_shapes(factors):
    return sorted((f.n, f.m) for f in factors)


def test_four_cycle_splits_into_two_edges(K2):
    result = hypergraph_cartesian_pfd(cycle_graph(4))
    assert result.factors == (K2, K2)
    assert result.coords.dims == (2, 2)
    assert not result.is_prime


def test_triangle_is_prime():
    result = hypergraph_cartesian_pfd(complete_graph(3))
    assert len(result.factors) == 1
    assert is_prime_cartesian(complete_graph(3))


def test_three_edge_is_prime_and_its_own_factor(T3):
    result = hypergraph_cartesian_pfd(T3)
    assert result.factors == (T3,)


def test_k1_has_no_factors(K1):
    result = hypergraph_cartesian_pfd(K1)
    assert result.factors == ()
    assert result.coords.n == 1


def test_grid_graph_factors(P3):
    grid, _ = product(P3, P3, ProductKind.CARTESIAN)
    result = graph_cartesian_pfd(two_section(grid))
    assert len(result.factors) == 2
    assert all(are_isomorphic(f.as_hypergraph(), P3) for f in result.factors)


def test_rank_three_factor_survives_the_two_section(P3):
    h, _ = product(T3_THIN, P3, ProductKind.CARTESIAN)
    result = hypergraph_cartesian_pfd(h)
    assert _sorted_shapes(result.factors) == [(3, 2), (5, 3)]
    assert any(are_isomorphic(f, T3_THIN) for f in result.factors)


def test_product_coloring_of_a_square_has_two_classes():
    colors = product_coloring(two_section(cycle_graph(4)))
    assert len(set(colors)) == 2


def test_colouring_of_a_triangle_is_one_class():
    assert len(set(product_coloring(two_section(complete_graph(3))))) == 1


def test_assign_coordinates_reproduces_the_factorization(P3):
    h, _ = product(P3, cycle_graph(4), ProductKind.CARTESIAN)
    result = hypergraph_cartesian_pfd(h)
    assert assign_coordinates(h, result) == result.coords


def test_disconnected_input_is_rejected():
    with pytest.raises(NotConnectedError):
        hypergraph_cartesian_pfd(hg(4, (0, 1), (2, 3)))


def test_colour_class_cap():
    with pytest.raises(CapExceededError):
        hypergraph_cartesian_pfd(cycle_graph(4), Caps(max_classes=1))


@pytest.mark.parametrize("first", sorted(THIN_FACTORS))
@pytest.mark.parametrize("second", ["P3", "C4", "T3'"])
def test_products_round_trip(first, second):
    h1, h2 = THIN_FACTORS[first], THIN_FACTORS[second]
    h, _ = product(h1, h2, ProductKind.CARTESIAN)
    result = hypergraph_cartesian_pfd(h)
    expected = (2 if first == "C4" else 1) + (2 if second == "C4" else 1)
    assert len(result.factors) == expected
    rebuilt, _ = product_all(result.factors, ProductKind.CARTESIAN)
    bijection = tuple(result.coords.code(v) for v in range(h.n))
    assert is_isomorphic_under(h, rebuilt, bijection)


@pytest.mark.parametrize("name", ["P3", "P4", "C5", "T3'", "T3'+"])
def test_thin_primes_stay_prime(name):
    assert is_prime_cartesian(THIN_FACTORS[name])


def test_long_path_is_prime():
    assert is_prime_cartesian(path_graph(6))
