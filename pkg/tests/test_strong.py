import pytest
from hypothesis import HealthCheck, given, settings

from conftest import T3_THIN, THIN_FACTORS, hg, same_up_to_isomorphism
from strategies import thin_connected_hypergraphs
from hyperfactor.exceptions import InvalidArgumentError, NotConnectedError, NotSimpleError, NotThinError
from hyperfactor.models import Coordinates, ProductKind
from hyperfactor.services.hypergraphs import complete_graph, cycle_graph, is_connected, path_graph
from hyperfactor.services.isomorphism import are_isomorphic, is_isomorphic_under
from hyperfactor.services.oracle import brute_pfd
from hyperfactor.services.products import bracketing_leaves, product, product_all, product_tree
from hyperfactor.services.skeleton import cartesian_skeleton
from hyperfactor.services.strong import (
    certify,
    components_all_isomorphic,
    is_prime,
    layer_hypergraph,
    noncartesian_complete,
    pfd,
)

NONCARTESIAN = [ProductKind.NORMAL, ProductKind.STRONG]
GRID = Coordinates.grid((2, 2))


def _shapes(factors):
    return sorted((f.n, f.m, f.rank) for f in factors)


def _representatives(h, S):
    coS = [i for i in range(GRID.factor_count) if i not in S]
    return (
        components_all_isomorphic(layer_hypergraph(h, GRID, S)),
        components_all_isomorphic(layer_hypergraph(h, GRID, coS)),
    )


def test_layer_hypergraph_of_k4_keeps_one_colour():
    layer = layer_hypergraph(complete_graph(4), GRID, {0})
    assert layer.hypergraph.edges == ((0, 2), (1, 3))
    assert layer_hypergraph(complete_graph(4), GRID, {0, 1}).hypergraph == complete_graph(4)


def test_layer_hypergraph_rejects_bad_arguments():
    with pytest.raises(InvalidArgumentError):
        layer_hypergraph(complete_graph(4), GRID, {2})
    with pytest.raises(InvalidArgumentError):
        layer_hypergraph(complete_graph(3), GRID, {0})


def test_components_of_k4_layers(K2):
    rep = components_all_isomorphic(layer_hypergraph(complete_graph(4), GRID, {0}))
    assert rep.hypergraph == K2
    assert rep.vertex_map == (0, 2)


def test_components_of_an_edgeless_layer_are_rejected():
    assert components_all_isomorphic(layer_hypergraph(complete_graph(4), GRID, ())) is None


def test_components_of_unequal_layers_are_rejected():
    h = hg(4, (0, 2), (1, 3), (2, 3))
    assert components_all_isomorphic(layer_hypergraph(h, GRID, {0, 1})) is not None
    assert components_all_isomorphic(layer_hypergraph(hg(4, (0, 2), (2, 3)), GRID, {0})) is None


def test_k4_is_complete_over_one_colour():
    k4 = complete_graph(4)
    rep_s, rep_cos = _representatives(k4, [0])
    verdict = noncartesian_complete(k4, GRID, [0], rep_s, rep_cos, ProductKind.STRONG)
    assert verdict.exact and verdict.counting
    assert (verdict.counted, verdict.formula) == (2, 2)


def test_four_cycle_is_not_a_strong_product():
    c4, _ = product(complete_graph(2), complete_graph(2), ProductKind.CARTESIAN)
    rep_s, rep_cos = _representatives(c4, [0])
    verdict = noncartesian_complete(c4, GRID, [0], rep_s, rep_cos, ProductKind.STRONG)
    assert not verdict.exact and not verdict.counting
    assert verdict.agree


def test_king_graph_factors(P3):
    king, _ = product(P3, P3, ProductKind.STRONG)
    report = pfd(king, ProductKind.STRONG)
    assert report.factors == (P3, P3)
    assert report.certificate.valid
    assert report.index_partition == ((0,), (1,))
    assert set(report.timings) == {"skeleton", "cartesian_pfd", "recombination", "certificate"}


def test_thin_rank_three_factor_is_prime():
    report = pfd(T3_THIN, ProductKind.STRONG)
    assert report.factors == (T3_THIN,)
    assert is_prime(T3_THIN, ProductKind.NORMAL)


def test_four_cycle_is_strong_prime_despite_two_skeleton_factors():
    report = pfd(cycle_graph(4), ProductKind.STRONG)
    assert report.index_partition == ((0, 1),)
    assert len(report.factors) == 1
    assert are_isomorphic(report.factors[0], cycle_graph(4))


def test_k1_has_no_prime_factors(K1):
    report = pfd(K1, ProductKind.STRONG)
    assert report.factors == ()
    assert report.certificate.valid


def test_pfd_preconditions(T3):
    with pytest.raises(NotThinError):
        pfd(complete_graph(4), ProductKind.STRONG)
    with pytest.raises(NotThinError):
        pfd(T3, ProductKind.NORMAL)
    with pytest.raises(NotConnectedError):
        pfd(hg(4, (0, 1), (2, 3)), ProductKind.STRONG)
    with pytest.raises(NotSimpleError):
        pfd(hg(3, (0, 1), (0, 1, 2)), ProductKind.STRONG)
    with pytest.raises(InvalidArgumentError):
        pfd(path_graph(3), ProductKind.CARTESIAN)


@pytest.mark.parametrize("kind", NONCARTESIAN)
@pytest.mark.parametrize("first", sorted(THIN_FACTORS))
@pytest.mark.parametrize("second", ["P3", "C4", "T3'"])
def test_products_of_two_primes_round_trip(kind, first, second):
    h1, h2 = THIN_FACTORS[first], THIN_FACTORS[second]
    h, _ = product(h1, h2, kind)
    report = pfd(h, kind)
    assert len(report.factors) == 2
    assert _shapes(report.factors) == _shapes([h1, h2])
    assert sorted(are_isomorphic(f, h1) or are_isomorphic(f, h2) for f in report.factors) == [True, True]
    rebuilt, _ = product_all(report.factors, kind)
    assert is_isomorphic_under(h, rebuilt, report.certificate.bijection)


@pytest.mark.parametrize("kind", NONCARTESIAN)
def test_three_factor_product(kind, P3):
    h, _ = product_all([P3, T3_THIN, P3], kind)
    report = pfd(h, kind)
    assert _shapes(report.factors) == _shapes([P3, P3, T3_THIN])
    assert report.certificate.valid


@pytest.mark.parametrize("kind", NONCARTESIAN)
@pytest.mark.parametrize("name", sorted(THIN_FACTORS))
def test_thin_primes_are_stable(kind, name):
    h = THIN_FACTORS[name]
    assert pfd(h, kind).factors[0].n == h.n
    assert is_prime(h, kind)


def test_certify_detects_a_wrong_factor(P3):
    king, coords = product(P3, P3, ProductKind.STRONG)
    assert certify(king, [P3, P3], coords, ProductKind.STRONG).valid
    # normal and strong products coincide on graphs
    assert certify(king, [P3, P3], coords, ProductKind.NORMAL).valid
    assert not certify(king, [P3, hg(3, (0, 1))], coords, ProductKind.STRONG).valid


@pytest.mark.oracle
@pytest.mark.parametrize("kind", NONCARTESIAN)
@pytest.mark.parametrize("h", [T3_THIN, path_graph(4), product(path_graph(3), path_graph(3), ProductKind.STRONG)[0]])
def test_pfd_agrees_with_exhaustive_search(kind, h):
    assert same_up_to_isomorphism(pfd(h, kind).factors, brute_pfd(h, kind))


SPLIT_SKELETON = hg(5, (0, 1, 4), (0, 2), (1, 3, 4), (2, 4))
RANDOM_SETTINGS = settings(
    max_examples=25, deadline=None, suppress_health_check=[HealthCheck.filter_too_much, HealthCheck.too_slow]
)


@pytest.mark.parametrize("kind", NONCARTESIAN)
def test_pfd_survives_a_disconnected_hypergraph_skeleton(kind, P3):
    assert not is_connected(cartesian_skeleton(SPLIT_SKELETON).skeleton)
    assert pfd(SPLIT_SKELETON, kind).factors == (SPLIT_SKELETON,)
    h, _ = product(SPLIT_SKELETON, P3, kind)
    report = pfd(h, kind)
    assert same_up_to_isomorphism(report.factors, [SPLIT_SKELETON, P3])
    assert report.certificate.valid


@pytest.mark.parametrize("tree", [((0, 1), 2), (0, (1, 2))])
def test_strong_pfd_under_either_nesting(tree, P3):
    factors = [T3_THIN, P3, P3]
    h, _ = product_tree(factors, tree, ProductKind.STRONG)
    report = pfd(h, ProductKind.STRONG)
    assert same_up_to_isomorphism(report.factors, factors)
    assert report.certificate.valid
    assert bracketing_leaves(report.bracketing) == (0, 1, 2)
    assert certify(h, report.factors, report.coords, ProductKind.STRONG, bracketing=report.bracketing).valid


def test_bracketing_of_two_factors(P3):
    king, _ = product(P3, P3, ProductKind.STRONG)
    assert pfd(king, ProductKind.STRONG).bracketing == (0, 1)
    assert pfd(T3_THIN, ProductKind.STRONG).bracketing == 0


@pytest.mark.property_based
@RANDOM_SETTINGS
@given(thin_connected_hypergraphs(max_n=5), thin_connected_hypergraphs(max_n=5))
def test_random_products_round_trip(h1, h2):
    for kind in NONCARTESIAN:
        h, _ = product(h1, h2, kind)
        report = pfd(h, kind)
        assert report.certificate.valid
        assert same_up_to_isomorphism(report.factors, pfd(h1, kind).factors + pfd(h2, kind).factors)


@pytest.mark.property_based
@RANDOM_SETTINGS
@given(thin_connected_hypergraphs(max_n=4, max_rank=2), thin_connected_hypergraphs(max_n=4, max_rank=2))
def test_normal_and_strong_agree_on_graphs(g1, g2):
    h, _ = product(g1, g2, ProductKind.STRONG)
    normal, strong = pfd(h, ProductKind.NORMAL), pfd(h, ProductKind.STRONG)
    assert normal.factors == strong.factors
    assert normal.index_partition == strong.index_partition


@pytest.mark.oracle
@pytest.mark.property_based
@RANDOM_SETTINGS
@given(thin_connected_hypergraphs(max_n=7))
def test_pfd_of_random_instances_agrees_with_exhaustive_search(h):
    for kind in NONCARTESIAN:
        assert same_up_to_isomorphism(pfd(h, kind).factors, brute_pfd(h, kind))
