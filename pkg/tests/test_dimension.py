import random

import pytest
from hypothesis import given, settings

from strongdim.cover import max_clique
from strongdim.dimension import (
    DimensionResult,
    brute_force_dimension,
    c1_lower,
    c3_exact,
    cgraph_exact,
    formula,
    general_lower,
    general_upper,
    is_strong_generator,
    odd_odd_lower,
    odd_odd_upper,
    strong_metric_dimension,
    strongly_resolves,
)
from strongdim.graph import (
    complement,
    complete,
    cycle,
    disjoint_union,
    make_graph,
    path,
    random_connected,
)
from strongdim.metrics import all_pairs_distances, is_connected
from strongdim.products import product
from strongdim.resolving import strong_resolving_graph

from test_graph import random_graph_strategy


# -- strongly_resolves -------------------------------------------------------


def test_resolver_endpoint_always_works():
    g = cycle(6)
    dm = all_pairs_distances(g)
    for u in range(6):
        for v in range(6):
            if u != v:
                assert strongly_resolves(dm, u, u, v)


def test_path_geodesic_resolution():
    dm = all_pairs_distances(path(4))
    assert strongly_resolves(dm, 0, 1, 2)


def test_c4_non_resolution():
    dm = all_pairs_distances(cycle(4))
    assert not strongly_resolves(dm, 0, 1, 3)


def test_resolver_rejects_equal_pair():
    dm = all_pairs_distances(path(3))
    with pytest.raises(ValueError):
        strongly_resolves(dm, 0, 1, 1)


# -- generators ---------------------------------------------------------------


def test_full_vertex_set_generates():
    for g in (cycle(5), path(6), complete(4)):
        assert is_strong_generator(g, range(g.n))


def test_path_endpoint_generates():
    for n in range(2, 9):
        assert is_strong_generator(path(n), {0})
        assert is_strong_generator(path(n), {n - 1})


def test_k3_singleton_does_not_generate():
    assert not is_strong_generator(complete(3), {0})


# -- dimension pipeline ---------------------------------------------------------


def test_dim_of_complete():
    for n in range(2, 8):
        assert strong_metric_dimension(complete(n)).dim == n - 1


def test_dim_of_cycles():
    for r in range(1, 5):
        assert strong_metric_dimension(cycle(2 * r + 1)).dim == r + 1
        assert strong_metric_dimension(cycle(2 * r + 2)).dim == r + 1


def test_dim_rejects_trivial_and_disconnected():
    with pytest.raises(ValueError):
        strong_metric_dimension(complete(1))
    with pytest.raises(ValueError):
        strong_metric_dimension(disjoint_union([complete(2), complete(2)]))


def test_basis_is_validated_generator():
    res = strong_metric_dimension(cycle(7))
    assert is_strong_generator(cycle(7), res.basis)
    assert res.method == "sr_cover"
    assert len(res.basis) == res.dim


# -- brute force oracle -----------------------------------------------------------


def test_brute_force_examples():
    assert brute_force_dimension(path(5)).dim == 1
    assert brute_force_dimension(cycle(6)).dim == 3


def test_brute_force_cap():
    with pytest.raises(ValueError):
        brute_force_dimension(path(16))


def test_brute_force_minimality_witness():
    g = cycle(6)
    res = brute_force_dimension(g)
    for drop in res.basis:
        smaller = set(res.basis) - {drop}
        assert not smaller or not is_strong_generator(g, smaller)


def test_oracle_equivalence_seeded():
    rng = random.Random(99)
    for _ in range(60):
        n = rng.randrange(4, 10)
        g = random_connected(n, rng.choice([0.3, 0.5, 0.7]), rng.randrange(1 << 30))
        assert strong_metric_dimension(g).dim == brute_force_dimension(g).dim


@given(random_graph_strategy(max_n=7))
@settings(max_examples=60, deadline=None)
def test_oracle_equivalence_property(g):
    if g.n < 2 or not is_connected(g):
        return
    assert strong_metric_dimension(g).dim == brute_force_dimension(g).dim


@given(random_graph_strategy(max_n=8))
@settings(max_examples=60, deadline=None)
def test_dim_range_and_completeness_characterization(g):
    if g.n < 2 or not is_connected(g):
        return
    res = strong_metric_dimension(g)
    assert 1 <= res.dim <= g.n - 1
    sr = strong_resolving_graph(g).sr
    sr_complete = sr.num_edges == g.n * (g.n - 1) // 2
    assert (res.dim == g.n - 1) == sr_complete


def test_dimension_two_routes_agree():
    # alpha(SR) directly vs n - beta(SR) with beta from the clique engine
    for g in (cycle(7), path(6), product("strong", cycle(3), cycle(5))):
        sr = strong_resolving_graph(g).sr
        via_cover = strong_metric_dimension(g).dim
        via_clique = g.n - len(max_clique(complement(sr)))
        assert via_cover == via_clique


# -- closed forms ------------------------------------------------------------------


def test_formula_spot_values():
    assert c3_exact(2) == 13
    assert odd_odd_lower(1, 1) == odd_odd_upper(1, 1) == 8
    assert cgraph_exact(2, 3, 1, 1) == 4
    assert general_lower(3, 5, 2, 1) == 10
    assert general_upper(3, 5, 2, 1) == 11
    assert formula("tree_factor", n1=4, n2=3, leaves=2, dim_h=1) == 6
    assert formula("antipodal_factor", n1=6, n2=3, dim_h=1) == 12
    assert formula("grid_factor", n1=9, n2=2, dim_h=1) == 12
    assert formula("complete_factor", n1=4, n2=3, dim_h=1) == 10
    assert formula("kpartite_factor", n1=5, n2=3, k=2, dim_h=1) == 11
    assert formula("generalized_tree_factor", n1=5, n2=3, c=1, dim_h=1) == 11
    assert formula("odd_cycle_lower", r=2, n=4, dim_h=1) == 12
    assert formula("odd_cycle_upper", r=2, n=4, dim_h=1) == 14
    assert c1_lower(5, 5, 3, 3) == 19


def test_formula_matches_computation():
    # K2 x P3 has dimension 4, matching the C-graph closed form
    prod = product("strong", complete(2), path(3))
    assert strong_metric_dimension(prod).dim == 4
    assert brute_force_dimension(prod).dim == 4


def test_formula_domain_errors():
    with pytest.raises(ValueError):
        odd_odd_lower(3, 2)
    with pytest.raises(ValueError):
        formula("antipodal_factor", n1=5, n2=3, dim_h=1)
    with pytest.raises(ValueError):
        formula("no_such_formula", n1=1)
    with pytest.raises(ValueError):
        formula("c3_exact", t=0)


def test_formula_registry_is_callable():
    assert formula("c3_exact", t=1) == 8
    assert formula("odd_odd_upper", r=2, t=3) == 29
