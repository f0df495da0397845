import pytest
from hypothesis import given, settings

from strongdim.graph import (
    complete,
    cycle,
    disjoint_union,
    generalized_tree,
    grid,
    make_graph,
    path,
    random_connected,
    star,
)
from strongdim.metrics import (
    all_pairs_distances,
    blocks,
    cut_vertices,
    diameter,
    is_connected,
    is_generalized_tree,
    is_two_antipodal,
    leaf_count,
)
from strongdim.products import product

from test_graph import random_graph_strategy


def hypercube_q3():
    k2 = complete(2)
    return product("cartesian", k2, product("cartesian", k2, k2))


# -- distances ---------------------------------------------------------------


def test_known_distances():
    dm = all_pairs_distances(cycle(5))
    assert dm.dist(0, 2) == 2
    dm = all_pairs_distances(path(4))
    assert dm.dist(0, 3) == 3


def test_unreachable_sentinel_is_none():
    g = disjoint_union([complete(2), complete(1)])
    dm = all_pairs_distances(g)
    assert dm.dist(0, 2) is None
    assert dm.dist(0, 1) == 1


@given(random_graph_strategy(max_n=9))
@settings(max_examples=80)
def test_distance_matrix_invariants(g):
    dm = all_pairs_distances(g)
    for u in range(g.n):
        assert dm.dist(u, u) == 0
        for v in range(g.n):
            assert dm.dist(u, v) == dm.dist(v, u)
            if u != v:
                assert (dm.dist(u, v) == 1) == g.has_edge(u, v)
    for u in range(g.n):
        for v in range(g.n):
            for w in range(g.n):
                duv, dvw, duw = dm.dist(u, v), dm.dist(v, w), dm.dist(u, w)
                if duv is not None and dvw is not None:
                    assert duw is not None and duw <= duv + dvw


def test_distance_balls():
    dm = all_pairs_distances(path(4))
    assert dm.ball(0, 0) == 0b0001
    assert dm.ball(0, 1) == 0b0011
    assert dm.ball(0, 5) == 0b1111
    assert dm.ball(0, -1) == 0
    assert dm.eccentricity(0) == 3


# -- connectivity and diameter ------------------------------------------------


def test_is_connected_cases():
    assert is_connected(complete(1))
    assert not is_connected(disjoint_union([complete(2), complete(1)]))
    assert is_connected(grid(3, 3))


def test_diameter_requires_connected():
    with pytest.raises(ValueError):
        diameter(disjoint_union([complete(2), complete(2)]))
    assert diameter(cycle(6)) == 3
    assert diameter(grid(3, 4)) == 5


def test_two_antipodal_classification():
    assert is_two_antipodal(cycle(6))
    assert not is_two_antipodal(cycle(5))
    assert is_two_antipodal(hypercube_q3())
    assert is_two_antipodal(complete(2))
    assert not is_two_antipodal(path(3))


# -- blocks / cut vertices -----------------------------------------------------


def test_path_blocks():
    assert cut_vertices(path(4)) == frozenset({1, 2})
    assert sorted(sorted(b) for b in blocks(path(4))) == [[0, 1], [1, 2], [2, 3]]


def test_complete_single_block():
    assert cut_vertices(complete(4)) == frozenset()
    assert blocks(complete(4)) == [frozenset({0, 1, 2, 3})]


def test_generalized_tree_block_structure():
    g = generalized_tree([3, 3], seed=3)
    assert len(cut_vertices(g)) == 1
    assert all(len(b) == 3 for b in blocks(g))


def test_single_vertex_block():
    assert blocks(complete(1)) == [frozenset({0})]
    assert cut_vertices(complete(1)) == frozenset()


@given(random_graph_strategy(max_n=9))
@settings(max_examples=60)
def test_cut_vertex_iff_in_two_blocks(g):
    if g.n == 0 or not is_connected(g):
        return
    cuts = cut_vertices(g)
    bl = blocks(g)
    assert len(bl) >= 1
    assert frozenset().union(*bl) == frozenset(range(g.n))
    for v in range(g.n):
        in_blocks = sum(1 for b in bl if v in b)
        assert (in_blocks >= 2) == (v in cuts)


# -- generalized trees ----------------------------------------------------------


def test_trees_are_generalized_trees():
    for n in range(2, 8):
        assert is_generalized_tree(path(n))
    assert is_generalized_tree(star(6))
    assert leaf_count(path(6)) == 2
    assert leaf_count(star(6)) == 5


def test_c4_is_not_generalized_tree():
    assert not is_generalized_tree(cycle(4))


def test_constructed_gtree_recognized():
    assert is_generalized_tree(generalized_tree([4, 2, 3], seed=11))
    assert is_generalized_tree(complete(4))  # single complete block


def _random_tree(n, seed):
    import random

    rng = random.Random(seed)
    edges = [(rng.randrange(v), v) for v in range(1, n)]
    return make_graph(n, edges)


def test_random_trees_vertex_dichotomy():
    # in a generalized tree every vertex is a cut vertex or simplicial
    for seed in range(20):
        g = _random_tree(3 + seed % 10, seed)
        assert is_generalized_tree(g)
        cuts = cut_vertices(g)
        for v in range(g.n):
            closed = list(g.neighbors(v)) + [v]
            simplicial = all(
                g.has_edge(a, b) or a == b for a in closed for b in closed if a < b
            )
            assert v in cuts or simplicial
