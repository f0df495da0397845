import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from strongdim.graph import (
    Graph,
    complement,
    complete,
    complete_multipartite,
    cycle,
    disjoint_union,
    from_graph6,
    generalized_tree,
    generate,
    graphs_isomorphic,
    grid,
    make_graph,
    path,
    random_connected,
    star,
    to_dot,
    to_graph6,
)
from strongdim.metrics import blocks, cut_vertices, is_connected


def random_graph_strategy(max_n=10):
    @st.composite
    def build(draw):
        n = draw(st.integers(min_value=0, max_value=max_n))
        pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
        mask = draw(st.integers(min_value=0, max_value=(1 << len(pairs)) - 1))
        edges = [pairs[i] for i in range(len(pairs)) if (mask >> i) & 1]
        return make_graph(n, edges)

    return build()


# -- construction -----------------------------------------------------------


def test_make_graph_triangle():
    g = make_graph(3, [(0, 1), (1, 2), (0, 2)])
    assert g == complete(3)


def test_make_graph_empty_and_path():
    assert make_graph(2, []).num_edges == 0
    p4 = make_graph(4, [(0, 1), (1, 2), (2, 3)])
    assert p4 == path(4)


def test_make_graph_deduplicates():
    g = make_graph(3, [(0, 1), (1, 0), (0, 1)])
    assert g.num_edges == 1


def test_make_graph_rejects_bad_edges():
    with pytest.raises(ValueError):
        make_graph(3, [(0, 3)])
    with pytest.raises(ValueError):
        make_graph(3, [(1, 1)])
    with pytest.raises(ValueError):
        make_graph(-1, [])


@given(random_graph_strategy())
def test_adjacency_symmetric_irreflexive(g):
    for u in range(g.n):
        assert not (g.adj[u] >> u) & 1
        for v in g.neighbors(u):
            assert g.has_edge(v, u)


# -- generators -------------------------------------------------------------


def test_family_edge_counts():
    assert complete(6).num_edges == 15
    assert cycle(5).num_edges == 5
    assert all(cycle(5).degree(v) == 2 for v in range(5))
    assert grid(3, 4).n == 12
    assert grid(3, 4).num_edges == 4 * 2 + 3 * 3
    assert star(5).degree_sequence() == (1, 1, 1, 1, 4)


def test_kpartite_2_2_is_c4():
    assert graphs_isomorphic(complete_multipartite([2, 2]), cycle(4))


def test_generalized_tree_two_triangles():
    g = generalized_tree([3, 3], seed=7)
    assert g.n == 5
    assert len(cut_vertices(g)) == 1
    bl = blocks(g)
    assert len(bl) == 2 and all(len(b) == 3 for b in bl)


def test_generalized_tree_rejects_small_blocks():
    with pytest.raises(ValueError):
        generalized_tree([3, 1], seed=0)


def test_random_connected_is_connected_and_reproducible():
    g1 = random_connected(8, 0.4, seed=5)
    g2 = random_connected(8, 0.4, seed=5)
    assert g1 == g2
    assert is_connected(g1)


def test_random_connected_retry_cap():
    with pytest.raises(ValueError):
        random_connected(30, 0.0001, seed=1)


def test_generate_mini_language():
    assert generate("cycle:6") == cycle(6)
    assert generate("grid:3x4") == grid(3, 4)
    assert generate("kpartite:2,2,3") == complete_multipartite([2, 2, 3])
    assert generate("gtree:3,3@7") == generalized_tree([3, 3], 7)
    assert generate("random:8,0.4,17") == random_connected(8, 0.4, 17)
    assert generate("star:5") == star(5)
    assert generate("path:3") == path(3)
    assert generate("complete:4") == complete(4)
    with pytest.raises(ValueError):
        generate("banana:3")
    with pytest.raises(ValueError):
        generate("cycle")
    with pytest.raises(ValueError):
        generate("grid:3by4")


# -- combinators ------------------------------------------------------------


def test_disjoint_union_counts():
    g = disjoint_union([complete(2), complete(1)])
    assert (g.n, g.num_edges) == (3, 1)
    matching = disjoint_union([complete(2), complete(2)])
    assert (matching.n, matching.num_edges) == (4, 2)
    assert matching.degree_sequence() == (1, 1, 1, 1)


def test_complement_of_complete_is_empty():
    assert complement(complete(5)).num_edges == 0


def test_c5_is_self_complementary():
    assert graphs_isomorphic(complement(cycle(5)), cycle(5))


@given(random_graph_strategy())
def test_complement_is_involution(g):
    assert complement(complement(g)) == g


# -- isomorphism ------------------------------------------------------------


def test_isomorphic_classics():
    assert graphs_isomorphic(cycle(4), complete_multipartite([2, 2]))
    assert not graphs_isomorphic(path(4), star(4))


def test_isomorphism_respects_size_cap():
    with pytest.raises(ValueError):
        graphs_isomorphic(complete(17), complete(17))
    # different sizes short-circuit before the cap check
    assert not graphs_isomorphic(complete(17), complete(18), size_cap=5)


def brute_isomorphic(a, b):
    from itertools import permutations

    if a.n != b.n:
        return False
    for perm in permutations(range(a.n)):
        if all(
            a.has_edge(u, v) == b.has_edge(perm[u], perm[v])
            for u in range(a.n)
            for v in range(u + 1, a.n)
        ):
            return True
    return False


@given(random_graph_strategy(max_n=6), random_graph_strategy(max_n=6))
@settings(max_examples=80)
def test_isomorphism_matches_permutation_oracle(a, b):
    assert graphs_isomorphic(a, b) == brute_isomorphic(a, b)


@given(random_graph_strategy(max_n=7), st.randoms(use_true_random=False))
@settings(max_examples=60)
def test_isomorphism_reflexive_and_permutation_invariant(g, rnd):
    assert graphs_isomorphic(g, g)
    perm = list(range(g.n))
    rnd.shuffle(perm)
    from strongdim.graph import relabel

    assert graphs_isomorphic(g, relabel(g, perm))
    assert graphs_isomorphic(relabel(g, perm), g)


# -- graph6 -----------------------------------------------------------------


def test_graph6_known_codes():
    assert to_graph6(complete(1)) == "@"
    assert from_graph6("A_") == complete(2)
    # decode by hand: 'D' means n=5, '?{' packs the bit stream
    g = from_graph6("D?{")
    assert g.n == 5


def test_graph6_header_strip():
    assert from_graph6(">>graph6<<A_") == complete(2)


@given(random_graph_strategy(max_n=12))
@settings(max_examples=120)
def test_graph6_round_trip(g):
    assert from_graph6(to_graph6(g)) == g


def test_graph6_round_trip_large_header():
    g = path(100)
    assert from_graph6(to_graph6(g)) == g


def test_graph6_empty_graph():
    g = make_graph(0, [])
    assert to_graph6(g) == "?"
    assert from_graph6("?") == g


def test_graph6_error_cases():
    with pytest.raises(ValueError):
        from_graph6("")
    with pytest.raises(ValueError):
        from_graph6("D?")        # truncated bit stream
    with pytest.raises(ValueError):
        from_graph6("D?{?")      # trailing garbage
    with pytest.raises(ValueError):
        from_graph6("A,")        # byte outside 63..126
    with pytest.raises(ValueError):
        from_graph6("~~~~~~~~")  # >= 2^18 vertices
    with pytest.raises(ValueError):
        from_graph6("~??@")      # small order written in the long form


def test_graph6_nonzero_padding_rejected():
    # K2 needs one pair bit; the remaining 5 bits must be zero padding
    with pytest.raises(ValueError):
        from_graph6("A" + chr(63 + 0b111111))


@given(st.text(st.characters(min_codepoint=33, max_codepoint=126), max_size=12))
@settings(max_examples=200)
def test_graph6_decoder_never_crashes(text):
    # arbitrary printable input either decodes or raises ValueError, and
    # anything that decodes re-encodes to the same canonical string
    try:
        g = from_graph6(text)
    except ValueError:
        return
    assert to_graph6(g) == text.strip().removeprefix(">>graph6<<")


# -- DOT --------------------------------------------------------------------


def test_to_dot_contains_edges_and_labels():
    text = to_dot(path(3), labels={0: "0,0", 1: "0,1", 2: "0,2"})
    assert "graph G {" in text
    assert '0 [label="0,0"];' in text
    assert "1 -- 2;" in text
