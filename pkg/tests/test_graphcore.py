import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sunitgraph.errors import InvalidOrder
from sunitgraph.graphcore import (
    Graph,
    all_graphs,
    bridges,
    complement,
    complete_bipartite,
    complete_graph,
    components,
    cycle,
    delta_components,
    disjoint_union,
    empty_graph,
    h_graph,
    hypercube,
    is_bipartite,
    is_connected,
    is_delta_connected,
    is_doubly_connected,
    is_forest,
    is_isomorphic,
    is_isomorphism,
    path,
    random_forest,
    random_graph,
    star,
    triangle_graph,
    triangles,
)

# two triangles joined at a vertex
BOWTIE = Graph.from_edges(5, [(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)])
# G^Δ has two components whose carriers {0,1,2} and {0,1,3,4,5,6} share two vertices
TWO_BLOCKS = Graph.from_edges(
    7,
    [(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4), (3, 5), (4, 5), (4, 6), (5, 6), (1, 5), (1, 6)],
)


@st.composite
def graphs(draw, max_n=7):
    n = draw(st.integers(1, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True) if pairs else st.just([]))
    return Graph.from_edges(n, chosen)


def test_generators():
    assert is_isomorphic(hypercube(2), cycle(4)) is not None
    assert hypercube(3).has_edge(0b010, 0b110) and not hypercube(3).has_edge(0, 3)
    assert complete_bipartite(2, 2).num_edges == 4
    assert cycle(3) == complete_graph(3)
    assert path(3).edge_list() == [(0, 1), (1, 2)]
    assert star(4).degree(0) == 4
    with pytest.raises(InvalidOrder):
        cycle(2)
    assert random_graph(6, 0.5, seed=1) == random_graph(6, 0.5, seed=1)


def test_components_examples():
    assert components(empty_graph(3)) == [[0], [1], [2]]
    assert components(cycle(4)) == [[0, 1, 2, 3]]
    assert components(Graph.from_edges(3, [(0, 1)])) == [[0, 1], [2]]


def test_complement_examples():
    assert complement(complete_graph(4)).num_edges == 0
    assert complement(cycle(4)).edge_list() == [(0, 2), (1, 3)]


@given(graphs())
def test_complement_is_involution(G):
    assert complement(complement(G)) == G


def test_doubly_connected_examples():
    assert is_doubly_connected(cycle(5))
    assert not is_doubly_connected(path(3))
    assert not is_doubly_connected(disjoint_union(cycle(3), cycle(3)))


@given(graphs())
def test_bridges_by_edge_deletion(G):
    n_comp = len(components(G))
    expected = [e for e in G.edge_list() if len(components(G.without_edge(e))) > n_comp]
    assert sorted(bridges(G)) == expected


def test_forest_and_bipartite():
    assert is_forest(path(5)) and is_bipartite(path(5))
    assert not is_forest(cycle(5)) and not is_bipartite(cycle(5))
    assert not is_forest(complete_bipartite(2, 3)) and is_bipartite(complete_bipartite(2, 3))


def test_triangle_graph_examples():
    assert triangle_graph(cycle(4)).num_edges == 0
    assert triangle_graph(cycle(4)).n == 4
    assert triangle_graph(complete_graph(3)) == complete_graph(3)
    T = triangle_graph(complete_graph(4))
    assert T.n == 6 and T.degree_sequence() == [4] * 6


def brute_triangle_graph(G):
    edges = G.edge_list()
    index = {e: k for k, e in enumerate(edges)}
    adj = set()
    for a, b, c in itertools.combinations(range(G.n), 3):
        if G.has_edge(a, b) and G.has_edge(a, c) and G.has_edge(b, c):
            sides = [index[(a, b)], index[(a, c)], index[(b, c)]]
            adj.update(itertools.combinations(sorted(sides), 2))
    return Graph.from_edges(len(edges), adj)


@given(graphs(max_n=8))
def test_triangle_graph_against_brute_force(G):
    assert triangle_graph(G) == brute_triangle_graph(G)
    listed = {t for t in itertools.combinations(range(G.n), 3)
              if all(G.has_edge(x, y) for x, y in itertools.combinations(t, 2))}
    assert set(triangles(G)) == listed


def test_h_graph_examples():
    H, carriers = h_graph(BOWTIE)
    assert H.n == 2 and H.num_edges == 0
    H, _ = h_graph(complete_graph(4))
    assert H.n == 1
    assert is_delta_connected(complete_graph(4))


def test_two_triangles_sharing_an_edge_is_delta_connected():
    diamond = Graph.from_edges(4, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)])
    assert is_delta_connected(diamond)
    H, carriers = h_graph(diamond)
    assert H.n == 1 and carriers == [[0, 1, 2, 3]]


def test_h_graph_single_edge_from_two_delta_components():
    assert not is_connected(triangle_graph(TWO_BLOCKS))
    H, carriers = h_graph(TWO_BLOCKS)
    assert carriers == [[0, 1, 2], [0, 1, 3, 4, 5, 6]]
    assert H == Graph.from_edges(2, [(0, 1)])


def test_delta_components_of_triangle_free_graph_are_single_edges():
    assert delta_components(cycle(5)) == [list(e) for e in cycle(5).edge_list()]


def test_isomorphism_examples():
    assert is_isomorphic(cycle(4), complete_bipartite(2, 2)) is not None
    assert is_isomorphic(cycle(6), disjoint_union(cycle(3), cycle(3))) is None


@settings(max_examples=60)
@given(graphs(max_n=7), st.randoms(use_true_random=False))
def test_isomorphic_to_permuted_copy(G, rnd):
    perm = list(range(G.n))
    rnd.shuffle(perm)
    H = G.relabel(perm)
    witness = is_isomorphic(G, H)
    assert witness is not None and is_isomorphism(G, H, witness)


def test_isomorphism_agrees_with_networkx():
    nx = pytest.importorskip("networkx")
    rnd = random.Random(5)
    for _ in range(150):
        n = rnd.randint(1, 7)
        G = random_graph(n, rnd.random(), seed=rnd.randrange(10**6))
        H = random_graph(n, rnd.random(), seed=rnd.randrange(10**6))
        if G.num_edges != H.num_edges:
            continue
        g, h = nx.Graph(), nx.Graph()
        g.add_nodes_from(range(n))
        h.add_nodes_from(range(n))
        g.add_edges_from(G.edge_list())
        h.add_edges_from(H.edge_list())
        assert (is_isomorphic(G, H) is not None) == nx.is_isomorphic(g, h)


def test_all_graphs_counts():
    assert [sum(1 for _ in all_graphs(n)) for n in range(7)] == [1, 1, 2, 4, 11, 34, 156]


def test_random_forest_is_forest():
    for seed in range(30):
        assert is_forest(random_forest(9, seed=seed))


def test_json_round_trip_and_edge_list_parse():
    G = cycle(5)
    assert Graph.from_json(G.to_json()) == G
    assert Graph.parse("0 1\n1 2\n# note\n4\n") == Graph.from_edges(5, [(0, 1), (1, 2)])
    with pytest.raises(ValueError):
        Graph.from_edges(2, [(0, 0)])
