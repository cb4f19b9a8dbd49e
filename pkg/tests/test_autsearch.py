import math
from collections import deque

import networkx as nx
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from networkx.algorithms.isomorphism import GraphMatcher

from cayleyaut.autsearch import (
    SearchStats,
    SimpleGraph,
    automorphism_group,
    brute_force_automorphisms,
    complete_bipartite,
    cycle_graph,
    equitable_refine,
    is_edge_preserving,
    path_graph,
    vertex_stabilizer,
)
from cayleyaut.cayley import build_cayley, family_generators, left_regular_embed, right_regular_embed
from cayleyaut.errors import CapacityError
from cayleyaut.groups import group_from_generators
from cayleyaut.perm import Perm, identity
from cayleyaut.tgraph import build_transposition_graph, small_graph_automorphisms

from corpus import small_corpus

# |Aut(MBS_4)|, counted by brute_force_automorphisms and by networkx's VF2 matcher
MBS4_ORDER = 768


def nx_count(graph):
    G = nx.Graph()
    G.add_nodes_from(range(graph.vertex_count))
    G.add_edges_from(graph.edges())
    return sum(1 for _ in GraphMatcher(G, G).isomorphisms_iter())


def is_equitable(graph, colors):
    sig = {}
    for v, nbrs in enumerate(graph.adjacency):
        counts = tuple(np.bincount([colors[w] for w in nbrs], minlength=max(colors) + 1))
        if sig.setdefault(colors[v], counts) != counts:
            return False
    return True


def test_refine_regular_uniform():
    X = build_cayley(4, family_generators("mbs", 4))
    c = equitable_refine(X, [0] * 24)
    assert set(c.tolist()) == {0}


def test_refine_individualized_vertex_is_at_least_distance_partition():
    X = build_cayley(5, family_generators("mbs", 5))
    c = equitable_refine(X, [1] + [0] * 119)
    dist = [-1] * 120
    dist[0] = 0
    queue = deque([0])
    while queue:
        v = queue.popleft()
        for w in X.adjacency[v]:
            if dist[w] < 0:
                dist[w] = dist[v] + 1
                queue.append(w)
    # same color => same distance from the identity vertex
    by_color = {}
    for v in range(120):
        assert by_color.setdefault(int(c[v]), dist[v]) == dist[v]
    assert is_equitable(X, c.tolist())
    assert np.array_equal(equitable_refine(X, c), c)


def test_refine_path_splits_by_distance_from_ends():
    c = equitable_refine(path_graph(5), [0] * 5)
    assert c[0] == c[4] and c[1] == c[3] and len(set(c.tolist())) == 3


@pytest.mark.parametrize(
    "graph, expected",
    [
        (complete_bipartite(3, 3), 72),
        (cycle_graph(6), 12),
        (path_graph(3), 2),
        (build_cayley(4, family_generators("mbs", 4)), MBS4_ORDER),
    ],
)
def test_small_orders_both_routes(graph, expected):
    assert automorphism_group(graph).order == expected
    assert brute_force_automorphisms(graph).order == expected


def test_mbs4_order_matches_networkx():
    assert nx_count(build_cayley(4, family_generators("mbs", 4))) == MBS4_ORDER
    assert MBS4_ORDER > 24 * 8


def test_mbs5_order():
    A = automorphism_group(build_cayley(5, family_generators("mbs", 5)))
    assert A.order == 1200


def test_capacity():
    with pytest.raises(CapacityError):
        brute_force_automorphisms(cycle_graph(41))
    with pytest.raises(CapacityError):
        automorphism_group(cycle_graph(50), bound=40)


@pytest.mark.parametrize("name", sorted(small_corpus()))
def test_oracle_equivalence(name):
    graph = small_corpus()[name]
    A = automorphism_group(graph)
    B = brute_force_automorphisms(graph)
    assert A.order == B.order
    assert all(B.contains(g) for g in A.generators)
    assert all(A.contains(g) for g in B.generators)
    assert all(is_edge_preserving(graph, g) for g in A.generators)
    if graph.vertex_count <= 20:
        assert A.order == nx_count(graph)


def test_determinism():
    X = build_cayley(5, family_generators("mbs", 5))
    a, b = automorphism_group(X), automorphism_group(X)
    assert a.generators == b.generators and a.order == b.order


@pytest.mark.parametrize("fam,n", [("mbs", 3), ("mbs", 4), ("mbs", 5), ("bubble", 5), ("star", 5)])
def test_lower_bound_from_explicit_subgroups(fam, n):
    S = family_generators(fam, n)
    X = build_cayley(n, S)
    aut_t = small_graph_automorphisms(build_transposition_graph(S))
    A = automorphism_group(X)
    for s in S.perms():
        assert A.contains(right_regular_embed(s, n))
    for a in aut_t.generators:
        assert A.contains(left_regular_embed(a, n))
    assert A.order >= math.factorial(n) * aut_t.order


def test_stabilizers():
    X = build_cayley(5, family_generators("mbs", 5))
    A = automorphism_group(X)
    assert vertex_stabilizer(A, 0).order == 10
    R = group_from_generators([right_regular_embed(s, 5) for s in X.S.perms()])
    assert vertex_stabilizer(R, 17).order == 1
    assert vertex_stabilizer(automorphism_group(cycle_graph(6)), 2).order == 2


def test_edge_preserving():
    X = build_cayley(5, family_generators("mbs", 5))
    assert is_edge_preserving(X, identity(120))
    aut_t = small_graph_automorphisms(build_transposition_graph(X.S))
    assert all(is_edge_preserving(X, left_regular_embed(a, 5)) for a in aut_t.elements())
    # swap an end vertex of P3 with its middle
    assert not is_edge_preserving(path_graph(3), Perm((1, 0, 2)))


def test_asymmetric_graph_has_trivial_group():
    # spider with legs of lengths 1, 2, 3: the smallest asymmetric tree
    g = SimpleGraph.from_edges(7, [(0, 1), (0, 2), (2, 3), (0, 4), (4, 5), (5, 6)])
    assert automorphism_group(g).order == 1 == brute_force_automorphisms(g).order


def test_search_stats_are_filled():
    stats = SearchStats()
    automorphism_group(build_cayley(4, family_generators("mbs", 4)), stats=stats)
    assert stats.leaves >= 1 and stats.nodes >= stats.leaves


@st.composite
def graphs(draw):
    # brute force enumerates every automorphism, so keep n! small
    n = draw(st.integers(1, 7))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    edges = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return SimpleGraph.from_edges(n, edges)


@settings(max_examples=80, deadline=None)
@given(graphs())
def test_random_graphs_agree_with_oracle(graph):
    A = automorphism_group(graph)
    B = brute_force_automorphisms(graph)
    assert A.order == B.order
    assert all(B.contains(g) for g in A.generators)
