from itertools import combinations, permutations
from math import factorial

import networkx as nx
import pytest

from packbound.enumeration import enumerate_connected, find_isomorphism, is_isomorphic
from packbound.graph import Graph, complete_graph, cycle_graph, path_graph, to_graph6

CONNECTED_COUNTS = {1: 1, 2: 1, 3: 2, 4: 6, 5: 21, 6: 112, 7: 853}


def _labeled_connected(n):
    pairs = list(combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        g = Graph(n, [p for i, p in enumerate(pairs) if mask >> i & 1])
        if g.is_connected():
            yield g


def _brute_canonical(g):
    return min(tuple(sorted(tuple(sorted((p[u], p[v]))) for u, v in g.edges()))
               for p in permutations(range(g.n)))


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_counts_match_brute_force_classes(n):
    classes = {_brute_canonical(g) for g in _labeled_connected(n)}
    ours = list(enumerate_connected(n))
    assert len(ours) == len(classes) == CONNECTED_COUNTS[n]
    assert {_brute_canonical(g) for g in ours} == classes


def _automorphisms(g):
    edges = set(g.edges())
    return sum(
        1 for p in permutations(range(g.n))
        if {tuple(sorted((p[u], p[v]))) for u, v in edges} == edges
    )


def test_n6_orbit_sizes_cover_all_labeled_graphs():
    # pairwise non-isomorphic reps whose orbits sum to every labeled connected
    # graph on 6 vertices must hit every class exactly once
    ours = list(enumerate_connected(6))
    assert len(ours) == 112
    labeled = sum(1 for _ in _labeled_connected(6))
    assert sum(factorial(6) // _automorphisms(g) for g in ours) == labeled
    for a, b in combinations(ours, 2):
        if sorted(a.degrees) == sorted(b.degrees) and a.m == b.m:
            assert not is_isomorphic(a, b)


@pytest.mark.parametrize("n", range(1, 8))
def test_matches_networkx_atlas(n):
    atlas = [h for h in nx.graph_atlas_g() if h.number_of_nodes() == n and nx.is_connected(h)]
    ours = list(enumerate_connected(n))
    assert len(ours) == len(atlas) == CONNECTED_COUNTS[n]
    buckets = {}
    for h in atlas:
        buckets.setdefault(nx.weisfeiler_lehman_graph_hash(h), []).append(h)
    matched = set()
    for g in ours:
        h_g = nx.Graph()
        h_g.add_nodes_from(range(n))
        h_g.add_edges_from(g.edges())
        hits = [id(h) for h in buckets.get(nx.weisfeiler_lehman_graph_hash(h_g), [])
                if nx.is_isomorphic(h, h_g)]
        assert len(hits) == 1
        matched.add(hits[0])
    assert len(matched) == len(atlas)


def test_all_connected_and_deterministic():
    first = [to_graph6(g) for g in enumerate_connected(6)]
    assert first == [to_graph6(g) for g in enumerate_connected(6)]
    assert all(g.is_connected() for g in enumerate_connected(6))


@pytest.mark.parametrize("n", [0, 8])
def test_out_of_range(n):
    with pytest.raises(ValueError):
        list(enumerate_connected(n))


def test_find_isomorphism_returns_mapping():
    g = path_graph(4)
    h = Graph(4, [(2, 0), (0, 3), (3, 1)])
    perm = find_isomorphism(g, h)
    assert g.relabel(perm) == h
    assert find_isomorphism(cycle_graph(4), path_graph(4)) is None
    assert not is_isomorphic(complete_graph(3), path_graph(3))
