import random
from fractions import Fraction

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from packbound.enumeration import enumerate_connected, is_isomorphic
from packbound.graph import (
    Graph,
    Graph6Error,
    augment_weak_supports,
    complete_graph,
    cycle_graph,
    parse_edge_list,
    parse_graph6,
    path_graph,
    read_graphs,
    star_graph,
    structural_profile,
    to_edge_list,
    to_graph6,
)


@st.composite
def graphs(draw, max_n=12):
    n = draw(st.integers(0, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph(n, chosen)


def test_graph6_examples():
    assert parse_graph6("A_") == complete_graph(2)
    assert parse_graph6("Bw") == complete_graph(3)
    assert parse_graph6("@") == Graph(1)
    assert to_graph6(complete_graph(2)) == "A_"
    assert to_graph6(Graph(1)) == "@"
    assert to_graph6(complete_graph(3)) == "Bw"


def test_graph6_header_prefix_accepted():
    assert parse_graph6(">>graph6<<Bw\n") == complete_graph(3)


@pytest.mark.parametrize("bad", ["", "A", "A__", "Bw!", "~", "A`"])
def test_graph6_rejects_malformed(bad):
    with pytest.raises(Graph6Error):
        parse_graph6(bad)


def test_graph6_rejects_large_graphs():
    with pytest.raises(Graph6Error):
        to_graph6(Graph(63))


def test_graph6_agrees_with_networkx():
    rng = random.Random(7)
    for _ in range(200):
        n = rng.randint(1, 30)
        g = Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < 0.4])
        h = nx.empty_graph(n)
        h.add_edges_from(g.edges())
        ref = nx.to_graph6_bytes(h, header=False).decode().strip()
        assert to_graph6(g) == ref
        back = nx.from_graph6_bytes(ref.encode())
        assert sorted(tuple(sorted(e)) for e in back.edges()) == list(g.edges())


@settings(max_examples=200)
@given(graphs(max_n=30))
def test_graph6_round_trip(g):
    assert parse_graph6(to_graph6(g)) == g


@pytest.mark.parametrize("n", range(1, 7))
def test_graph6_round_trip_enumerated(n):
    for g in enumerate_connected(n):
        assert parse_graph6(to_graph6(g)) == g


@given(graphs())
def test_handshake_and_symmetry(g):
    assert sum(g.degrees) == 2 * g.m
    for v in g.vertices():
        assert v not in g.neighbors(v)
        for w in g.neighbors(v):
            assert v in g.neighbors(w)


def test_constructor_rejects_loops_and_range():
    with pytest.raises(ValueError):
        Graph(2, [(0, 0)])
    with pytest.raises(ValueError):
        Graph(2, [(0, 2)])


def test_connectivity():
    assert path_graph(5).is_connected()
    assert not Graph(3, [(0, 1)]).is_connected()
    assert Graph(1).is_connected()


def test_edge_list_round_trip():
    g = cycle_graph(5)
    assert parse_edge_list(to_edge_list(g)) == g
    with pytest.raises(ValueError):
        parse_edge_list("3 2\n0 1\n")
    with pytest.raises(ValueError):
        parse_edge_list("3 2\n0 1\n1 0\n")


def test_read_graphs_autodetects():
    assert [g for _, g in read_graphs("2 1\n0 1\n")] == [complete_graph(2)]
    assert [g for _, g in read_graphs("A_\n\nBw\n")] == [complete_graph(2), complete_graph(3)]
    with pytest.raises(Graph6Error, match="line 2"):
        list(read_graphs("A_\nA\n"))


@pytest.mark.parametrize(
    "g, ell, s, s1, dstar",
    [
        (star_graph(3), 3, 1, 0, 3),
        (path_graph(4), 2, 2, 2, 2),
        (cycle_graph(4), 0, 0, 0, 2),
        (complete_graph(2), 2, 2, 2, None),
    ],
)
def test_structural_profile(g, ell, s, s1, dstar):
    p = structural_profile(g)
    assert (p.ell, p.s, p.s1, p.delta_star) == (ell, s, s1, dstar)
    assert p.weak_supports <= p.supports
    assert all(p.pendant_count_per_support[u] == 1 for u in p.weak_supports)


def test_augment_path():
    g2 = augment_weak_supports(path_graph(4))
    p = structural_profile(g2)
    assert (g2.n, p.ell, p.s) == (6, 4, 2)
    spider = Graph(6, [(0, 1), (1, 2), (2, 3), (1, 4), (2, 5)])
    assert is_isomorphic(g2, spider)


def test_augment_identity_cases():
    for g in (cycle_graph(4), star_graph(3)):
        assert augment_weak_supports(g) is g


def test_augment_precondition():
    with pytest.raises(ValueError):
        augment_weak_supports(complete_graph(2))
    with pytest.raises(ValueError):
        augment_weak_supports(Graph(4, [(0, 1), (2, 3)]))


@pytest.mark.parametrize("n", range(3, 8))
def test_augment_properties_exhaustive(n):
    for g in enumerate_connected(n):
        p = structural_profile(g)
        g2 = augment_weak_supports(g)
        p2 = structural_profile(g2)
        assert g2.n == g.n + p.s1
        assert p2.ell == p.ell + p.s1
        assert p2.supports == p.supports
        assert not p2.weak_supports
        assert all(c >= 2 for c in p2.pendant_count_per_support.values())
        # weak supports gain a neighbour, so delta* can only grow; the pendant
        # bound is nonincreasing in delta*, which is all the L_2 bound needs
        assert p2.delta_star >= p.delta_star
        assert _pendant_rhs(g2.n, p2.ell, p2.s, p2.delta_star) <= _pendant_rhs(
            g2.n, p2.ell, p2.s, p.delta_star)


def _pendant_rhs(n, ell, s, ds):
    return Fraction(2 * (n - ell + s * ds), 1 + ds)


def test_augment_can_raise_delta_star():
    # P4: both supports are weak and have degree 2; in the spider they have degree 3
    assert structural_profile(path_graph(4)).delta_star == 2
    assert structural_profile(augment_weak_supports(path_graph(4))).delta_star == 3
