import random
from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from packbound.enumeration import enumerate_connected_upto
from packbound.graph import Graph, complete_graph, cycle_graph, path_graph, star_graph
from packbound.solvers import (
    InvariantUndefined,
    Method,
    NodeLimitExceeded,
    SolveOptions,
    domination_number,
    double_domination_number,
    is_limited_packing,
    is_open_packing,
    is_packing,
    is_tuple_dominating,
    limited_packing_number,
    open_packing_number,
    packing_number,
    tuple_domination_number,
)

from .conftest import random_connected_graph

EXH = SolveOptions(force_exhaustive=True)
SMALL = list(enumerate_connected_upto(6))


def _subset_max(g, ok):
    """Plain power-set scan, independent of the library's own oracle."""
    return max(len(s) for r in range(g.n + 1) for s in combinations(range(g.n), r) if ok(set(s)))


def _subset_min(g, ok):
    return min(len(s) for r in range(g.n + 1) for s in combinations(range(g.n), r) if ok(set(s)))


# --- worked examples ---

@pytest.mark.parametrize("n", range(3, 10))
def test_star_l2_is_two(n):
    assert limited_packing_number(star_graph(n - 1), 2).value == 2


def test_lk_examples():
    assert limited_packing_number(path_graph(4), 2).value == 3
    assert limited_packing_number(cycle_graph(4), 3).value == 4
    for g in (path_graph(5), cycle_graph(6), star_graph(4)):
        assert limited_packing_number(g, g.max_degree + 1).value == g.n
        assert limited_packing_number(g, g.max_degree + 5).value == g.n


def test_packing_examples():
    for n in range(1, 8):
        assert packing_number(complete_graph(n)).value == 1
    assert packing_number(path_graph(4)).value == 2
    assert packing_number(path_graph(4)).witness == {0, 3}
    assert packing_number(cycle_graph(5)).value == 1


def test_open_packing_examples():
    assert open_packing_number(complete_graph(2)).value == 2
    assert open_packing_number(cycle_graph(4)).value == 2
    assert open_packing_number(complete_graph(3)).value == 1
    # isolated vertices have empty open neighbourhoods and always fit
    assert open_packing_number(Graph(3)).value == 3


def test_domination_examples():
    r = domination_number(star_graph(3))
    assert (r.value, r.witness) == (1, {0})
    assert double_domination_number(cycle_graph(4)).value == 3
    for n in range(2, 9):
        assert double_domination_number(complete_graph(n)).value == 2


def test_independent_oracle_on_named_graphs():
    for g in (path_graph(4), cycle_graph(4), cycle_graph(5), star_graph(3), complete_graph(4)):
        assert packing_number(g).value == _subset_max(g, lambda s: is_packing(g, s))
        assert open_packing_number(g).value == _subset_max(g, lambda s: is_open_packing(g, s))
        assert limited_packing_number(g, 2).value == _subset_max(
            g, lambda s: is_limited_packing(g, s, 2))
        assert double_domination_number(g).value == _subset_min(
            g, lambda s: is_tuple_dominating(g, s, 2))


# --- error handling ---

def test_tuple_domination_precondition():
    with pytest.raises(InvariantUndefined):
        double_domination_number(Graph(3, [(0, 1)]))
    with pytest.raises(InvariantUndefined):
        tuple_domination_number(cycle_graph(5), 4)
    assert tuple_domination_number(cycle_graph(5), 3).value == 5
    with pytest.raises(ValueError):
        tuple_domination_number(cycle_graph(5), 0)
    with pytest.raises(ValueError):
        limited_packing_number(cycle_graph(5), 0)


def test_node_limit():
    g = random_connected_graph(random.Random(3), 14, 0.3)
    with pytest.raises(NodeLimitExceeded):
        packing_number(g, SolveOptions(node_limit=5))
    with pytest.raises(NodeLimitExceeded):
        double_domination_number(g, SolveOptions(node_limit=5, force_exhaustive=True))
    with pytest.raises(ValueError):
        SolveOptions(node_limit=0)


def test_exhaustive_cap():
    with pytest.raises(ValueError):
        packing_number(path_graph(21), EXH)


def test_result_metadata():
    r = packing_number(cycle_graph(6))
    assert r.method is Method.BRANCH_AND_BOUND and r.nodes_explored > 0
    assert packing_number(cycle_graph(6), EXH).method is Method.EXHAUSTIVE
    assert packing_number(cycle_graph(6)) == packing_number(cycle_graph(6))


# --- oracle equivalence and witness validity ---

def _all_results(g, opts):
    out = {
        "rho": packing_number(g, opts),
        "rho_o": open_packing_number(g, opts),
        "gamma": domination_number(g, opts),
    }
    for k in range(1, g.max_degree + 2):
        out[f"L{k}"] = limited_packing_number(g, k, opts)
    if g.min_degree >= 1:
        out["gamma_x2"] = double_domination_number(g, opts)
    return out


def _check_witnesses(g, results):
    for key, r in results.items():
        assert len(r.witness) == r.value
        if key == "rho":
            assert is_packing(g, r.witness)
        elif key == "rho_o":
            assert is_open_packing(g, r.witness)
        elif key == "gamma":
            assert is_tuple_dominating(g, r.witness, 1)
        elif key == "gamma_x2":
            assert is_tuple_dominating(g, r.witness, 2)
        else:
            assert is_limited_packing(g, r.witness, int(key[1:]))


def test_branch_and_bound_matches_exhaustive_small_corpus():
    for g in SMALL:
        bnb = _all_results(g, SolveOptions())
        exh = _all_results(g, EXH)
        assert {k: r.value for k, r in bnb.items()} == {k: r.value for k, r in exh.items()}
        _check_witnesses(g, bnb)
        _check_witnesses(g, exh)


@st.composite
def small_graphs(draw):
    n = draw(st.integers(1, 10))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    edges = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph(n, edges)


@settings(max_examples=60, deadline=None)
@given(small_graphs())
def test_branch_and_bound_matches_exhaustive_random(g):
    # disconnected graphs too: the solvers accept them
    bnb = _all_results(g, SolveOptions())
    exh = _all_results(g, EXH)
    assert {k: r.value for k, r in bnb.items()} == {k: r.value for k, r in exh.items()}
    _check_witnesses(g, bnb)


# --- structural properties ---

def test_monotonicity_threshold_and_consistency():
    for g in SMALL:
        n, Delta = g.n, g.max_degree
        L = {k: limited_packing_number(g, k).value for k in range(1, Delta + 3)}
        for k in range(1, Delta + 1):
            assert L[k + 1] >= L[k] + 1
        for k in L:
            assert (L[k] == n) == (k >= Delta + 1)
        assert packing_number(g).value == L[1]
        if g.min_degree >= 1:
            assert domination_number(g).value <= double_domination_number(g).value


def test_complement_of_limited_packing_double_dominates():
    for g in SMALL:
        d = g.min_degree
        if d < 2:
            continue
        b = limited_packing_number(g, d - 1).witness
        assert is_tuple_dominating(g, set(g.vertices()) - b, 2)
