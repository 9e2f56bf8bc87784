"""Exact packing and domination numbers.

Every solver has two routes: a depth-first branch and bound over vertex
bitmasks, and an exhaustive subset scan kept as an independent oracle.

Packing-type problems (rho, rho_o, L_k) are all instances of one capacity
model: a vertex ``x`` placed in ``B`` uses one unit of capacity at every
``w`` whose (closed or open) neighbourhood contains ``x``; every ``w`` has
capacity ``cap``. Domination is the mirror image with demands instead of
capacities.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from itertools import combinations
from typing import Optional

from .graph import Graph

MAX_EXHAUSTIVE_ORDER = 20


class Method(str, enum.Enum):
    BRANCH_AND_BOUND = "branch_and_bound"
    EXHAUSTIVE = "exhaustive"


class NodeLimitExceeded(RuntimeError):
    pass


class InvariantUndefined(ValueError):
    pass


@dataclass(frozen=True)
class SolveOptions:
    force_exhaustive: bool = False
    node_limit: Optional[int] = None

    def __post_init__(self):
        if self.node_limit is not None and self.node_limit <= 0:
            raise ValueError("node_limit must be positive")


@dataclass(frozen=True)
class SolveResult:
    value: int
    witness: frozenset[int]
    nodes_explored: int
    method: Method


DEFAULT_OPTIONS = SolveOptions()


def _bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def _mask(vertices) -> int:
    return sum(1 << v for v in vertices)


def _search_order(g: Graph) -> list[int]:
    return sorted(g.vertices(), key=lambda v: (-g.degree(v), v))


def _hood_masks(g: Graph, closed: bool) -> list[int]:
    return [g.closed_mask(v) if closed else g.neighbor_mask(v) for v in g.vertices()]


# --- constraint checks (also used to validate witnesses) ---

def is_limited_packing(g: Graph, vertices, k: int) -> bool:
    b = _mask(vertices)
    return all(bin(g.closed_mask(v) & b).count("1") <= k for v in g.vertices())


def is_packing(g: Graph, vertices) -> bool:
    return is_limited_packing(g, vertices, 1)


def is_open_packing(g: Graph, vertices) -> bool:
    b = _mask(vertices)
    return all(bin(g.neighbor_mask(v) & b).count("1") <= 1 for v in g.vertices())


def is_tuple_dominating(g: Graph, vertices, k: int) -> bool:
    d = _mask(vertices)
    return all(bin(g.closed_mask(v) & d).count("1") >= k for v in g.vertices())


# --- branch and bound ---

class _Counter:
    __slots__ = ("nodes", "limit")

    def __init__(self, limit: Optional[int]):
        self.nodes = 0
        self.limit = limit

    def tick(self):
        self.nodes += 1
        if self.limit is not None and self.nodes > self.limit:
            raise NodeLimitExceeded(f"node limit {self.limit} exceeded")


def _max_capacity_bnb(g: Graph, hoods: list[int], cap: int, counter: _Counter) -> frozenset[int]:
    n = g.n
    order = _search_order(g)
    # users[x]: vertices whose neighbourhood contains x
    users = [_mask(w for w in range(n) if hoods[w] >> x & 1) for x in range(n)]
    residual = [cap] * n
    best: list = [-1, 0]
    chosen = [0, 0]  # mask, size

    def eligible_after(i: int) -> int:
        count = 0
        for x in order[i:]:
            if all(residual[w] > 0 for w in _bits(users[x])):
                count += 1
        return count

    def dfs(i: int):
        counter.tick()
        if i == n:
            if chosen[1] > best[0]:
                best[0], best[1] = chosen[1], chosen[0]
            return
        if chosen[1] + eligible_after(i) <= best[0]:
            return
        x = order[i]
        ws = _bits(users[x])
        if all(residual[w] > 0 for w in ws):
            for w in ws:
                residual[w] -= 1
            chosen[0] |= 1 << x
            chosen[1] += 1
            dfs(i + 1)
            chosen[0] ^= 1 << x
            chosen[1] -= 1
            for w in ws:
                residual[w] += 1
        dfs(i + 1)

    dfs(0)
    return frozenset(_bits(best[1]))


def _min_demand_bnb(g: Graph, k: int, counter: _Counter) -> frozenset[int]:
    n = g.n
    order = _search_order(g)
    cover = [g.closed_mask(x) for x in range(n)]
    need = [k] * n
    # avail[w]: undecided vertices still able to serve w
    avail = [bin(cover[w]).count("1") for w in range(n)]
    span = g.max_degree + 1
    best = [n + 1, (1 << n) - 1]
    chosen = [0, 0]

    def dfs(i: int):
        counter.tick()
        total = sum(need)
        if total == 0:
            if chosen[1] < best[0]:
                best[0], best[1] = chosen[1], chosen[0]
            return
        if i == n or chosen[1] + math.ceil(total / span) >= best[0]:
            return
        x = order[i]
        ws = _bits(cover[x])
        for w in ws:
            avail[w] -= 1
        saved = [need[w] for w in ws]
        for w in ws:
            if need[w]:
                need[w] -= 1
        chosen[0] |= 1 << x
        chosen[1] += 1
        dfs(i + 1)
        chosen[0] ^= 1 << x
        chosen[1] -= 1
        for w, s in zip(ws, saved):
            need[w] = s
        # excluding x is only possible if every w it serves can still be met
        if all(need[w] <= avail[w] for w in ws):
            dfs(i + 1)
        for w in ws:
            avail[w] += 1

    dfs(0)
    return frozenset(_bits(best[1]))


# --- exhaustive oracle ---

def _check_exhaustive_size(g: Graph):
    if g.n > MAX_EXHAUSTIVE_ORDER:
        raise ValueError(f"exhaustive mode is capped at n <= {MAX_EXHAUSTIVE_ORDER}")


def _exhaustive_max(g: Graph, accept, counter: _Counter) -> frozenset[int]:
    _check_exhaustive_size(g)
    for size in range(g.n, -1, -1):
        for subset in combinations(range(g.n), size):
            counter.tick()
            if accept(subset):
                return frozenset(subset)
    raise AssertionError("the empty set is always feasible")


def _exhaustive_min(g: Graph, accept, counter: _Counter) -> frozenset[int]:
    _check_exhaustive_size(g)
    for size in range(g.n + 1):
        for subset in combinations(range(g.n), size):
            counter.tick()
            if accept(subset):
                return frozenset(subset)
    raise AssertionError("caller guarantees feasibility")


def _result(witness: frozenset[int], counter: _Counter, opts: SolveOptions) -> SolveResult:
    method = Method.EXHAUSTIVE if opts.force_exhaustive else Method.BRANCH_AND_BOUND
    return SolveResult(len(witness), witness, counter.nodes, method)


# --- public solvers ---

def limited_packing_number(g: Graph, k: int, opts: SolveOptions = DEFAULT_OPTIONS) -> SolveResult:
    """L_k(G): the largest B with |N[v] & B| <= k for every vertex v."""
    if k < 1:
        raise ValueError("k must be a positive integer")
    counter = _Counter(opts.node_limit)
    if k >= g.max_degree + 1:
        return _result(frozenset(g.vertices()), counter, opts)
    if opts.force_exhaustive:
        witness = _exhaustive_max(g, lambda b: is_limited_packing(g, b, k), counter)
    else:
        witness = _max_capacity_bnb(g, _hood_masks(g, closed=True), k, counter)
    return _result(witness, counter, opts)


def packing_number(g: Graph, opts: SolveOptions = DEFAULT_OPTIONS) -> SolveResult:
    counter = _Counter(opts.node_limit)
    if opts.force_exhaustive:
        witness = _exhaustive_max(g, lambda b: is_packing(g, b), counter)
    else:
        witness = _max_capacity_bnb(g, _hood_masks(g, closed=True), 1, counter)
    return _result(witness, counter, opts)


def open_packing_number(g: Graph, opts: SolveOptions = DEFAULT_OPTIONS) -> SolveResult:
    counter = _Counter(opts.node_limit)
    if opts.force_exhaustive:
        witness = _exhaustive_max(g, lambda b: is_open_packing(g, b), counter)
    else:
        witness = _max_capacity_bnb(g, _hood_masks(g, closed=False), 1, counter)
    return _result(witness, counter, opts)


def tuple_domination_number(g: Graph, k: int, opts: SolveOptions = DEFAULT_OPTIONS) -> SolveResult:
    """gamma_xk(G): the smallest D with |N[v] & D| >= k for every vertex v.

    Defined only for ``1 <= k <= delta(G) + 1``.
    """
    if k < 1:
        raise ValueError("k must be a positive integer")
    if g.min_degree < k - 1:
        raise InvariantUndefined(
            f"gamma_x{k} undefined: min degree {g.min_degree} < k - 1 = {k - 1}"
        )
    counter = _Counter(opts.node_limit)
    if opts.force_exhaustive:
        witness = _exhaustive_min(g, lambda d: is_tuple_dominating(g, d, k), counter)
    else:
        witness = _min_demand_bnb(g, k, counter)
    return _result(witness, counter, opts)


def domination_number(g: Graph, opts: SolveOptions = DEFAULT_OPTIONS) -> SolveResult:
    return tuple_domination_number(g, 1, opts)


def double_domination_number(g: Graph, opts: SolveOptions = DEFAULT_OPTIONS) -> SolveResult:
    return tuple_domination_number(g, 2, opts)
