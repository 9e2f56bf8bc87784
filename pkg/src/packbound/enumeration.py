"""Connected graphs on up to 7 vertices, one per isomorphism class.

Graphs on ``n`` vertices are grown from the classes on ``n - 1`` vertices by
adding one vertex with every nonempty neighbour set (every connected graph has
a vertex whose deletion leaves it connected). Duplicates are rejected with an
invariant prefilter followed by a backtracking permutation search.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterator, Optional

from .graph import Graph, to_graph6

MAX_ENUMERATION_ORDER = 7


def _invariant(g: Graph) -> tuple:
    degs = g.degrees
    nbr_profile = sorted(
        (degs[v], tuple(sorted(degs[w] for w in g.neighbors(v)))) for v in g.vertices()
    )
    triangles = sum(
        1 for u, v in g.edges() for w in g.neighbors(u) & g.neighbors(v) if w > v
    )
    return (g.m, tuple(nbr_profile), triangles)


def find_isomorphism(g: Graph, h: Graph) -> Optional[list[int]]:
    """Return ``perm`` with ``g.relabel(perm) == h``, or None.

    Vertices are only mapped onto vertices of equal degree.
    """
    if g.n != h.n or g.m != h.m or sorted(g.degrees) != sorted(h.degrees):
        return None
    n = g.n
    order = sorted(range(n), key=lambda v: -g.degree(v))
    perm = [-1] * n
    used = [False] * n

    def extend(i: int) -> bool:
        if i == n:
            return True
        v = order[i]
        for w in range(n):
            if used[w] or h.degree(w) != g.degree(v):
                continue
            ok = True
            for u in order[:i]:
                if g.has_edge(u, v) != h.has_edge(perm[u], w):
                    ok = False
                    break
            if ok:
                perm[v] = w
                used[w] = True
                if extend(i + 1):
                    return True
                used[w] = False
                perm[v] = -1
        return False

    return list(perm) if extend(0) else None


def is_isomorphic(g: Graph, h: Graph) -> bool:
    return find_isomorphism(g, h) is not None


@lru_cache(maxsize=None)
def _connected_classes(n: int) -> tuple[Graph, ...]:
    if n == 1:
        return (Graph(1),)
    buckets: dict[tuple, list[Graph]] = {}
    found: list[Graph] = []
    for parent in _connected_classes(n - 1):
        base = list(parent.edges())
        for mask in range(1, 1 << (n - 1)):
            g = Graph(n, base + [(u, n - 1) for u in range(n - 1) if mask >> u & 1])
            bucket = buckets.setdefault(_invariant(g), [])
            if any(is_isomorphic(g, h) for h in bucket):
                continue
            bucket.append(g)
            found.append(g)
    found.sort(key=lambda g: (g.m, to_graph6(g)))
    return tuple(found)


def enumerate_connected(n: int) -> Iterator[Graph]:
    """Yield one connected graph per isomorphism class on ``n`` vertices."""
    if not 1 <= n <= MAX_ENUMERATION_ORDER:
        raise ValueError(f"enumeration supports 1 <= n <= {MAX_ENUMERATION_ORDER}, got {n}")
    yield from _connected_classes(n)


def enumerate_connected_upto(n_max: int, n_min: int = 1) -> Iterator[Graph]:
    for n in range(n_min, n_max + 1):
        yield from enumerate_connected(n)
