"""Immutable simple graphs, graph6 / edge-list I/O and pendant structure."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator, Optional

GRAPH6_HEADER = ">>graph6<<"
MAX_GRAPH6_ORDER = 62


class Graph6Error(ValueError):
    pass


class Graph:
    """Simple undirected graph on vertices ``0..n-1``.

    Adjacency is kept twice: as frozensets for readable queries and as
    integer bitmasks for the solvers. Instances are never mutated.
    """

    __slots__ = ("n", "m", "_adj", "_masks", "_deg", "_edges")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        adj: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at {u}")
            adj[u].add(v)
            adj[v].add(u)
        self.n = n
        self._adj = tuple(frozenset(a) for a in adj)
        self._masks = tuple(sum(1 << w for w in a) for a in adj)
        self._deg = tuple(len(a) for a in adj)
        self.m = sum(self._deg) // 2
        self._edges = tuple(sorted((u, v) for u in range(n) for v in adj[u] if u < v))

    # basic accessors
    def neighbors(self, v: int) -> frozenset[int]:
        return self._adj[v]

    def closed_neighborhood(self, v: int) -> frozenset[int]:
        return self._adj[v] | {v}

    def neighbor_mask(self, v: int) -> int:
        return self._masks[v]

    def closed_mask(self, v: int) -> int:
        return self._masks[v] | (1 << v)

    def degree(self, v: int) -> int:
        return self._deg[v]

    @property
    def degrees(self) -> tuple[int, ...]:
        return self._deg

    @property
    def min_degree(self) -> int:
        return min(self._deg, default=0)

    @property
    def max_degree(self) -> int:
        return max(self._deg, default=0)

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._adj[u]

    def edges(self) -> tuple[tuple[int, int], ...]:
        return self._edges

    def vertices(self) -> range:
        return range(self.n)

    def is_connected(self) -> bool:
        if self.n == 0:
            return True
        seen = 1
        frontier = 1
        while frontier:
            nxt = 0
            f = frontier
            while f:
                low = f & -f
                nxt |= self._masks[low.bit_length() - 1]
                f ^= low
            frontier = nxt & ~seen
            seen |= nxt
        return seen == (1 << self.n) - 1

    def induced_edge_count(self, vertices: Iterable[int]) -> int:
        vs = set(vertices)
        return sum(1 for u, v in self._edges if u in vs and v in vs)

    def add_vertices(self, count: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        return Graph(self.n + count, list(self._edges) + list(edges))

    def relabel(self, perm: list[int]) -> "Graph":
        """Graph with vertex ``v`` renamed to ``perm[v]``."""
        return Graph(self.n, [(perm[u], perm[v]) for u, v in self._edges])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self._edges == other._edges

    def __hash__(self) -> int:
        return hash((self.n, self._edges))

    def __repr__(self) -> str:
        if self.n > MAX_GRAPH6_ORDER:
            return f"Graph(n={self.n}, m={self.m})"
        return f"Graph({to_graph6(self)!r})"


# --- named graphs used throughout the tests and examples ---

def complete_graph(n: int) -> Graph:
    return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def path_graph(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def star_graph(leaves: int) -> Graph:
    """K_{1,leaves} with the center at vertex 0."""
    return Graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


# --- graph6 ---

def parse_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(GRAPH6_HEADER):
        s = s[len(GRAPH6_HEADER):]
    if not s:
        raise Graph6Error("empty graph6 record")
    for ch in s:
        if not 63 <= ord(ch) <= 126:
            raise Graph6Error(f"character {ch!r} outside graph6 range 63..126")
    n = ord(s[0]) - 63
    if n > MAX_GRAPH6_ORDER:
        raise Graph6Error("long-form graph6 headers (n > 62) are not supported")
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    body = s[1:]
    if len(body) != need:
        raise Graph6Error(f"expected {need} data bytes for n={n}, got {len(body)}")
    bits = 0
    for ch in body:
        bits = (bits << 6) | (ord(ch) - 63)
    pad = need * 6 - nbits
    if bits & ((1 << pad) - 1):
        raise Graph6Error("nonzero padding bits")
    bits >>= pad
    edges = []
    pos = nbits - 1
    for j in range(1, n):
        for i in range(j):
            if (bits >> pos) & 1:
                edges.append((i, j))
            pos -= 1
    return Graph(n, edges)


def to_graph6(g: Graph) -> str:
    n = g.n
    if n > MAX_GRAPH6_ORDER:
        raise Graph6Error(f"n={n} exceeds the short graph6 form")
    out = [chr(63 + n)]
    acc = 0
    width = 0
    for j in range(1, n):
        for i in range(j):
            acc = (acc << 1) | g.has_edge(i, j)
            width += 1
            if width == 6:
                out.append(chr(63 + acc))
                acc = width = 0
    if width:
        out.append(chr(63 + (acc << (6 - width))))
    return "".join(out)


# --- edge-list text format: "n m" then m lines "u v" ---

def parse_edge_list(text: str) -> Graph:
    lines = [ln.split() for ln in text.splitlines() if ln.strip()]
    if not lines or len(lines[0]) != 2:
        raise ValueError("edge list must start with a 'n m' line")
    n, m = (int(x) for x in lines[0])
    body = lines[1:]
    if len(body) != m:
        raise ValueError(f"edge list declares {m} edges but has {len(body)}")
    edges = []
    for lineno, parts in enumerate(body, start=2):
        if len(parts) != 2:
            raise ValueError(f"line {lineno}: expected 'u v'")
        edges.append((int(parts[0]), int(parts[1])))
    g = Graph(n, edges)
    if g.m != m:
        raise ValueError("edge list contains duplicate edges")
    return g


def to_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"] + [f"{u} {v}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


def read_graphs(text: str) -> Iterator[tuple[int, Graph]]:
    """Yield ``(line_number, graph)`` from graph6 lines or a single edge list.

    A first line made of exactly two integers selects the edge-list format.
    """
    lines = text.splitlines()
    first = next((ln for ln in lines if ln.strip()), "")
    parts = first.split()
    if len(parts) == 2 and all(p.lstrip("-").isdigit() for p in parts):
        yield 1, parse_edge_list(text)
        return
    for lineno, line in enumerate(lines, start=1):
        if not line.strip():
            continue
        try:
            yield lineno, parse_graph6(line)
        except Graph6Error as exc:
            raise Graph6Error(f"line {lineno}: {exc}") from None


# --- pendant / support structure ---

@dataclass(frozen=True)
class StructuralProfile:
    pendants: frozenset[int]
    supports: frozenset[int]
    weak_supports: frozenset[int]
    pendant_count_per_support: dict[int, int] = field(hash=False)
    delta_star: Optional[int]

    @property
    def ell(self) -> int:
        return len(self.pendants)

    @property
    def s(self) -> int:
        return len(self.supports)

    @property
    def s1(self) -> int:
        return len(self.weak_supports)


def structural_profile(g: Graph) -> StructuralProfile:
    pendants = frozenset(v for v in g.vertices() if g.degree(v) == 1)
    per_support: dict[int, int] = {}
    for p in pendants:
        for u in g.neighbors(p):
            per_support[u] = per_support.get(u, 0) + 1
    non_pendant = [g.degree(v) for v in g.vertices() if v not in pendants]
    # isolated vertices are non-pendant but a degree-0 delta* is meaningless
    big = [d for d in non_pendant if d >= 2]
    return StructuralProfile(
        pendants=pendants,
        supports=frozenset(per_support),
        weak_supports=frozenset(u for u, c in per_support.items() if c == 1),
        pendant_count_per_support=dict(sorted(per_support.items())),
        delta_star=min(big) if big else None,
    )


def augment_weak_supports(g: Graph) -> Graph:
    """Attach one fresh pendant to every weak support vertex.

    New vertices are numbered ``n, n+1, ...`` in increasing order of the
    weak support they hang from. Returns ``g`` itself when there are none.
    """
    if g.n < 3 or not g.is_connected():
        raise ValueError("augment_weak_supports needs a connected graph with n >= 3")
    weak = sorted(structural_profile(g).weak_supports)
    if not weak:
        return g
    return g.add_vertices(len(weak), [(u, g.n + i) for i, u in enumerate(weak)])
