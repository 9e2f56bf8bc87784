"""Recognizers and generators for the four extremal graph families.

* ``omega(k)``: a clique S such that G - S is (k-1)-regular and every vertex
  of S has exactly k neighbours outside S.
* ``sigma``: a clique S such that G - S is a perfect matching and every vertex
  of S has exactly one neighbour outside S.
* ``gamma``: an induced matching H of minimum-degree vertices such that every
  vertex of G has exactly one neighbour in V(H); the remaining neighbours of
  each u in H are its private neighbours pn(u).
* ``gamma_prime``: an independent set H of minimum-degree vertices such that
  every vertex of G has exactly one vertex of H in its closed neighbourhood.

The recognizers never call the solvers, so agreement between "bound is
tight" and "recognizer succeeds" is a genuine cross-check.
"""

from __future__ import annotations

import enum
import random
from dataclasses import dataclass
from typing import Iterator, Optional, Sequence

import networkx as nx

from .graph import Graph


class Family(str, enum.Enum):
    OMEGA = "omega"
    SIGMA = "sigma"
    GAMMA = "gamma"
    GAMMA_PRIME = "gamma_prime"


@dataclass(frozen=True)
class FamilyWitness:
    family: Family
    k: Optional[int] = None
    clique_s: Optional[tuple[int, ...]] = None
    matching_h: Optional[tuple] = None
    private_neighbors: Optional[dict[int, tuple[int, ...]]] = None

    def h_vertices(self) -> tuple[int, ...]:
        if self.matching_h is None:
            return ()
        if self.family is Family.GAMMA:
            return tuple(sorted(v for pair in self.matching_h for v in pair))
        return tuple(self.matching_h)

    def to_dict(self) -> dict:
        out: dict = {"family": self.family.value}
        if self.k is not None:
            out["k"] = self.k
        if self.clique_s is not None:
            out["S"] = list(self.clique_s)
        if self.matching_h is not None:
            out["H"] = [list(p) if isinstance(p, tuple) else p for p in self.matching_h]
        if self.private_neighbors is not None:
            out["pn"] = {str(u): list(vs) for u, vs in self.private_neighbors.items()}
        return out


# --- omega / sigma: clique search ---

def _cliques_of_size(g: Graph, candidates: list[int], size: int) -> Iterator[tuple[int, ...]]:
    """Cliques of the given size inside ``candidates``, in lexicographic order."""
    def grow(start: int, current: list[int], common: int):
        if len(current) == size:
            yield tuple(current)
            return
        for i in range(start, len(candidates)):
            v = candidates[i]
            if common >> v & 1:
                current.append(v)
                yield from grow(i + 1, current, common & g.neighbor_mask(v))
                current.pop()

    yield from grow(0, [], (1 << g.n) - 1)


def _clique_split_ok(g: Graph, clique: tuple[int, ...], inner_degree: int, outer_count: int) -> bool:
    s_mask = sum(1 << v for v in clique)
    rest = ((1 << g.n) - 1) & ~s_mask
    for v in g.vertices():
        outside = bin(g.neighbor_mask(v) & rest).count("1")
        if s_mask >> v & 1:
            if outside != outer_count:
                return False
        elif outside != inner_degree:
            return False
    return True


def _find_clique_split(g: Graph, inner_degree: int, outer_count: int) -> Optional[tuple[int, ...]]:
    # a vertex of S has |S| - 1 neighbours inside S and outer_count outside
    for size in range(g.n + 1):
        candidates = [v for v in g.vertices() if g.degree(v) == size - 1 + outer_count]
        if size and len(candidates) < size:
            continue
        for clique in _cliques_of_size(g, candidates, size):
            if _clique_split_ok(g, clique, inner_degree, outer_count):
                return clique
    return None


def recognize_omega(g: Graph, k: int) -> Optional[FamilyWitness]:
    if k < 1:
        raise ValueError("k must be positive")
    s = _find_clique_split(g, k - 1, k)
    return None if s is None else FamilyWitness(Family.OMEGA, k=k, clique_s=s)


def recognize_sigma(g: Graph) -> Optional[FamilyWitness]:
    s = _find_clique_split(g, 1, 1)
    return None if s is None else FamilyWitness(Family.SIGMA, clique_s=s)


# --- gamma / gamma': exact cover by neighbourhoods of min-degree vertices ---

def _exact_covers(g: Graph, rows: dict[int, int]) -> Iterator[int]:
    """All masks X (keys of ``rows``) whose row masks partition V(G)."""
    full = (1 << g.n) - 1
    # rows able to cover each column
    by_col = {c: [r for r, mask in rows.items() if mask >> c & 1] for c in g.vertices()}

    def search(covered: int, chosen: int):
        if covered == full:
            yield chosen
            return
        best_col, best_opts = -1, None
        for c in g.vertices():
            if covered >> c & 1:
                continue
            opts = [r for r in by_col[c] if not rows[r] & covered]
            if best_opts is None or len(opts) < len(best_opts):
                best_col, best_opts = c, opts
                if not opts:
                    return
        for r in best_opts:
            yield from search(covered | rows[r], chosen | (1 << r))

    yield from search(0, 0)


def _smallest_cover(g: Graph, closed: bool) -> Optional[list[int]]:
    delta = g.min_degree
    rows = {
        v: (g.closed_mask(v) if closed else g.neighbor_mask(v))
        for v in g.vertices()
        if g.degree(v) == delta
    }
    best = None
    for mask in _exact_covers(g, rows):
        members = sorted(v for v in g.vertices() if mask >> v & 1)
        if best is None or (len(members), members) < (len(best), best):
            best = members
    return best


def _require_connected(g: Graph, min_order: int):
    if g.n < min_order or not g.is_connected():
        raise ValueError(f"recognizer needs a connected graph with n >= {min_order}")


def recognize_gamma(g: Graph) -> Optional[FamilyWitness]:
    _require_connected(g, 2)
    h = _smallest_cover(g, closed=False)
    if h is None:
        return None
    hs = set(h)
    pairs = tuple(sorted((u, v) for u in h for v in g.neighbors(u) if v in hs and u < v))
    pn = {u: tuple(sorted(g.neighbors(u) - hs)) for u in h}
    return FamilyWitness(Family.GAMMA, k=g.min_degree - 1, matching_h=pairs, private_neighbors=pn)


def recognize_gamma_prime(g: Graph) -> Optional[FamilyWitness]:
    _require_connected(g, 1)
    h = _smallest_cover(g, closed=True)
    if h is None:
        return None
    pn = {u: tuple(sorted(g.neighbors(u))) for u in h}
    return FamilyWitness(Family.GAMMA_PRIME, k=g.min_degree, matching_h=tuple(h), private_neighbors=pn)


def recognize(g: Graph, family: Family, k: Optional[int] = None) -> Optional[FamilyWitness]:
    family = Family(family)
    if family is Family.OMEGA:
        if k is None:
            raise ValueError("omega needs k")
        return recognize_omega(g, k)
    if family is Family.SIGMA:
        return recognize_sigma(g)
    if family is Family.GAMMA:
        return recognize_gamma(g)
    return recognize_gamma_prime(g)


# --- certificate re-check ---

def check_witness(g: Graph, w: FamilyWitness) -> bool:
    """Re-verify a witness against its family's defining conditions."""
    fam = w.family
    if fam in (Family.OMEGA, Family.SIGMA):
        if w.clique_s is None:
            return False
        s = set(w.clique_s)
        if any(not g.has_edge(u, v) for u in s for v in s if u < v):
            return False
        inner, outer = (w.k - 1, w.k) if fam is Family.OMEGA else (1, 1)
        for v in g.vertices():
            out = len(g.neighbors(v) - s)
            if out != (outer if v in s else inner):
                return False
        return True

    h = w.h_vertices()
    hs = set(h)
    if len(hs) != len(h) or not h or w.private_neighbors is None:
        return False
    delta = g.min_degree
    pn = {u: set(vs) for u, vs in w.private_neighbors.items()}
    if set(pn) != hs:
        return False
    outside = set(g.vertices()) - hs
    union: set[int] = set()
    for u in h:
        if g.degree(u) != delta or pn[u] & union or not pn[u] <= outside:
            return False
        union |= pn[u]
        if pn[u] != g.neighbors(u) - hs:
            return False
    if union != outside:
        return False
    if any(len(g.neighbors(v) & hs) != 1 for v in outside):
        return False
    if fam is Family.GAMMA:
        edges_in_h = {tuple(sorted(p)) for p in w.matching_h}
        induced = {(u, v) for u, v in g.edges() if u in hs and v in hs}
        if edges_in_h != induced or any(len(g.neighbors(u) & hs) != 1 for u in h):
            return False
        return w.k == delta - 1 and all(g.degree(v) >= delta for v in outside)
    return w.k == delta and all(not (g.neighbors(u) & hs) for u in h)


# --- generators ---

def _check_pair(u: int, v: int, allowed: set[int], what: str):
    if u == v or u not in allowed or v not in allowed:
        raise ValueError(f"{what} edge ({u}, {v}) is not between two distinct allowed vertices")


def generate_omega(
    k: int,
    clique_size: int,
    outside_size: int,
    *,
    regular_edges: Optional[Sequence[tuple[int, int]]] = None,
    attachments: Optional[Sequence[Sequence[int]]] = None,
    seed: Optional[int] = None,
) -> Graph:
    """Member of omega(k): outside part on 0..outside_size-1, clique after it.

    ``regular_edges`` (a (k-1)-regular graph on the outside part) and
    ``attachments`` (the k outside neighbours of each clique vertex) are drawn
    at random from ``seed`` when omitted.
    """
    rng = random.Random(seed)
    ell = outside_size
    if k < 1 or clique_size < 0 or ell < 0:
        raise ValueError("need k >= 1 and nonnegative part sizes")
    if clique_size and ell < k:
        raise ValueError("clique vertices need k distinct outside neighbours")
    if regular_edges is None:
        if ell and (ell <= k - 1 or (ell * (k - 1)) % 2):
            raise ValueError(f"no {k - 1}-regular graph on {ell} vertices")
        if ell == 0 or k == 1:
            regular_edges = []
        else:
            h = nx.random_regular_graph(k - 1, ell, seed=rng.randrange(2**32))
            regular_edges = sorted(h.edges())
    if attachments is None:
        attachments = [rng.sample(range(ell), k) for _ in range(clique_size)]
    if len(attachments) != clique_size:
        raise ValueError("one attachment list per clique vertex is required")
    outside = set(range(ell))
    for u, v in regular_edges:
        _check_pair(u, v, outside, "outside")
    clique = list(range(ell, ell + clique_size))
    edges = list(regular_edges)
    edges += [(u, v) for i, u in enumerate(clique) for v in clique[i + 1:]]
    for u, targets in zip(clique, attachments):
        if len(set(targets)) != k or not set(targets) <= outside:
            raise ValueError(f"clique vertex {u} needs exactly {k} distinct outside neighbours")
        edges += [(u, t) for t in targets]
    g = Graph(ell + clique_size, edges)
    if any(len(g.neighbors(v) & outside) != k - 1 for v in outside):
        raise ValueError(f"outside part is not {k - 1}-regular")
    return g


def generate_sigma(
    clique_size: int,
    pairs: int,
    *,
    attachments: Optional[Sequence[int]] = None,
    seed: Optional[int] = None,
) -> Graph:
    """Member of sigma: ``pairs`` disjoint edges (2i, 2i+1), then the clique."""
    rng = random.Random(seed)
    ell = 2 * pairs
    if clique_size < 0 or pairs < 0 or (clique_size and not pairs):
        raise ValueError("clique vertices need an outside neighbour")
    if attachments is None:
        attachments = [rng.randrange(ell) for _ in range(clique_size)]
    if len(attachments) != clique_size or any(not 0 <= a < ell for a in attachments):
        raise ValueError("each clique vertex needs one outside neighbour in range")
    clique = list(range(ell, ell + clique_size))
    edges = [(2 * i, 2 * i + 1) for i in range(pairs)]
    edges += [(u, v) for i, u in enumerate(clique) for v in clique[i + 1:]]
    edges += list(zip(clique, attachments))
    return Graph(ell + clique_size, edges)


def _random_pn_edges(rng: random.Random, n: int, core_edges, pn: list[int], min_pn_degree: int):
    """Random edges among ``pn`` giving each at least ``min_pn_degree`` pn-neighbours
    and making the whole graph connected."""
    adj = {p: set() for p in pn}
    extra: list[tuple[int, int]] = []

    def link(a, b):
        adj[a].add(b)
        adj[b].add(a)
        extra.append((min(a, b), max(a, b)))

    order = pn[:]
    rng.shuffle(order)
    for p in order:
        while len(adj[p]) < min_pn_degree:
            choices = [q for q in pn if q != p and q not in adj[p]]
            link(p, rng.choice(choices))
    density = rng.random() * 0.3
    for i, p in enumerate(pn):
        for q in pn[i + 1:]:
            if q not in adj[p] and rng.random() < density:
                link(p, q)
    while True:
        g = Graph(n, list(core_edges) + extra)
        comps = [sorted(c & set(pn)) for c in _components(g)]
        if len(comps) <= 1:
            return extra
        a, b = comps[0], comps[1 + rng.randrange(len(comps) - 1)]
        if not a or not b:
            raise ValueError("cannot connect: a component has no private neighbours")
        link(rng.choice(a), rng.choice(b))


def _components(g: Graph) -> list[set[int]]:
    h = nx.Graph()
    h.add_nodes_from(g.vertices())
    h.add_edges_from(g.edges())
    return [set(c) for c in sorted(nx.connected_components(h), key=min)]


def _private_layout(cores: list[int], per: int, start: int) -> dict[int, list[int]]:
    return {u: [start + i * per + j for j in range(per)] for i, u in enumerate(cores)}


def generate_gamma(
    t: int,
    k: int,
    *,
    pn_edges: Optional[Sequence[tuple[int, int]]] = None,
    seed: Optional[int] = None,
) -> Graph:
    """Member of gamma: matching (2i, 2i+1) for i < t, then k private
    neighbours per matched vertex, then ``pn_edges`` among the private
    neighbours (random from ``seed`` when omitted)."""
    if t < 1 or k < 0:
        raise ValueError("need t >= 1 and k >= 0")
    core = list(range(2 * t))
    layout = _private_layout(core, k, 2 * t)
    n = 2 * t * (k + 1)
    pn = [p for ps in layout.values() for p in ps]
    base = [(2 * i, 2 * i + 1) for i in range(t)] + [(u, p) for u, ps in layout.items() for p in ps]
    if pn_edges is None:
        if k == 0 and t > 1:
            raise ValueError("k = 0 leaves t > 1 matching edges disconnected")
        pn_edges = _random_pn_edges(random.Random(seed), n, base, pn, k)
    allowed = set(pn)
    for u, v in pn_edges:
        _check_pair(u, v, allowed, "private-neighbour")
    g = Graph(n, base + list(pn_edges))
    if not g.is_connected():
        raise ValueError("construction is not connected")
    if any(g.degree(p) < k + 1 for p in pn):
        raise ValueError(f"private neighbours need degree >= {k + 1}")
    return g


def generate_gamma_prime(
    t: int,
    delta: int,
    *,
    pn_edges: Optional[Sequence[tuple[int, int]]] = None,
    seed: Optional[int] = None,
) -> Graph:
    """Member of gamma': t independent core vertices 0..t-1, each with
    ``delta`` private neighbours, plus ``pn_edges`` among those."""
    if t < 1 or delta < 0:
        raise ValueError("need t >= 1 and delta >= 0")
    core = list(range(t))
    layout = _private_layout(core, delta, t)
    n = t * (delta + 1)
    pn = [p for ps in layout.values() for p in ps]
    base = [(u, p) for u, ps in layout.items() for p in ps]
    if pn_edges is None:
        if delta == 0 and t > 1:
            raise ValueError("delta = 0 leaves t > 1 core vertices disconnected")
        pn_edges = _random_pn_edges(random.Random(seed), n, base, pn, max(delta - 1, 0))
    allowed = set(pn)
    for u, v in pn_edges:
        _check_pair(u, v, allowed, "private-neighbour")
    g = Graph(n, base + list(pn_edges))
    if not g.is_connected():
        raise ValueError("construction is not connected")
    if any(g.degree(p) < delta for p in pn):
        raise ValueError(f"private neighbours need degree >= {delta}")
    return g


def generate_family(family: Family, *, seed: Optional[int] = None, **params) -> Graph:
    family = Family(family)
    if family is Family.OMEGA:
        return generate_omega(seed=seed, **params)
    if family is Family.SIGMA:
        return generate_sigma(seed=seed, **params)
    if family is Family.GAMMA:
        return generate_gamma(seed=seed, **params)
    return generate_gamma_prime(seed=seed, **params)
