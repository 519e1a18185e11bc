"""Chromatic number and decomposition families.

F(L) is the set of minimal graphs F (no isolated vertices) such that L embeds
into (F u K_t-bar) + T(t, p-1), where p = chi(L) - 1.

Candidates are grown one edge at a time from K_2, keeping only graphs that do
not admit L.  Admission is monotone under adding edges and vertices, so every
minimal admitting graph arises from a non-admitting one by a single extension:
a new edge between existing vertices, a pendant edge, or a new K_2 component.
A graph with more vertices than L cannot be minimal (an embedding touches at
most |V(L)| vertices of F), which bounds the search.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .canon import canonical_rows
from .detect import EmbeddingWitness, find_embedding, verify_embedding
from .errors import ArgumentError, CapabilityError
from .graph import Graph, disjoint_union, empty, iter_bits, join, turan_graph
from .graph6 import encode_graph6

CHROMATIC_LIMIT = 16
DECOMPOSITION_LIMIT = 12


# ---------------------------------------------------------------- colouring

def clique_number(g: Graph) -> int:
    best = 0

    def grow(size, cand):
        nonlocal best
        if not cand:
            best = max(best, size)
            return
        if size + cand.bit_count() <= best:
            return
        while cand:
            if size + cand.bit_count() <= best:
                return
            low = cand & -cand
            v = low.bit_length() - 1
            cand ^= low
            grow(size + 1, cand & g.rows[v])

    grow(0, (1 << g.n) - 1)
    return best


def _dsatur_order_colouring(g: Graph, k: int | None) -> list[int] | None:
    """Exact k-colouring by DSatur backtracking (new colours introduced in
    order).  With ``k=None`` runs greedily once and returns that colouring."""
    n = g.n
    colour = [-1] * n
    rows = g.rows
    deg = g.degrees()

    def pick():
        best, key = -1, None
        for v in range(n):
            if colour[v] >= 0:
                continue
            sat = len({colour[u] for u in iter_bits(rows[v]) if colour[u] >= 0})
            cand = (sat, deg[v], -v)
            if key is None or cand > key:
                best, key = v, cand
        return best

    if k is None:
        for _ in range(n):
            v = pick()
            taken = {colour[u] for u in iter_bits(rows[v])}
            c = 0
            while c in taken:
                c += 1
            colour[v] = c
        return colour

    def rec(done, used):
        if done == n:
            return True
        v = pick()
        taken = {colour[u] for u in iter_bits(rows[v])}
        for c in range(min(used + 1, k)):
            if c in taken:
                continue
            colour[v] = c
            if rec(done + 1, max(used, c + 1)):
                return True
        colour[v] = -1
        return False

    return colour if rec(0, 0) else None


def chromatic_number(g: Graph) -> int:
    """Exact chi(G): clique lower bound, DSatur upper bound, then exact tests."""
    if g.n > CHROMATIC_LIMIT:
        raise CapabilityError(f"chromatic number limited to n <= {CHROMATIC_LIMIT}, got {g.n}")
    if g.n == 0:
        return 0
    lo = clique_number(g)
    hi = max(_dsatur_order_colouring(g, None)) + 1
    for k in range(lo, hi):
        if _dsatur_order_colouring(g, k) is not None:
            return k
    return hi


def chromatic_number_bruteforce(g: Graph) -> int:
    """Smallest k admitting a proper colouring, by trying every assignment."""
    if g.n == 0:
        return 0
    edges = g.edges()
    for k in range(1, g.n + 1):
        # vertex 0 may always take colour 0
        for rest in product(range(k), repeat=g.n - 1):
            col = (0,) + rest
            if all(col[u] != col[v] for u, v in edges):
                return k
    return g.n


def subchromatic(family) -> int:
    graphs = list(family)
    if not graphs:
        raise ArgumentError("subchromatic number of an empty family")
    return min(chromatic_number(g) for g in graphs) - 1


# ---------------------------------------------------------------- decomposition

@dataclass
class DecompositionResult:
    source: Graph
    p: int
    t_used: int
    family: list[Graph]
    certificates: list[EmbeddingWitness]

    def to_dict(self) -> dict:
        return {
            "source": encode_graph6(self.source),
            "p": self.p,
            "t_used": self.t_used,
            "family": [encode_graph6(f) for f in self.family],
            "certificates": [list(c.mapping) for c in self.certificates],
        }


def decomposition_host(f: Graph, t: int, p: int) -> Graph:
    """(F u K_t-bar) + T(t, p-1); F occupies the first |V(F)| vertices."""
    return join(disjoint_union(f, empty(t)), turan_graph(t, p - 1))


def _strip_isolated(rows) -> tuple[int, ...]:
    keep = [v for v, r in enumerate(rows) if r]
    index = {v: i for i, v in enumerate(keep)}
    out = []
    for v in keep:
        r = 0
        for u in iter_bits(rows[v]):
            r |= 1 << index[u]
        out.append(r)
    return tuple(out)


def _extensions(rows, limit):
    n = len(rows)
    for v in range(n):
        for u in range(v):
            if not rows[v] >> u & 1:
                new = list(rows)
                new[u] |= 1 << v
                new[v] |= 1 << u
                yield new
    if n + 1 <= limit:
        for v in range(n):
            new = list(rows) + [1 << v]
            new[v] |= 1 << n
            yield new
    if n + 2 <= limit:
        yield list(rows) + [1 << (n + 1), 1 << n]


def decomposition_family(source: Graph, t: int | None = None) -> DecompositionResult:
    if source.n > DECOMPOSITION_LIMIT:
        raise CapabilityError(f"decomposition families limited to |V(L)| <= {DECOMPOSITION_LIMIT}")
    chi = chromatic_number(source)
    if chi <= 2:
        raise ArgumentError("decomposition family needs chi(L) >= 3")
    p = chi - 1
    if t is None:
        t = source.n
    if t < source.n:
        raise ArgumentError(f"t must be at least |V(L)| = {source.n}, got {t}")

    def admits(rows):
        return find_embedding(decomposition_host(Graph.trusted(len(rows), rows), t, p), source)

    members = []
    free = {()}  # canonical rows of non-admitting candidates (the empty graph included)
    layer = {canonical_rows((2, 1))}
    while layer:
        nxt = set()
        for rows in sorted(layer):
            if admits(rows) is None:
                free.add(rows)
                for child in _extensions(rows, source.n):
                    nxt.add(canonical_rows(child))
                continue
            minimal = True
            for v in range(len(rows)):
                for u in iter_bits(rows[v] & ((1 << v) - 1)):
                    smaller = list(rows)
                    smaller[u] &= ~(1 << v)
                    smaller[v] &= ~(1 << u)
                    if canonical_rows(_strip_isolated(smaller)) not in free:
                        minimal = False
                        break
                if not minimal:
                    break
            if minimal:
                members.append(rows)
        layer = nxt - free
    family = [Graph.trusted(len(r), r) for r in members]
    family.sort(key=lambda f: (f.n, f.edge_count, encode_graph6(f)))
    certificates = [EmbeddingWitness(admits(f.rows)) for f in family]
    return DecompositionResult(source, p, t, family, certificates)


def check_certificates(result: DecompositionResult) -> bool:
    return all(
        verify_embedding(decomposition_host(f, result.t_used, result.p), result.source, w)
        for f, w in zip(result.family, result.certificates))


def check_minimality(result: DecompositionResult) -> bool:
    """No member minus any single edge still admits the source."""
    for f in result.family:
        for u, v in f.edges():
            host = decomposition_host(f.remove_edge(u, v), result.t_used, result.p)
            if find_embedding(host, result.source) is not None:
                return False
    return True
