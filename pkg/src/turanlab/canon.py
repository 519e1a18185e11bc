"""Canonical labelling by equitable refinement and individualisation.

The search explores the individualisation-refinement tree, keeps the leaf with
the lexicographically largest relabelled adjacency, and prunes sibling
branches that lie in one orbit of the automorphisms discovered so far (only
automorphisms fixing the current prefix pointwise are used).
"""

from __future__ import annotations

from itertools import permutations

from .errors import CapabilityError
from .graph import Graph, iter_bits
from .graph6 import encode_graph6

CANONICAL_LIMIT = 16
BRUTEFORCE_LIMIT = 8


def _refine(adj, cells):
    """Refine an ordered partition (list of bitmasks) to the coarsest equitable one.

    Fragments of a split cell are ordered by their neighbour count into the
    splitter, which keeps the result labelling-invariant.
    """
    cells = list(cells)
    queue = list(range(len(cells)))
    while queue:
        w = cells[queue.pop(0)]
        i = 0
        while i < len(cells):
            cell = cells[i]
            if cell & (cell - 1) == 0:
                i += 1
                continue
            groups = {}
            m = cell
            while m:
                low = m & -m
                v = low.bit_length() - 1
                c = (adj[v] & w).bit_count()
                groups[c] = groups.get(c, 0) | low
                m ^= low
            if len(groups) == 1:
                i += 1
                continue
            frags = [groups[c] for c in sorted(groups)]
            cells[i:i + 1] = frags
            # indices after i shift; rebuild the queue conservatively
            shift = len(frags) - 1
            queue = [q + shift if q > i else q for q in queue]
            queue.extend(range(i, i + len(frags)))
            i += len(frags)
    return cells


def _certificate(adj, order):
    pos = [0] * len(order)
    for i, v in enumerate(order):
        pos[v] = i
    cert = []
    for v in order:
        row = 0
        m = adj[v]
        while m:
            low = m & -m
            row |= 1 << pos[low.bit_length() - 1]
            m ^= low
        cert.append(row)
    return tuple(cert)


class _Search:
    def __init__(self, adj):
        self.adj = adj
        self.n = len(adj)
        self.first = None
        self.first_order = None
        self.best = None
        self.best_order = None
        self.generators = []
        self.leaves = 0

    def run(self):
        if self.n == 0:
            return []
        self._descend([(1 << self.n) - 1], [])
        return self.best_order

    def _leaf(self, cells):
        order = [c.bit_length() - 1 for c in cells]
        self.leaves += 1
        cert = _certificate(self.adj, order)
        if self.first is None:
            self.first = self.best = cert
            self.first_order = self.best_order = order
            return
        if cert == self.first:
            self._record(self.first_order, order)
        elif cert == self.best:
            self._record(self.best_order, order)
        elif cert > self.best:
            self.best = cert
            self.best_order = order

    def _record(self, a, b):
        perm = [0] * self.n
        for x, y in zip(a, b):
            perm[x] = y
        self.generators.append(perm)

    def _orbit_roots(self, prefix):
        parent = list(range(self.n))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for g in self.generators:
            if all(g[p] == p for p in prefix):
                for x in range(self.n):
                    a, b = find(x), find(g[x])
                    if a != b:
                        parent[max(a, b)] = min(a, b)
        return find

    def _descend(self, cells, prefix):
        cells = _refine(self.adj, cells)
        if len(cells) == self.n:
            self._leaf(cells)
            return
        idx = next(i for i, c in enumerate(cells) if c & (c - 1))
        target = cells[idx]
        explored = []
        find, seen_gens = None, -1
        for v in iter_bits(target):
            if explored:
                if seen_gens != len(self.generators):
                    find, seen_gens = self._orbit_roots(prefix), len(self.generators)
                root = find(v)
                if any(find(w) == root for w in explored):
                    continue
            child = cells[:idx] + [1 << v, target & ~(1 << v)] + cells[idx + 1:]
            self._descend(child, prefix + [v])
            explored.append(v)


def canonical_labeling(g: Graph, limit: int = CANONICAL_LIMIT) -> list[int]:
    """Return ``order`` with ``order[i]`` the vertex placed at canonical position ``i``."""
    if g.n > limit:
        raise CapabilityError(f"canonical form limited to {limit} vertices, got {g.n}")
    return _Search(list(g.rows)).run()


def automorphism_generators(g: Graph, limit: int = CANONICAL_LIMIT) -> list[list[int]]:
    """Automorphisms found during the canonical search (not necessarily a full generating set)."""
    if g.n > limit:
        raise CapabilityError(f"canonical form limited to {limit} vertices, got {g.n}")
    search = _Search(list(g.rows))
    search.run()
    return search.generators


def canonical_rows(rows) -> tuple[int, ...]:
    """Canonically relabelled adjacency rows; a hashable isomorphism key."""
    search = _Search(list(rows))
    search.run()
    return search.best or ()


def canonical_rows_order(rows) -> tuple[tuple[int, ...], list[int]]:
    """Like :func:`canonical_rows`, also returning the canonical vertex order."""
    search = _Search(list(rows))
    order = search.run()
    return search.best or (), order


def relabel_by_order(g: Graph, order) -> Graph:
    perm = [0] * g.n
    for i, v in enumerate(order):
        perm[v] = i
    return g.relabel(perm)


def canonical_graph(g: Graph, limit: int = CANONICAL_LIMIT) -> Graph:
    return relabel_by_order(g, canonical_labeling(g, limit))


def canonical_form(g: Graph, limit: int = CANONICAL_LIMIT) -> bytes:
    """graph6 bytes of the canonically relabelled graph; equal iff isomorphic."""
    return encode_graph6(canonical_graph(g, limit)).encode("ascii")


def is_isomorphic(g: Graph, h: Graph, limit: int = CANONICAL_LIMIT) -> bool:
    if g.n != h.n or g.edge_count != h.edge_count:
        return False
    if sorted(g.degrees()) != sorted(h.degrees()):
        return False
    return canonical_form(g, limit) == canonical_form(h, limit)


def canonical_form_bruteforce(g: Graph) -> bytes:
    """Oracle: maximum certificate over all n! orderings (n <= 8)."""
    if g.n > BRUTEFORCE_LIMIT:
        raise CapabilityError(f"exhaustive canonical form limited to {BRUTEFORCE_LIMIT} vertices")
    adj = list(g.rows)
    best, best_order = None, list(range(g.n))
    for order in permutations(range(g.n)):
        cert = _certificate(adj, order)
        if best is None or cert > best:
            best, best_order = cert, order
    return encode_graph6(relabel_by_order(g, best_order)).encode("ascii")
