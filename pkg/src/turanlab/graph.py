"""Undirected simple graphs on at most 64 vertices, stored as bit rows.

A :class:`Graph` is an immutable value: ``rows[v]`` is an integer whose bit
``u`` is set iff ``uv`` is an edge.  Every operation returns a new graph.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import ArgumentError, CapacityError

MAX_VERTICES = 64


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the indices of set bits in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _check_size(n: int) -> None:
    if n < 0:
        raise ArgumentError(f"vertex count must be non-negative, got {n}")
    if n > MAX_VERTICES:
        raise CapacityError(f"vertex count {n} exceeds capacity {MAX_VERTICES}")


@dataclass(frozen=True)
class Graph:
    n: int
    rows: tuple[int, ...]

    def __post_init__(self):
        _check_size(self.n)
        if len(self.rows) != self.n:
            raise ArgumentError("row count does not match vertex count")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.rows):
            if row & ~full:
                raise ArgumentError(f"row {v} references a vertex >= {self.n}")
            if row >> v & 1:
                raise ArgumentError(f"loop at vertex {v}")
            for u in iter_bits(row):
                if not self.rows[u] >> v & 1:
                    raise ArgumentError(f"asymmetric adjacency at ({v}, {u})")

    @classmethod
    def trusted(cls, n: int, rows: tuple[int, ...]) -> "Graph":
        """Build without validation; callers guarantee the invariants."""
        g = object.__new__(cls)
        object.__setattr__(g, "n", n)
        object.__setattr__(g, "rows", rows)
        return g

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        _check_size(n)
        rows = [0] * n
        for u, v in edges:
            _check_pair(n, u, v)
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls.trusted(n, tuple(rows))

    def __repr__(self):
        return f"Graph(n={self.n}, edges={self.edges()})"

    def __len__(self):
        return self.n

    @property
    def edge_count(self) -> int:
        return sum(r.bit_count() for r in self.rows) // 2

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def degrees(self) -> list[int]:
        return [r.bit_count() for r in self.rows]

    def neighbors(self, v: int) -> list[int]:
        return list(iter_bits(self.rows[v]))

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for v in range(self.n) for u in iter_bits(self.rows[v] & ((1 << v) - 1))]

    def max_degree(self) -> int:
        return max(self.degrees(), default=0)

    def induced(self, vertices: Sequence[int]) -> "Graph":
        """Subgraph induced on ``vertices``, relabelled in the given order."""
        index = {v: i for i, v in enumerate(vertices)}
        rows = []
        for v in vertices:
            rows.append(sum(1 << index[u] for u in iter_bits(self.rows[v]) if u in index))
        return Graph.trusted(len(vertices), tuple(rows))

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Return the graph with vertex ``v`` renamed ``perm[v]``."""
        rows = [0] * self.n
        for v, row in enumerate(self.rows):
            rows[perm[v]] = sum(1 << perm[u] for u in iter_bits(row))
        return Graph.trusted(self.n, tuple(rows))

    def remove_edge(self, u: int, v: int) -> "Graph":
        _check_pair(self.n, u, v)
        rows = list(self.rows)
        rows[u] &= ~(1 << v)
        rows[v] &= ~(1 << u)
        return Graph.trusted(self.n, tuple(rows))

    def add_edge(self, u: int, v: int) -> "Graph":
        return add_edge(self, u, v)

    def without_isolated(self) -> "Graph":
        return self.induced([v for v in range(self.n) if self.rows[v]])

    def degree_profile(self) -> "DegreeProfile":
        return DegreeProfile.of(self)


def _check_pair(n: int, u: int, v: int) -> None:
    if u == v:
        raise ArgumentError(f"loop at vertex {u} is not allowed")
    if not (0 <= u < n and 0 <= v < n):
        raise ArgumentError(f"vertex pair ({u}, {v}) out of range for n={n}")


@dataclass(frozen=True)
class DegreeProfile:
    degrees: tuple[int, ...]
    max_degree: int
    min_degree: int
    edge_count: int

    @classmethod
    def of(cls, g: Graph) -> "DegreeProfile":
        degs = tuple(sorted(g.degrees(), reverse=True))
        return cls(degs, max(degs, default=0), min(degs, default=0), sum(degs) // 2)

    def is_regular(self, d: int) -> bool:
        return all(x == d for x in self.degrees)

    def is_nearly_regular(self, d: int) -> bool:
        """All degrees ``d`` except exactly one vertex of degree ``d - 1``."""
        return sorted(self.degrees) == [d - 1] + [d] * (len(self.degrees) - 1)


# ---------------------------------------------------------------- operations

def empty(n: int) -> Graph:
    _check_size(n)
    return Graph.trusted(n, (0,) * n)


def add_edge(g: Graph, u: int, v: int) -> Graph:
    _check_pair(g.n, u, v)
    rows = list(g.rows)
    rows[u] |= 1 << v
    rows[v] |= 1 << u
    return Graph.trusted(g.n, tuple(rows))


def complement(g: Graph) -> Graph:
    full = (1 << g.n) - 1
    return Graph.trusted(g.n, tuple(full & ~row & ~(1 << v) for v, row in enumerate(g.rows)))


def disjoint_union(g: Graph, h: Graph) -> Graph:
    _check_size(g.n + h.n)
    return Graph.trusted(g.n + h.n, g.rows + tuple(r << g.n for r in h.rows))


def join(g: Graph, h: Graph) -> Graph:
    """``g + h``: disjoint union plus every edge between the two sides."""
    _check_size(g.n + h.n)
    left = (1 << g.n) - 1
    right = ((1 << h.n) - 1) << g.n
    rows = tuple(r | right for r in g.rows) + tuple((r << g.n) | left for r in h.rows)
    return Graph.trusted(g.n + h.n, rows)


def copies(g: Graph, times: int) -> Graph:
    """``times`` vertex-disjoint copies of ``g``."""
    out = empty(0)
    for _ in range(times):
        out = disjoint_union(out, g)
    return out


# ---------------------------------------------------------------- builders

def _need(name: str, value: int, minimum: int) -> None:
    if value < minimum:
        raise ArgumentError(f"{name} needs parameter >= {minimum}, got {value}")


def path(k: int) -> Graph:
    """P_k, the path on k vertices."""
    _need("path", k, 1)
    return Graph.from_edges(k, ((i, i + 1) for i in range(k - 1)))


def cycle(k: int) -> Graph:
    _need("cycle", k, 3)
    return Graph.from_edges(k, ((i, (i + 1) % k) for i in range(k)))


def star(k: int) -> Graph:
    """S_k, the star on k vertices (centre 0)."""
    _need("star", k, 1)
    return Graph.from_edges(k, ((0, i) for i in range(1, k)))


def complete(n: int) -> Graph:
    return complement(empty(n))


def complete_bipartite(a: int, b: int) -> Graph:
    return join(empty(a), empty(b))


def matching(k: int) -> Graph:
    """M_k: floor(k/2) disjoint edges, plus one isolated vertex when k is odd."""
    _need("matching", k, 1)
    return Graph.from_edges(k, ((2 * i, 2 * i + 1) for i in range(k // 2)))


def wheel(k: int) -> Graph:
    """W_k = K_1 + C_{k-1}; the hub is vertex 0."""
    _need("wheel", k, 4)
    return join(complete(1), cycle(k - 1))


def fan(m: int) -> Graph:
    """K_1 + P_m; the hub is vertex 0."""
    _need("fan", m, 2)
    return join(complete(1), path(m))


def turan_parts(n: int, p: int) -> list[int]:
    if p < 1:
        raise ArgumentError(f"Turan graph needs p >= 1, got {p}")
    if n < 0:
        raise ArgumentError(f"vertex count must be non-negative, got {n}")
    q, r = divmod(n, p)
    return [q + 1] * r + [q] * (p - r)


def complete_multipartite(parts: Sequence[int]) -> Graph:
    out = empty(0)
    for size in parts:
        out = join(out, empty(size))
    return out


def turan_graph(n: int, p: int) -> Graph:
    """T(n, p): complete p-partite graph with balanced parts, larger parts first."""
    return complete_multipartite(turan_parts(n, p))


def turan_edges(n: int, p: int) -> int:
    """t(n, p), the edge count of T(n, p), without building the graph."""
    parts = turan_parts(n, p)
    return (n * n - sum(s * s for s in parts)) // 2


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(10, outer + spokes + inner)
