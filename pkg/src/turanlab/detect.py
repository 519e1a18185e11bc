"""Non-induced subgraph containment, wheel fast path, and disjoint packings."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .graph import Graph, iter_bits
from .patterns import PatternSpec


@dataclass(frozen=True)
class EmbeddingWitness:
    """``mapping[p]`` is the host vertex receiving pattern vertex ``p``.

    ``member`` indexes the family member that matched (0 for single patterns).
    """

    mapping: tuple[int, ...]
    member: int = 0

    @property
    def image(self) -> int:
        mask = 0
        for v in self.mapping:
            mask |= 1 << v
        return mask


def verify_embedding(host: Graph, pattern: Graph, witness: EmbeddingWitness) -> bool:
    m = witness.mapping
    if len(m) != pattern.n or len(set(m)) != len(m):
        return False
    if any(not 0 <= v < host.n for v in m):
        return False
    return all(host.has_edge(m[u], m[v]) for u, v in pattern.edges())


def _search_order(pattern: Graph) -> list[int]:
    """Pattern vertices by descending degree, grown through already-placed neighbours."""
    deg = pattern.degrees()
    order, placed = [], 0
    remaining = set(range(pattern.n))
    while remaining:
        v = max(remaining, key=lambda x: ((pattern.rows[x] & placed).bit_count(), deg[x], -x))
        order.append(v)
        placed |= 1 << v
        remaining.remove(v)
    return order


def _lower_twins(host: Graph) -> list[int]:
    """For each vertex, the lower-indexed vertices with the same neighbourhood
    (ignoring the pair itself)."""
    rows = host.rows
    out = [0] * host.n
    for v in range(host.n):
        for u in range(v):
            bits = (1 << u) | (1 << v)
            if rows[u] & ~bits == rows[v] & ~bits:
                out[v] |= 1 << u
    return out


class _Matcher:
    """Backtracking embedder.  With ``twins=True`` only the lowest unused
    member of each twin class is tried, which keeps the first embedding found
    but skips embeddings that differ by swapping twins."""

    def __init__(self, host: Graph, pattern: Graph, twins: bool = False):
        self.host = host
        self.pattern = pattern
        self.order = _search_order(pattern)
        pos = {v: i for i, v in enumerate(self.order)}
        # earlier-placed neighbours of each position, as positions
        self.back = [[pos[u] for u in iter_bits(pattern.rows[v]) if pos[u] < i]
                     for i, v in enumerate(self.order)]
        hdeg = host.degrees()
        pdeg = pattern.degrees()
        self.allowed = []
        for v in self.order:
            mask = 0
            for h in range(host.n):
                if hdeg[h] >= pdeg[v]:
                    mask |= 1 << h
            self.allowed.append(mask)
        self.twins = None
        if twins:
            lower = _lower_twins(host)
            if any(lower):
                self.twins = lower

    def embeddings(self, avoid: int = 0) -> Iterator[tuple[int, ...]]:
        k = self.pattern.n
        if k > self.host.n - avoid.bit_count():
            return
        rows = self.host.rows
        image = [0] * k
        cand = [0] * k
        full = (1 << self.host.n) - 1
        twins = self.twins

        def candidates(i, used):
            mask = self.allowed[i] & ~used
            for j in self.back[i]:
                mask &= rows[image[j]]
            if twins is not None:
                m = mask
                while m:
                    low = m & -m
                    m ^= low
                    if twins[low.bit_length() - 1] & ~used:
                        mask ^= low
            return mask

        if k == 0:
            yield ()
            return
        used = avoid & full
        i = 0
        cand[0] = candidates(0, used)
        while i >= 0:
            if not cand[i]:
                i -= 1
                if i >= 0:
                    used &= ~(1 << image[i])
                continue
            low = cand[i] & -cand[i]
            cand[i] ^= low
            image[i] = low.bit_length() - 1
            if i + 1 == k:
                out = [0] * k
                for pos, v in enumerate(self.order):
                    out[v] = image[pos]
                yield tuple(out)
                continue
            used |= low
            i += 1
            cand[i] = candidates(i, used)


def iter_embeddings(host: Graph, pattern: Graph, avoid: int = 0) -> Iterator[tuple[int, ...]]:
    """Every injective edge-preserving map, in deterministic search order."""
    return _Matcher(host, pattern).embeddings(avoid)


def _components(g: Graph) -> list[int]:
    out, seen = [], 0
    for v in range(g.n):
        if seen >> v & 1:
            continue
        comp, frontier = 1 << v, 1 << v
        while frontier:
            low = frontier & -frontier
            frontier ^= low
            new = g.rows[low.bit_length() - 1] & ~comp
            comp |= new
            frontier |= new
        seen |= comp
        out.append(comp)
    return out


def _too_small(host: Graph, pattern: Graph) -> int:
    """Host vertices in components too small to hold a connected pattern."""
    if pattern.n < 2 or len(_components(pattern)) != 1:
        return 0
    mask = 0
    for comp in _components(host):
        if comp.bit_count() < pattern.n:
            mask |= comp
    return mask


def find_embedding(host: Graph, pattern: Graph, avoid: int = 0) -> tuple[int, ...] | None:
    """First embedding in search order.

    Twin classes of the host are pruned and, for a connected pattern, host
    components smaller than the pattern are skipped; neither changes which
    embedding comes first.
    """
    avoid |= _too_small(host, pattern)
    return next(_Matcher(host, pattern, twins=True).embeddings(avoid), None)


def contains_subgraph(g: Graph, pattern: PatternSpec) -> EmbeddingWitness | None:
    """First (not necessarily induced) copy of the pattern, or ``None``.

    For a family, the first member in family order that occurs is reported.
    """
    for idx, member in enumerate(pattern.graphs()):
        m = find_embedding(g, member)
        if m is not None:
            return EmbeddingWitness(m, idx)
    return None


def fixed_length_cycle_in_subset(g: Graph, subset: int, length: int) -> list[int] | None:
    """A cycle on exactly ``length`` vertices of the vertex mask ``subset``.

    The returned cycle starts at its smallest vertex, with the second vertex
    smaller than the last.
    """
    if length < 3:
        raise ValueError("cycle length must be at least 3")
    rows = g.rows
    for s in iter_bits(subset):
        allowed = subset & ~((1 << (s + 1)) - 1)
        if allowed.bit_count() < length - 1:
            break
        close = rows[s] & allowed
        if close.bit_count() < 2:
            continue
        path = [s]
        stack = [rows[s] & allowed]
        on_path = 1 << s
        while stack:
            top = stack[-1]
            if not top:
                stack.pop()
                on_path &= ~(1 << path.pop())
                continue
            low = top & -top
            stack[-1] ^= low
            v = low.bit_length() - 1
            if len(path) == length - 1:
                if path[1] < v:
                    return path + [v]
                continue
            path.append(v)
            on_path |= low
            nxt = rows[v] & allowed & ~on_path
            if len(path) == length - 1:
                nxt &= close
            stack.append(nxt)
    return None


def contains_wheel(g: Graph, k: int) -> EmbeddingWitness | None:
    """W_k via a (k-1)-cycle inside some hub neighbourhood.

    The witness maps wheel vertex 0 (hub) and rim vertices 1..k-1 in cycle order,
    matching :func:`turanlab.graph.wheel`.
    """
    if k < 4:
        raise ValueError("wheel needs k >= 4")
    for hub in range(g.n):
        nbrs = g.rows[hub]
        if nbrs.bit_count() < k - 1:
            continue
        cyc = fixed_length_cycle_in_subset(g, nbrs, k - 1)
        if cyc is not None:
            return EmbeddingWitness((hub, *cyc))
    return None


def _fast_contains(g: Graph, spec: PatternSpec) -> bool:
    if spec.kind == "wheel":
        return contains_wheel(g, spec.size) is not None
    if spec.kind == "star":
        return g.n > 0 and g.max_degree() >= spec.size - 1
    if spec.kind == "cycle" and spec.size <= g.n:
        return fixed_length_cycle_in_subset(g, (1 << g.n) - 1, spec.size) is not None
    return find_embedding(g, spec.graphs()[0]) is not None


def is_free(g: Graph, pattern: PatternSpec) -> bool:
    """True iff ``g`` contains no member of the pattern (wheels use the fast path)."""
    members = pattern.members if pattern.kind == "family" else (pattern,)
    return not any(_fast_contains(g, m) for m in members)


def find_disjoint_copies(g: Graph, pattern: PatternSpec, s: int) -> list[EmbeddingWitness] | None:
    """``s`` pairwise vertex-disjoint copies of the pattern, or ``None``.

    Exact: branches on the lowest undecided vertex (in some copy, or in none).
    Exponential; intended for s <= 4 at desk scale.  Family members may be mixed.
    """
    if s < 1:
        raise ValueError("s must be at least 1")
    members = pattern.graphs()
    size = min(m.n for m in members)
    matchers = [_Matcher(g, m) for m in members]
    full = (1 << g.n) - 1

    def rec(avoid: int, excluded: int, need: int):
        if need == 0:
            return []
        free = full & ~avoid & ~excluded
        if free.bit_count() < need * size:
            return None
        v = (free & -free).bit_length() - 1
        bit = 1 << v
        seen = set()
        for idx, matcher in enumerate(matchers):
            for m in matcher.embeddings(avoid | excluded):
                img = 0
                for x in m:
                    img |= 1 << x
                if not img & bit or img in seen:
                    continue
                seen.add(img)
                rest = rec(avoid | img, excluded, need - 1)
                if rest is not None:
                    return [EmbeddingWitness(m, idx)] + rest
        return rec(avoid, excluded | bit, need)

    return rec(0, 0, s)
