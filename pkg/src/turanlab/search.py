"""Exact Turan numbers ex(n, H) for small n by three independent strategies,
plus a seeded hill-climbing lower bound for larger n.

* ``exhaustive_catalog``: filter the complete catalogue of n-vertex graphs.
* ``augmentation``: canonical vertex augmentation of H-free graphs, keeping
  only graphs dense enough to extend to the target edge count.
* ``branch_and_bound``: fixes adjacency rows vertex by vertex under a
  maximum-degree cap, pruning with ex(r, H) of the undecided remainder.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterator

from .canon import CANONICAL_LIMIT, canonical_rows, canonical_rows_order
from .catalog import CATALOG_LIMIT, catalog_layers
from .constructions import build_extremal_family
from .detect import is_free
from .errors import ArgumentError, BudgetExceeded, CapabilityError, TuranLabError
from .graph import Graph, empty, iter_bits, turan_graph
from .graph6 import MAX_G6_VERTICES, encode_graph6
from .patterns import PatternSpec

METHOD_LIMITS = {"exhaustive_catalog": CATALOG_LIMIT, "augmentation": 10, "branch_and_bound": 12}
EXACT_METHODS = tuple(METHOD_LIMITS)
HILL_CLIMB = "hill_climb_lower_bound"
MAX_WITNESSES = 50


@dataclass
class SearchReport:
    n: int
    pattern: PatternSpec
    turan_value: int
    witnesses: list[str]
    method: str
    nodes_explored: int = 0
    elapsed_ms: int = 0
    witness_count: int = 0

    def to_dict(self, timing: bool = True) -> dict:
        return {
            "n": self.n,
            "pattern": self.pattern.render(),
            "turan_value": self.turan_value,
            "witnesses": list(self.witnesses),
            "method": self.method,
            "nodes_explored": self.nodes_explored,
            "elapsed_ms": self.elapsed_ms if timing else 0,
            "witness_count": self.witness_count,
        }


class Budget:
    """Wall-clock deadline; ``None`` means unlimited."""

    def __init__(self, budget_ms: int | None = None):
        self.deadline = None if budget_ms is None else time.monotonic() + budget_ms / 1000
        self._ticks = 0

    def check(self) -> None:
        self._ticks += 1
        if self.deadline is not None and self._ticks % 64 == 0 and time.monotonic() > self.deadline:
            raise BudgetExceeded("search budget exhausted")


def _free_rows(rows, n, pattern) -> bool:
    return is_free(Graph.trusted(n, rows), pattern)


def _witness_string(rows, n) -> str:
    if n <= CANONICAL_LIMIT:
        rows = canonical_rows(rows)
    return encode_graph6(Graph.trusted(n, tuple(rows)))


def _edges(rows) -> int:
    return sum(r.bit_count() for r in rows) // 2


def _check_limit(n: int, method: str) -> None:
    if method == HILL_CLIMB:
        raise ArgumentError("hill climbing gives lower bounds only; use lower_bound_hill_climb")
    if method not in METHOD_LIMITS:
        raise ArgumentError(f"unknown method {method!r}")
    if n < 0:
        raise ArgumentError(f"n must be non-negative, got {n}")
    if n > METHOD_LIMITS[method]:
        raise CapabilityError(f"{method} supports n <= {METHOD_LIMITS[method]}, got {n}")


# ---------------------------------------------------------------- catalogue

def _catalog_search(n, pattern, budget):
    nodes = 0
    layers = catalog_layers(n)
    for e in range(len(layers) - 1, -1, -1):
        found = []
        for rows in layers[e]:
            budget.check()
            nodes += 1
            if _free_rows(rows, n, pattern):
                found.append(rows)
        if found:
            return e, found, nodes
    raise TuranLabError("catalogue is missing the empty graph")  # unreachable


# ---------------------------------------------------------------- augmentation

def _parent_threshold(m: int, threshold: int) -> int:
    """Edges a parent on m-1 vertices needs so that adding a minimum-degree
    vertex can reach ``threshold`` edges on m vertices."""
    if m <= 1:
        return 0
    return max(0, threshold - 2 * threshold // m)


class _Augmenter:
    """Canonical vertex augmentation of pattern-free graphs.

    The deletion vertex of a graph is its minimum-degree vertex appearing last
    in the canonical order.  A child is kept only when deleting that vertex
    gives back the parent's isomorphism class; siblings are deduplicated by
    canonical key.  Every H-free graph on m vertices with e edges has an H-free
    parent on m-1 vertices with at least ``_parent_threshold(m, e)`` edges, so
    thresholds prune without losing graphs.
    """

    def __init__(self, pattern, budget):
        self.pattern = pattern
        self.budget = budget
        self.cache = {}
        self.nodes = 0

    def level(self, m: int, threshold: int) -> list[tuple[int, ...]]:
        threshold = max(threshold, 0)
        cached = self.cache.get(m)
        if cached is not None and cached[0] <= threshold:
            return [r for r in cached[1] if _edges(r) >= threshold]
        if m == 0:
            out = [()]
        else:
            parents = self.level(m - 1, _parent_threshold(m, threshold))
            out = []
            for parent in parents:
                out.extend(self._children(parent, m, threshold))
            out.sort()
        self.cache[m] = (threshold, out)
        return out

    def _children(self, parent, m, threshold):
        pe = _edges(parent)
        pdeg = [r.bit_count() for r in parent]
        new = m - 1
        seen = set()
        d_lo = max(0, threshold - pe)
        d_hi = min(pdeg) + 1 if pdeg else 0
        for d in range(d_lo, min(d_hi, m - 1) + 1):
            forced = [u for u in range(new) if pdeg[u] < d]
            if len(forced) > d:
                continue
            forced_mask = sum(1 << u for u in forced)
            optional = [u for u in range(new) if pdeg[u] >= d]
            for extra in combinations(optional, d - len(forced)):
                self.budget.check()
                self.nodes += 1
                nbrs = forced_mask
                for u in extra:
                    nbrs |= 1 << u
                rows = [r | (1 << new) if nbrs >> u & 1 else r for u, r in enumerate(parent)]
                rows.append(nbrs)
                rows = tuple(rows)
                if self.pattern is not None and not _free_rows(rows, m, self.pattern):
                    continue
                key, order = canonical_rows_order(rows)
                if key in seen:
                    continue
                deg = [r.bit_count() for r in rows]
                low = min(deg)
                victim = next(v for v in reversed(order) if deg[v] == low)
                if victim != new:
                    rest = [v for v in range(m) if v != victim]
                    reduced = Graph.trusted(m, rows).induced(rest).rows
                    if canonical_rows(reduced) != parent:
                        continue
                seen.add(key)
                yield key


def enumerate_free_graphs(n: int, pattern: PatternSpec | None, min_edges: int = 0,
                          budget: Budget | None = None) -> Iterator[Graph]:
    """Every pattern-free graph on n vertices with >= min_edges edges, exactly
    once up to isomorphism, canonically labelled.  ``pattern=None`` means
    unconstrained."""
    if n > METHOD_LIMITS["augmentation"]:
        raise CapabilityError(f"augmentation supports n <= {METHOD_LIMITS['augmentation']}, got {n}")
    if n < 0:
        raise ArgumentError(f"n must be non-negative, got {n}")
    aug = _Augmenter(pattern, budget or Budget())
    for rows in aug.level(n, min_edges):
        yield Graph.trusted(n, rows)


def _augmentation_search(n, pattern, budget):
    aug = _Augmenter(pattern, budget)
    known = [0]
    found = [()]
    for m in range(1, n + 1):
        pairs = m * (m - 1) // 2
        upper = pairs if m < 3 else min(pairs, m * known[-1] // (m - 2))
        for target in range(upper, known[-1] - 1, -1):
            level = aug.level(m, target)
            if level:
                best = max(_edges(r) for r in level)
                known.append(best)
                found = [r for r in level if _edges(r) == best]
                break
        else:
            raise TuranLabError(f"augmentation found no free graph on {m} vertices")
    return known[n], found, aug.nodes


# ---------------------------------------------------------------- branch and bound

class _RowSearch:
    """Decide adjacency rows one vertex at a time.

    Vertex 0 is taken to have maximum degree d0, so every later degree is
    capped by d0.  When vertex i chooses its later neighbours, vertices that
    are still indistinguishable (equal rows so far) form twin classes and only
    a prefix of each class may be chosen.  The undecided part is a graph on
    the r vertices after i, so it carries at most ex(r, H) edges and at most
    half the remaining degree capacity.
    """

    def __init__(self, n, pattern, budget, ex_below):
        self.n = n
        self.pattern = pattern
        self.budget = budget
        self.ex_below = ex_below
        self.nodes = 0
        self.best = -1
        self.best_rows = None

    def solve(self, start_rows):
        self.best = _edges(start_rows)
        self.best_rows = start_rows
        n = self.n
        for d0 in range(n - 1, -1, -1):
            if n * d0 // 2 <= self.best:
                break
            rows = [0] * n
            for j in range(1, d0 + 1):
                rows[0] |= 1 << j
                rows[j] |= 1
            self._row(1, rows, d0, d0)
        return self.best, self.best_rows

    def _bound(self, i, rows, d0):
        # edges still possible among vertices after i
        r = self.n - 1 - i
        if r < 2:
            return 0
        cap = sum(min(d0 - rows[j].bit_count(), r - 1) for j in range(i + 1, self.n))
        return min(self.ex_below[r], cap // 2)

    def _row(self, i, rows, edges, d0):
        self.nodes += 1
        self.budget.check()
        n = self.n
        if i >= n - 1:
            if edges > self.best:
                self.best, self.best_rows = edges, tuple(rows)
            return
        classes = {}
        for j in range(i + 1, n):
            if rows[j].bit_count() < d0:
                classes.setdefault(rows[j], []).append(j)
        groups = list(classes.values())
        room = d0 - rows[i].bit_count()
        for counts in self._count_vectors(groups, room):
            chosen = 0
            for group, c in zip(groups, counts):
                for j in group[:c]:
                    chosen |= 1 << j
            added = chosen.bit_count()
            new = list(rows)
            new[i] |= chosen
            for j in iter_bits(chosen):
                new[j] |= 1 << i
            if edges + added + self._bound(i, new, d0) <= self.best:
                continue
            if added and not _free_rows(tuple(new), n, self.pattern):
                continue
            self._row(i + 1, new, edges + added, d0)

    @staticmethod
    def _count_vectors(groups, room):
        """Per-class prefix lengths with total <= room, densest first."""
        out = []

        def rec(idx, left, acc):
            if idx == len(groups):
                out.append(tuple(acc))
                return
            for c in range(min(len(groups[idx]), left), -1, -1):
                acc.append(c)
                rec(idx + 1, left - c, acc)
                acc.pop()

        rec(0, room, [])
        out.sort(key=lambda cs: -sum(cs))
        return out


def _bnb_search(n, pattern, budget):
    ex_below = [0, 0]
    nodes = 0
    rows = ()
    for m in range(2, n + 1):
        start = _saturate(seed_construction(m, pattern).rows, m, pattern, random.Random(0), budget)
        solver = _RowSearch(m, pattern, budget, ex_below)
        value, rows = solver.solve(start)
        nodes += solver.nodes
        ex_below.append(value)
    if n < 2:
        return 0, [(0,) * n], 1
    if not _free_rows(rows, n, pattern):
        raise TuranLabError("branch and bound produced a graph containing the pattern")
    return ex_below[n], [canonical_rows(rows) if n <= CANONICAL_LIMIT else rows], nodes


# ---------------------------------------------------------------- public API

_ENGINES = {
    "exhaustive_catalog": _catalog_search,
    "augmentation": _augmentation_search,
    "branch_and_bound": _bnb_search,
}


def turan_number(n: int, pattern: PatternSpec, method: str = "augmentation",
                 budget_ms: int | None = None, max_witnesses: int = MAX_WITNESSES) -> SearchReport:
    """Exact ex(n, pattern) with extremal witnesses (canonical graph6).

    Catalogue and augmentation report EX(n, H) completely up to isomorphism;
    branch and bound reports one witness.  At most ``max_witnesses`` strings are
    kept; ``witness_count`` records the full count.
    """
    _check_limit(n, method)
    budget = Budget(budget_ms)
    start = time.perf_counter()
    value, found, nodes = _ENGINES[method](n, pattern, budget)
    witnesses = sorted({_witness_string(rows, n) for rows in found})
    elapsed = int((time.perf_counter() - start) * 1000)
    return SearchReport(n, pattern, value, witnesses[:max_witnesses], method, nodes, elapsed,
                        len(witnesses))


# ---------------------------------------------------------------- hill climbing

def seed_construction(n: int, pattern: PatternSpec) -> Graph:
    """A known pattern-free graph to start from (empty when none applies)."""
    candidates = []
    if pattern.kind == "wheel":
        k = pattern.size
        if k % 2 == 1 and k >= 7:
            try:
                candidates.append(build_extremal_family(n, (k - 1) // 2, check_wheel=False)[0])
            except TuranLabError:
                pass
        candidates.append(turan_graph(n, 2) if k % 2 == 1 else turan_graph(n, 3))
    elif pattern.kind == "clique" and pattern.size >= 2:
        candidates.append(turan_graph(n, pattern.size - 1))
    for g in candidates:
        if is_free(g, pattern):
            return g
    return empty(n)


def _saturate(g_rows, n, pattern, rng, budget):
    rows = list(g_rows)
    non_edges = [(u, v) for v in range(n) for u in range(v) if not rows[u] >> v & 1]
    rng.shuffle(non_edges)
    for u, v in non_edges:
        budget.check()
        rows[u] |= 1 << v
        rows[v] |= 1 << u
        if not _free_rows(tuple(rows), n, pattern):
            rows[u] &= ~(1 << v)
            rows[v] &= ~(1 << u)
    return tuple(rows)


def lower_bound_hill_climb(n: int, pattern: PatternSpec, restarts: int = 4, seed: int = 0,
                           steps: int = 20, budget_ms: int | None = None) -> SearchReport:
    """Seeded randomised edge addition with remove-and-resaturate repair.

    The report's ``turan_value`` is a lower bound only.  ``restarts=0`` returns
    the seed construction unchanged.
    """
    if not 0 <= n <= 64:
        raise CapabilityError(f"hill climbing supports n <= 64, got {n}")
    budget = Budget(budget_ms)
    start = time.perf_counter()
    best = seed_construction(n, pattern).rows
    nodes = 0
    for r in range(restarts):
        rng = random.Random(f"{seed}:{r}")
        current = _saturate(best, n, pattern, rng, budget)
        for _ in range(steps):
            nodes += 1
            edges = [(u, v) for v in range(n) for u in iter_bits(current[v] & ((1 << v) - 1))]
            if not edges:
                break
            rows = list(current)
            for u, v in rng.sample(edges, min(2, len(edges))):
                rows[u] &= ~(1 << v)
                rows[v] &= ~(1 << u)
            trial = _saturate(tuple(rows), n, pattern, rng, budget)
            if _edges(trial) >= _edges(current):
                current = trial
        if _edges(current) > _edges(best):
            best = current
    elapsed = int((time.perf_counter() - start) * 1000)
    # graphs above 62 vertices have no single-byte graph6 header: value only
    witnesses = [_witness_string(best, n)] if n <= MAX_G6_VERTICES else []
    return SearchReport(n, pattern, _edges(best), witnesses, HILL_CLIMB, nodes, elapsed, 1)

