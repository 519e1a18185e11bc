"""Complete catalogue of graphs on n <= 8 vertices up to isomorphism.

Edge layers are grown one edge at a time and deduplicated by canonical key;
layers above half the pair count are complements of the lower ones.
"""

from __future__ import annotations

from functools import lru_cache

from .canon import canonical_rows
from .errors import CapabilityError
from .graph import Graph

CATALOG_LIMIT = 8

# number of unlabelled graphs on n vertices (OEIS A000088)
KNOWN_COUNTS = {0: 1, 1: 1, 2: 2, 3: 4, 4: 11, 5: 34, 6: 156, 7: 1044, 8: 12346}


def _complement_rows(rows, n):
    full = (1 << n) - 1
    return tuple(full & ~r & ~(1 << v) for v, r in enumerate(rows))


@lru_cache(maxsize=None)
def catalog_layers(n: int) -> tuple[tuple[tuple[int, ...], ...], ...]:
    """``layers[e]`` holds the canonical row tuples of all graphs with e edges, sorted."""
    if not 0 <= n <= CATALOG_LIMIT:
        raise CapabilityError(f"exhaustive catalogue limited to n <= {CATALOG_LIMIT}, got {n}")
    pairs = n * (n - 1) // 2
    half = pairs // 2
    layers = [{canonical_rows((0,) * n)}]
    for e in range(half):
        nxt = set()
        for rows in layers[e]:
            for v in range(1, n):
                missing = ~rows[v] & ((1 << v) - 1)
                while missing:
                    low = missing & -missing
                    u = low.bit_length() - 1
                    missing ^= low
                    new = list(rows)
                    new[u] |= 1 << v
                    new[v] |= low
                    nxt.add(canonical_rows(new))
        layers.append(nxt)
    upper = []
    for e in range(half + 1, pairs + 1):
        upper.append({canonical_rows(_complement_rows(r, n)) for r in layers[pairs - e]})
    layers.extend(upper)
    return tuple(tuple(sorted(layer)) for layer in layers)


def catalog(n: int, min_edges: int = 0):
    """Yield every graph on n vertices (canonically labelled) with >= min_edges edges."""
    for e, layer in enumerate(catalog_layers(n)):
        if e < min_edges:
            continue
        for rows in layer:
            yield Graph.trusted(n, rows)


def catalog_count(n: int) -> int:
    return sum(len(layer) for layer in catalog_layers(n))
