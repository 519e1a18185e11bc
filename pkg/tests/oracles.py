"""Slow reference implementations used only by the tests."""

from itertools import permutations


def brute_contains(host, pattern):
    """Try every injective map of pattern vertices into host vertices."""
    if pattern.n > host.n:
        return False
    edges = pattern.edges()
    for image in permutations(range(host.n), pattern.n):
        if all(host.has_edge(image[u], image[v]) for u, v in edges):
            return True
    return False


def tuple_masks(host, k):
    """Edge masks (over pairs of tuple positions) of every ordered k-tuple of
    distinct host vertices, reduced to the maximal ones."""
    pairs = [(i, j) for j in range(k) for i in range(j)]
    masks = set()
    for image in permutations(range(host.n), k):
        m = 0
        for bit, (i, j) in enumerate(pairs):
            if host.has_edge(image[i], image[j]):
                m |= 1 << bit
        masks.add(m)
    return [m for m in masks if not any(m != o and m & o == m for o in masks)]


def pattern_mask(pattern):
    k = pattern.n
    pairs = [(i, j) for j in range(k) for i in range(j)]
    return sum(1 << bit for bit, (i, j) in enumerate(pairs) if pattern.has_edge(i, j))


def brute_turan(n, pattern_graphs, graphs):
    """Largest edge count among ``graphs`` containing none of the patterns."""
    best = None
    for g in graphs:
        if not any(brute_contains(g, h) for h in pattern_graphs):
            best = g.edge_count if best is None else max(best, g.edge_count)
    return best


def colourings(g, k):
    """Every proper colouring of ``g`` with colours 0..k-1 (brute force)."""
    from itertools import product
    edges = g.edges()
    for col in product(range(k), repeat=g.n):
        if all(col[u] != col[v] for u, v in edges):
            yield col


def residual_family(source, p, t):
    """Decomposition family from the other direction.

    L sits in (F u K_t-bar) + T(t, p-1) exactly when some vertex set A has
    L[A] (isolated vertices dropped) inside F while L - A splits into p-1
    independent sets that fit the parts of T(t, p-1).  The family is the set
    of subgraph-minimal such L[A].
    """
    from turanlab.graph import turan_parts
    parts = sorted(turan_parts(t, p - 1), reverse=True)
    candidates = []
    n = source.n
    for a_mask in range(1 << n):
        a = [v for v in range(n) if a_mask >> v & 1]
        b = [v for v in range(n) if not a_mask >> v & 1]
        rest = source.induced(b)
        fits = False
        for col in colourings(rest, p - 1):
            sizes = sorted((col.count(c) for c in range(p - 1)), reverse=True)
            if all(s <= q for s, q in zip(sizes, parts)):
                fits = True
                break
        if not fits:
            continue
        r = source.induced(a).without_isolated()
        if r.edge_count:
            candidates.append(r)
    minimal = []
    for r in candidates:
        if any(o.edge_count < r.edge_count and brute_contains(r, o) for o in candidates):
            continue
        minimal.append(r)
    return minimal
