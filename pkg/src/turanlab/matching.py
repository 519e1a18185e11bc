"""Maximum matching in general graphs (Edmonds' blossom algorithm)."""

from collections import deque
from itertools import combinations

from .graph import Graph, iter_bits


def _augmenting_path(adj, mate, root):
    """BFS from an exposed ``root``; return ``(end, parent)`` or ``(-1, None)``."""
    n = len(adj)
    used = [False] * n
    parent = [-1] * n
    base = list(range(n))
    used[root] = True
    queue = deque([root])

    def lca(a, b):
        seen = [False] * n
        while True:
            a = base[a]
            seen[a] = True
            if mate[a] == -1:
                break
            a = parent[mate[a]]
        while True:
            b = base[b]
            if seen[b]:
                return b
            b = parent[mate[b]]

    def mark_path(v, b, child, blossom):
        while base[v] != b:
            blossom[base[v]] = blossom[base[mate[v]]] = True
            parent[v] = child
            child = mate[v]
            v = parent[mate[v]]

    while queue:
        v = queue.popleft()
        for to in adj[v]:
            if base[v] == base[to] or mate[v] == to:
                continue
            if to == root or (mate[to] != -1 and parent[mate[to]] != -1):
                cur = lca(v, to)
                blossom = [False] * n
                mark_path(v, cur, to, blossom)
                mark_path(to, cur, v, blossom)
                for i in range(n):
                    if blossom[base[i]]:
                        base[i] = cur
                        if not used[i]:
                            used[i] = True
                            queue.append(i)
            elif parent[to] == -1:
                parent[to] = v
                if mate[to] == -1:
                    return to, parent
                used[mate[to]] = True
                queue.append(mate[to])
    return -1, None


def max_matching(g: Graph) -> list[tuple[int, int]]:
    """Return the edges of a maximum matching, each as ``(u, v)`` with ``u < v``."""
    n = g.n
    adj = [list(iter_bits(r)) for r in g.rows]
    mate = [-1] * n
    for v in range(n):
        if mate[v] == -1:
            for u in adj[v]:
                if mate[u] == -1:
                    mate[u], mate[v] = v, u
                    break
    for root in range(n):
        if mate[root] != -1:
            continue
        end, parent = _augmenting_path(adj, mate, root)
        while end != -1:
            pv = parent[end]
            nxt = mate[pv]
            mate[end], mate[pv] = pv, end
            end = nxt
    return [(v, mate[v]) for v in range(n) if v < mate[v]]


def matching_number(g: Graph) -> int:
    """nu(G), the size of a maximum matching."""
    return len(max_matching(g))


def matching_number_bruteforce(g: Graph) -> int:
    """Largest pairwise-disjoint edge subset, by exhaustive search (oracle)."""
    edges = g.edges()
    for size in range(g.n // 2, 0, -1):
        for subset in combinations(edges, size):
            touched = {v for e in subset for v in e}
            if len(touched) == 2 * size:
                return size
    return 0
