"""Extremal constructions for odd wheels and the split optimiser f(n, k).

f(n, k) = max over n0 + n1 = n of n0*n1 + floor((k-1)*n0/2) + 1.

The (k-1)-regular P_{2k-1}-free graphs are disjoint unions of (nearly)
regular components on k..2k-2 vertices; the extremal family joins such a
graph (larger side) completely to a side carrying one edge.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass, field
from functools import lru_cache

from .detect import is_free
from .errors import ArgumentError, ConstructionError
from .graph import Graph, disjoint_union, empty, join
from .patterns import Family, Path, Star, Wheel

WHEEL_CHECK_LIMIT = 40


@dataclass(frozen=True)
class SplitChoice:
    n0: int
    n1: int
    value: int


@dataclass
class ConstructionRecipe:
    kind: str  # "U_family" | "K_family" | "TuranGraph"
    k: int
    n: int
    split: SplitChoice | None = None
    component_sizes: list[int] = field(default_factory=list)
    embedded_edge: tuple[int, int] | None = None

    def to_dict(self) -> dict:
        d = asdict(self)
        if self.embedded_edge is not None:
            d["embedded_edge"] = list(self.embedded_edge)
        return d


# ---------------------------------------------------------------- f(n, k)

def split_value(n: int, k: int, n0: int) -> int:
    return n0 * (n - n0) + (k - 1) * n0 // 2 + 1


def _check_fk(n: int, k: int) -> None:
    if n < 4:
        raise ArgumentError(f"f(n,k) needs n >= 4, got {n}")
    if k < 1:
        raise ArgumentError(f"f(n,k) needs k >= 1, got {k}")


def f_value_loop(n: int, k: int) -> int:
    """f(n, k) by scanning every split 1 <= n0 <= n-1."""
    _check_fk(n, k)
    c = k - 1
    return max(n0 * (n - n0) + c * n0 // 2 for n0 in range(1, n)) + 1


def closed_form_candidates(n: int, k: int) -> list[int]:
    """floor and ceil of (2n+k-1)/4, clipped to 1..n-1."""
    lo = (2 * n + k - 1) // 4
    hi = -(-(2 * n + k - 1) // 4)
    return sorted({min(max(c, 1), n - 1) for c in (lo, hi)})


def f_value_closed(n: int, k: int) -> int:
    _check_fk(n, k)
    return max(split_value(n, k, n0) for n0 in closed_form_candidates(n, k))


def f_value(n: int, k: int) -> int:
    """f(n, k); the closed form and the full scan must agree."""
    value = f_value_closed(n, k)
    if value != f_value_loop(n, k):
        raise ConstructionError(f"f({n},{k}): closed form disagrees with the split scan")
    return value


def optimal_splits(n: int, k: int) -> list[SplitChoice]:
    """All splits attaining f(n, k), largest n0 first."""
    best = f_value_loop(n, k)
    return [SplitChoice(n0, n - n0, best) for n0 in range(n - 1, 0, -1)
            if split_value(n, k, n0) == best]


def k2_formula(n: int) -> int:
    """(ceil(n/2) + 1) * floor(n/2), the large-n value of ex(n, W_5)."""
    return (-(-n // 2) + 1) * (n // 2)


# ---------------------------------------------------------------- U^k_n(P_{2k-1})

def _odd_allowed(k: int) -> bool:
    return (k - 1) % 2 == 1


@lru_cache(maxsize=None)
def _partition(n: int, k: int, odd_left: int) -> tuple[int, ...] | None:
    """Largest-first component sizes in k..2k-2 summing to ``n``.

    When k-1 is odd, a component of odd size is nearly regular; ``odd_left``
    counts how many such components may still be used.
    """
    if n == 0:
        return ()
    for c in range(min(2 * k - 2, n), k - 1, -1):
        odd = _odd_allowed(k) and c % 2 == 1
        if odd and odd_left == 0:
            continue
        rest = _partition(n - c, k, odd_left - odd)
        if rest is not None:
            return (c,) + rest
    return None


def feasible_component_partition(n: int, k: int) -> list[int]:
    """Component sizes for a (nearly) (k-1)-regular P_{2k-1}-free graph on n vertices.

    Exactly one nearly-regular component is used iff (k-1)*n is odd.
    Raises :class:`ArgumentError` when no partition exists.
    """
    if k < 2:
        raise ArgumentError(f"k must be >= 2, got {k}")
    if k == 2:
        # K_2 components plus, for odd n, one isolated vertex (degree k-2 = 0)
        return [2] * (n // 2) + [1] * (n % 2)
    odd_needed = (k - 1) * n % 2
    parts = _partition(n, k, odd_needed)
    if parts is None or (_odd_allowed(k) and sum(c % 2 for c in parts) != odd_needed):
        raise ArgumentError(f"no feasible component partition for n={n}, k={k}")
    return list(parts)


def regular_component(c: int, d: int) -> Graph:
    """A d-regular graph on c vertices, or nearly d-regular when c*d is odd.

    Circulant with offsets 1..floor(d/2); odd d adds the antipodal offset when c
    is even, otherwise a near-perfect matching at distance (c-1)/2.
    """
    edges = set()
    for i in range(c):
        for off in range(1, d // 2 + 1):
            edges.add(tuple(sorted((i, (i + off) % c))))
    if d % 2:
        if c % 2 == 0:
            for i in range(c // 2):
                edges.add((i, i + c // 2))
        else:
            m = (c - 1) // 2
            for i in range(m):
                edges.add((i, i + m))
    return Graph.from_edges(c, edges)


def havel_hakimi(degrees: list[int]) -> Graph | None:
    """Realise a degree sequence deterministically, or ``None`` if not graphic."""
    n = len(degrees)
    remaining = list(degrees)
    edges = []
    while True:
        order = sorted(range(n), key=lambda v: (-remaining[v], v))
        v = order[0]
        d = remaining[v]
        if d == 0:
            return Graph.from_edges(n, edges)
        targets = order[1:d + 1]
        if len(targets) < d or any(remaining[u] == 0 for u in targets):
            return None
        remaining[v] = 0
        for u in targets:
            remaining[u] -= 1
            edges.append((v, u))


def _component_ok(g: Graph, d: int) -> bool:
    profile = g.degree_profile()
    if g.n * d % 2 == 0:
        return profile.is_regular(d)
    return profile.is_nearly_regular(d)


def _component(c: int, k: int) -> Graph:
    d = k - 1
    if c < k:  # the lone isolated vertex of M_n when k == 2
        return empty(c)
    g = regular_component(c, d)
    if _component_ok(g, d):
        return g
    seq = [d] * c
    if c * d % 2:
        seq[-1] = d - 1
    g = havel_hakimi(seq)
    if g is None or not _component_ok(g, d):
        raise ConstructionError(f"cannot realise a {d}-regular component on {c} vertices")
    return g


def _assemble_pfree(n: int, k: int) -> tuple[Graph, list[int]]:
    sizes = feasible_component_partition(n, k)
    g = empty(0)
    for c in sizes:
        g = disjoint_union(g, _component(c, k))
    return g, sizes


def validate_regular_pfree(g: Graph, k: int) -> bool:
    profile = g.degree_profile()
    d = k - 1
    if g.n * d % 2 == 0:
        degrees_ok = profile.is_regular(d)
    else:
        degrees_ok = profile.is_nearly_regular(d)
    return (degrees_ok and profile.edge_count == d * g.n // 2
            and is_free(g, Family(Star(k + 1), Path(2 * k - 1))))


def build_regular_pfree(n: int, k: int) -> tuple[Graph, ConstructionRecipe]:
    """A member of U^k_n(P_{2k-1}) with floor((k-1)n/2) edges (needs n >= 2k)."""
    if k < 2:
        raise ArgumentError(f"k must be >= 2, got {k}")
    if n < 2 * k:
        raise ArgumentError(f"build_regular_pfree needs n >= 2k = {2 * k}, got {n}")
    g, sizes = _assemble_pfree(n, k)
    if not validate_regular_pfree(g, k):
        raise ConstructionError(f"regular P-free construction failed validation for n={n}, k={k}")
    return g, ConstructionRecipe("U_family", k, n, component_sizes=sizes)


# ---------------------------------------------------------------- K^k_n

def _split_feasible(s: SplitChoice, k: int) -> bool:
    if not s.n0 >= s.n1 >= 2:
        return False
    try:
        feasible_component_partition(s.n0, k)
    except ArgumentError:
        return False
    return True


def choose_split(n: int, k: int) -> SplitChoice:
    """Largest-n0 optimal split whose larger side can host a U^k_{n0}(P_{2k-1}) graph.

    Splits with n0 < 2k are accepted when a component partition still exists
    (see :func:`recipe_meets_side_condition`).
    """
    for s in optimal_splits(n, k):
        if _split_feasible(s, k):
            return s
    raise ArgumentError(f"no optimal split of n={n} admits the extremal recipe for k={k}")


def recipe_meets_side_condition(recipe: ConstructionRecipe) -> bool:
    """n0 >= n1 >= 2 and n0 >= 2k, the side conditions of the extremal class."""
    s = recipe.split
    return s is not None and s.n0 >= s.n1 >= 2 and s.n0 >= 2 * recipe.k


def build_extremal_family(n: int, k: int, check_wheel: bool | None = None) -> tuple[Graph, ConstructionRecipe]:
    """K_{n0,n1} with a U^k_{n0}(P_{2k-1}) graph inside the larger side and one
    edge inside the smaller side; f(n, k) edges and W_{2k+1}-free.

    Vertices 0..n0-1 form the larger side.  The wheel detector validates the
    result when ``n <= 40`` unless ``check_wheel`` says otherwise.
    """
    if k < 3:
        raise ArgumentError(f"the extremal family is defined for k >= 3, got {k}")
    split = choose_split(n, k)
    inner, sizes = _assemble_pfree(split.n0, k)
    small = Graph.from_edges(split.n1, [(0, 1)])
    g = join(inner, small)
    recipe = ConstructionRecipe("K_family", k, n, split, sizes, (split.n0, split.n0 + 1))
    if g.edge_count != f_value(n, k):
        raise ConstructionError(f"extremal family for n={n}, k={k} has {g.edge_count} edges")
    if check_wheel is None:
        check_wheel = n <= WHEEL_CHECK_LIMIT
    if check_wheel and not is_free(g, Wheel(2 * k + 1)):
        raise ConstructionError(f"extremal family for n={n}, k={k} contains W_{2 * k + 1}")
    return g, recipe


def best_feasible_construction(n: int, k: int) -> tuple[Graph, ConstructionRecipe] | None:
    """Densest K_{n0,n1}(U, K_2) graph over all admissible splits, optimal or not."""
    best = None
    for n0 in range(n - 1, 0, -1):
        s = SplitChoice(n0, n - n0, split_value(n, k, n0))
        if _split_feasible(s, k) and (best is None or s.value > best.value):
            best = s
    if best is None:
        return None
    inner, sizes = _assemble_pfree(best.n0, k)
    g = join(inner, Graph.from_edges(best.n1, [(0, 1)]))
    return g, ConstructionRecipe("K_family", k, n, best, sizes, (best.n0, best.n0 + 1))
