"""Verification rows comparing exact Turan numbers with the formula values."""

from __future__ import annotations

from dataclasses import asdict, dataclass

from .constructions import (best_feasible_construction, build_extremal_family, build_regular_pfree,
                            f_value, feasible_component_partition, k2_formula)
from .errors import ArgumentError, BudgetExceeded
from .patterns import Family, Path, Star, Wheel
from .search import METHOD_LIMITS, turan_number

MATCH_TAGS = ("matches_f", "matches_f_plus_one", "matches_neither", "not_computed")
CSV_COLUMNS = ("n", "k", "brute_force", "f_val", "f_plus_one", "construction_edges", "match_tag")


@dataclass
class VerificationRow:
    n: int
    k: int
    brute_force: int | None
    f_val: int
    f_plus_one: int
    construction_edges: int | None
    match_tag: str

    def to_dict(self) -> dict:
        return asdict(self)


def method_for(n: int) -> str | None:
    """Cheapest exact method whose limit covers n."""
    for method in ("exhaustive_catalog", "augmentation", "branch_and_bound"):
        if n <= METHOD_LIMITS[method]:
            return method
    return None


def match_tag(brute: int | None, f_val: int) -> str:
    if brute is None:
        return "not_computed"
    if brute == f_val:
        return "matches_f"
    if brute == f_val + 1:
        return "matches_f_plus_one"
    return "matches_neither"


def _exact(n, pattern, budget_ms, method=None):
    method = method or method_for(n)
    if method is None:
        return None
    try:
        return turan_number(n, pattern, method, budget_ms=budget_ms).turan_value
    except BudgetExceeded:
        return None


def _wheel_construction(n: int, k: int) -> int | None:
    if k == 2:
        return k2_formula(n)
    try:
        g, _ = build_extremal_family(n, k)
        return g.edge_count
    except ArgumentError:
        best = best_feasible_construction(n, k)
        return None if best is None else best[0].edge_count


def verify_theorem(k: int, n_from: int, n_to: int, budget_ms: int | None = None,
                   method: str | None = None) -> list[VerificationRow]:
    """Rows for ex(n, W_{2k+1}) against f(n, k) and f(n, k) + 1.

    ``construction_edges`` is the closed form (ceil(n/2)+1)*floor(n/2) for
    k = 2.  For k >= 3 it is e(K^k_n) when an optimal split is realisable,
    otherwise the densest realisable split (or ``None`` if there is none).
    Rows whose search is out of range or over budget are ``not_computed``.
    """
    if k < 2:
        raise ArgumentError(f"k must be >= 2, got {k}")
    if n_from < 4 or n_to < n_from:
        raise ArgumentError(f"need 4 <= n_from <= n_to, got {n_from}..{n_to}")
    pattern = Wheel(2 * k + 1)
    rows = []
    for n in range(n_from, n_to + 1):
        fv = f_value(n, k)
        brute = _exact(n, pattern, budget_ms, method)
        rows.append(VerificationRow(n, k, brute, fv, fv + 1, _wheel_construction(n, k),
                                    match_tag(brute, fv)))
    return rows


def verify_proposition21(k: int, n_from: int, n_to: int, budget_ms: int | None = None,
                         method: str | None = None) -> list[VerificationRow]:
    """Rows for ex(n, {S_{k+1}, P_{2k-1}}) against floor((k-1)n/2).

    Here ``f_val`` carries the bound floor((k-1)n/2) and ``construction_edges``
    the size of the regular P-free construction (n >= 2k only).
    """
    if k < 2:
        raise ArgumentError(f"k must be >= 2, got {k}")
    if n_from < 1 or n_to < n_from:
        raise ArgumentError(f"need 1 <= n_from <= n_to, got {n_from}..{n_to}")
    pattern = Family(Star(k + 1), Path(2 * k - 1))
    rows = []
    for n in range(n_from, n_to + 1):
        bound = (k - 1) * n // 2
        brute = _exact(n, pattern, budget_ms, method)
        built = build_regular_pfree(n, k)[0].edge_count if n >= 2 * k else None
        rows.append(VerificationRow(n, k, brute, bound, bound + 1, built, match_tag(brute, bound)))
    return rows


def compare_k2_formula(n_from: int = 5, n_to: int = 8,
                       methods=("exhaustive_catalog", "augmentation")) -> list[dict]:
    """ex(n, W_5) by several methods next to (ceil(n/2)+1)*floor(n/2)."""
    out = []
    for n in range(n_from, n_to + 1):
        values = {m: turan_number(n, Wheel(5), m).turan_value for m in methods}
        agree = len(set(values.values())) == 1
        value = next(iter(values.values()))
        formula = k2_formula(n)
        out.append({"n": n, "values": values, "methods_agree": agree, "formula": formula,
                    "formula_match": agree and value == formula})
    return out


def partition_feasibility(k: int) -> list[dict]:
    """Component partitions for 2k <= n < 3k, where small cases are not obvious."""
    out = []
    for n in range(2 * k, 3 * k):
        try:
            parts = feasible_component_partition(n, k)
        except ArgumentError:
            parts = None
        out.append({"n": n, "k": k, "partition": parts})
    return out
