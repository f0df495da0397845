"""Strong metric dimension: definitional checks, the SR-cover pipeline, a
subset-enumeration oracle, and the closed-form evaluators.

The closed forms are pure integer arithmetic kept apart from graph code, so
the claim verifier can compare formula values against computed truth without
circularity.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .cover import DEFAULT_NODE_BUDGET, BudgetExhausted, min_vertex_cover
from .graph import Graph
from .metrics import DistanceMatrix, all_pairs_distances, is_connected
from .resolving import strong_resolving_graph

__all__ = [
    "DimensionResult",
    "strongly_resolves",
    "is_strong_generator",
    "strong_metric_dimension",
    "brute_force_dimension",
    "formula",
    "FORMULA_KINDS",
]

BRUTE_FORCE_SIZE_CAP = 15


@dataclass
class DimensionResult:
    dim: int
    basis: frozenset[int]
    method: str  # "sr_cover" or "brute_force"


def strongly_resolves(dm: DistanceMatrix, w: int, u: int, v: int) -> bool:
    """True iff some shortest w-u path passes v or some shortest w-v path passes u."""
    if u == v:
        raise ValueError("strong resolution is defined for distinct vertices")
    dwu, dwv, duv = dm.dist(w, u), dm.dist(w, v), dm.dist(u, v)
    if dwu is None or dwv is None or duv is None:
        raise ValueError("strong resolution needs a connected graph")
    return dwu == dwv + duv or dwv == dwu + duv


def is_strong_generator(
    g: Graph, members, dm: DistanceMatrix | None = None
) -> bool:
    """True iff every vertex pair is strongly resolved by some member."""
    if not is_connected(g):
        raise ValueError("strong generators are defined for connected graphs")
    dm = dm or all_pairs_distances(g)
    rows = dm.rows
    S = sorted(set(members))
    for u in range(g.n):
        ru = rows[u]
        for v in range(u + 1, g.n):
            rv = rows[v]
            duv = ru[v]
            for w in S:
                if rows[w][u] == rows[w][v] + duv or rows[w][v] == rows[w][u] + duv:
                    break
            else:
                return False
    return True


def strong_metric_dimension(
    g: Graph, node_budget: int = DEFAULT_NODE_BUDGET
) -> DimensionResult:
    """dim_s via the SR-graph vertex cover pipeline.

    The returned basis is re-validated definitionally before returning, which
    turns the covering characterization into a runtime assertion.
    """
    if g.n < 2:
        raise ValueError("strong metric dimension needs n >= 2")
    if not is_connected(g):
        raise ValueError("strong metric dimension needs a connected graph")
    dm = all_pairs_distances(g)
    srg = strong_resolving_graph(g, dm)
    res = min_vertex_cover(srg.sr, node_budget)
    if not res.proven_optimal:
        raise BudgetExhausted(
            f"SR cover search exhausted its node budget ({res.nodes_explored} nodes)"
        )
    if not is_strong_generator(g, res.witness, dm):
        raise AssertionError("SR cover failed the definitional generator check")
    return DimensionResult(res.size, res.witness, "sr_cover")


def brute_force_dimension(
    g: Graph, size_cap: int = BRUTE_FORCE_SIZE_CAP
) -> DimensionResult:
    """Independent oracle: smallest strong generator by subset enumeration,
    increasing size, lexicographic within a size class."""
    if g.n > size_cap:
        raise ValueError(f"brute force capped at {size_cap} vertices")
    if g.n < 2:
        raise ValueError("strong metric dimension needs n >= 2")
    if not is_connected(g):
        raise ValueError("strong metric dimension needs a connected graph")
    dm = all_pairs_distances(g)
    rows = dm.rows
    # resolver mask per vertex pair; a generator must hit every one
    pair_masks = []
    for u in range(g.n):
        for v in range(u + 1, g.n):
            duv = rows[u][v]
            mask = 0
            for w in range(g.n):
                if rows[w][u] == rows[w][v] + duv or rows[w][v] == rows[w][u] + duv:
                    mask |= 1 << w
            pair_masks.append(mask)
    pair_masks.sort(key=lambda m: m.bit_count())  # scarcest resolvers first
    for k in range(1, g.n + 1):
        for subset in combinations(range(g.n), k):
            smask = 0
            for w in subset:
                smask |= 1 << w
            if all(smask & m for m in pair_masks):
                return DimensionResult(k, frozenset(subset), "brute_force")
    raise AssertionError("the full vertex set must be a strong generator")


# ---------------------------------------------------------------------------
# closed forms and bounds for dim_s of strong products
# ---------------------------------------------------------------------------


def _check(cond: bool, msg: str) -> None:
    if not cond:
        raise ValueError(msg)


def general_lower(n1: int, n2: int, dim_g: int, dim_h: int) -> int:
    return max(n2 * dim_g, n1 * dim_h)


def general_upper(n1: int, n2: int, dim_g: int, dim_h: int) -> int:
    return n2 * dim_g + n1 * dim_h - dim_g * dim_h


def cgraph_exact(n1: int, n2: int, dim_g: int, dim_h: int) -> int:
    """Exact value when the first factor's SR graph partitions into
    beta cliques; numerically the general upper bound."""
    return general_upper(n1, n2, dim_g, dim_h)


def complete_factor(n1: int, n2: int, dim_h: int) -> int:
    _check(n1 >= 2, "complete factor needs n1 >= 2")
    return n2 * (n1 - 1) + n1 * dim_h - (n1 - 1) * dim_h


def kpartite_factor(n1: int, n2: int, k: int, dim_h: int) -> int:
    _check(2 <= k <= n1, "part count must be in [2, n1]")
    return n2 * (n1 - k) + n1 * dim_h - (n1 - k) * dim_h


def generalized_tree_factor(n1: int, n2: int, c: int, dim_h: int) -> int:
    _check(0 <= c < n1, "cut vertex count must be in [0, n1)")
    return n2 * (n1 - c - 1) + n1 * dim_h - (n1 - c - 1) * dim_h


def tree_factor(n1: int, n2: int, leaves: int, dim_h: int) -> int:
    _check(leaves >= 2, "a nontrivial tree has at least 2 leaves")
    return n2 * (leaves - 1) + n1 * dim_h - (leaves - 1) * dim_h


def antipodal_factor(n1: int, n2: int, dim_h: int) -> int:
    _check(n1 % 2 == 0, "2-antipodal factor has even order")
    return n2 * n1 // 2 + n1 * dim_h - (n1 // 2) * dim_h


def grid_factor(n1: int, n2: int, dim_h: int) -> int:
    _check(n1 >= 4, "grid factor needs at least 4 vertices")
    return 3 * n2 + n1 * dim_h - 3 * dim_h


def c1_lower(n1: int, n2: int, dim_g: int, dim_h: int) -> int:
    return n1 * (dim_h - 1) + dim_g * (n2 - dim_h + 1)


def odd_cycle_lower(r: int, n: int, dim_h: int) -> int:
    _check(r >= 1, "odd cycle parameter r must be >= 1")
    return n * (r + 1) + r * (dim_h - 1)


def odd_cycle_upper(r: int, n: int, dim_h: int) -> int:
    _check(r >= 1, "odd cycle parameter r must be >= 1")
    return n * (r + 1) + r * dim_h


def odd_odd_lower(r: int, t: int) -> int:
    _check(1 <= r <= t, "odd-odd bounds need 1 <= r <= t")
    return 3 * r * t + 2 * r + 2 * t + 1 - r // 2


def odd_odd_upper(r: int, t: int) -> int:
    _check(1 <= r <= t, "odd-odd bounds need 1 <= r <= t")
    return 3 * r * t + 2 * r + 2 * t + 1


def c3_exact(t: int) -> int:
    _check(t >= 1, "c3_exact needs t >= 1")
    return 5 * t + 3


FORMULA_KINDS = {
    "general_lower": general_lower,
    "general_upper": general_upper,
    "cgraph_exact": cgraph_exact,
    "complete_factor": complete_factor,
    "kpartite_factor": kpartite_factor,
    "generalized_tree_factor": generalized_tree_factor,
    "tree_factor": tree_factor,
    "antipodal_factor": antipodal_factor,
    "grid_factor": grid_factor,
    "c1_lower": c1_lower,
    "odd_cycle_lower": odd_cycle_lower,
    "odd_cycle_upper": odd_cycle_upper,
    "odd_odd_lower": odd_odd_lower,
    "odd_odd_upper": odd_odd_upper,
    "c3_exact": c3_exact,
}


def formula(kind: str, **params: int) -> int:
    """Evaluate one of the named closed forms; pure arithmetic."""
    try:
        fn = FORMULA_KINDS[kind]
    except KeyError:
        raise ValueError(f"unknown formula kind {kind!r}") from None
    return fn(**params)
