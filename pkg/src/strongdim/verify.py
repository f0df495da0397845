"""Machine verification of the structural laws behind the toolkit.

Every claim in the registry states a law about strong resolving graphs,
independence numbers, or strong metric dimension of product graphs, and is
checked exactly on a reproducible instance corpus.  Hypothesis checking is
explicit: instances that fail a claim's hypotheses count as skipped, never
as passed, and no claim passes on zero checked instances.
"""

from __future__ import annotations

import csv
import io
import json
import random
import time
from dataclasses import dataclass, asdict
from typing import Callable, Iterable

from . import cover as cov
from . import dimension as dim
from . import graph as gr
from . import metrics as mt
from . import products as pr
from . import resolving as rs
from .graph import Graph

__all__ = [
    "CorpusSpec",
    "Corpus",
    "ClaimReport",
    "CLAIMS",
    "claim_ids",
    "verify_claim",
    "run_suite",
    "replay_instance",
    "suite_to_json",
    "suite_to_csv",
    "suite_exit_code",
]


# ---------------------------------------------------------------------------
# corpus
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CorpusSpec:
    """Knobs for the default desk-scale corpus; the seed fixes everything."""

    seed: int = 42
    exhaustive_n: int = 5        # all connected graphs up to this order
    samples_per_n: int = 4       # seeded connected samples for n in [6, 8]
    pair_samples: int = 100      # seeded factor pairs for the product-law claims
    max_product: int = 400       # cap on product order
    t_max: int = 5               # remark-c3 checks t = 1..t_max
    odd_odd_max: int = 4         # thm-odd-odd-beta checks 1 <= r <= t <= odd_odd_max
    odd_odd_dim_max: int = 3     # thm-odd-odd-bounds range
    odd_odd_fixed: tuple[int, int] | None = None  # restrict odd-odd claims to one (r, t)
    recognition_cap: int = 20    # C-graph / clique-cover recognition cap
    node_budget: int = cov.DEFAULT_NODE_BUDGET


def _all_connected_upto(n_max: int) -> list[Graph]:
    """All connected graphs with 2 <= n <= n_max, one per isomorphism class."""
    out: list[Graph] = []
    for n in range(2, n_max + 1):
        pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
        reps: dict[tuple, list[Graph]] = {}
        for mask in range(1 << len(pairs)):
            edges = [pairs[i] for i in range(len(pairs)) if (mask >> i) & 1]
            g = gr.make_graph(n, edges)
            if not mt.is_connected(g):
                continue
            key = (g.num_edges, g.degree_sequence())
            bucket = reps.setdefault(key, [])
            if not any(gr.graphs_isomorphic(g, r) for r in bucket):
                bucket.append(g)
        found = [g for bucket in reps.values() for g in bucket]
        found.sort(key=gr.to_graph6)
        out.extend(found)
    return out


class Corpus:
    """Deterministic instance pools derived from a CorpusSpec."""

    def __init__(self, spec: CorpusSpec):
        self.spec = spec
        self._exhaustive: list[Graph] | None = None

    def _rng(self, tag: str) -> random.Random:
        return random.Random(f"{self.spec.seed}:{tag}")

    def exhaustive_small(self) -> list[Graph]:
        if self._exhaustive is None:
            self._exhaustive = _all_connected_upto(self.spec.exhaustive_n)
        return self._exhaustive

    def sampled(self, n: int, count: int, tag: str) -> list[Graph]:
        rng = self._rng(f"sample:{n}:{tag}")
        out = []
        for i in range(count):
            p = rng.choice([0.3, 0.4, 0.5, 0.6])
            out.append(gr.random_connected(n, p, rng.randrange(1 << 30)))
        return out

    def family_factors(self) -> list[Graph]:
        """Named small families used as factors throughout."""
        graphs = [gr.path(n) for n in (2, 3, 4, 5, 6)]
        graphs += [gr.cycle(n) for n in (3, 4, 5, 6, 7, 8)]
        graphs += [gr.complete(n) for n in (3, 4, 5)]
        graphs += [gr.complete_multipartite(p) for p in ([2, 2], [2, 3], [1, 3])]
        graphs += [gr.grid(2, 3), gr.grid(3, 3)]
        graphs += [gr.generalized_tree(b, s) for b, s in ([[3, 3], 1], [[2, 2, 3], 2])]
        graphs += [gr.star(5)]
        return graphs

    def base_pool(self, n_cap: int = 8) -> list[Graph]:
        pool = [g for g in self.exhaustive_small() if g.n <= n_cap]
        for n in range(self.spec.exhaustive_n + 1, min(n_cap, 8) + 1):
            pool.extend(self.sampled(n, self.spec.samples_per_n, "pool"))
        pool.extend(g for g in self.family_factors() if g.n <= n_cap)
        return pool

    def product_pairs(self) -> list[tuple[Graph, Graph]]:
        """Pairs for the SR-structure claims (lemma-mmd and friends)."""
        tiny = [g for g in self.exhaustive_small() if g.n <= 4]
        pairs = [(g, h) for g in tiny for h in tiny]
        pool = self.base_pool(8)
        rng = self._rng("product-pairs")
        cap = self.spec.max_product
        for _ in range(60):
            g = pool[rng.randrange(len(pool))]
            h = pool[rng.randrange(len(pool))]
            if g.n * h.n <= cap:
                pairs.append((g, h))
        stress = [
            (gr.cycle(9), gr.cycle(9)),
            (gr.path(20), gr.path(20)),
            (gr.grid(4, 4), gr.complete(5)),
            (gr.complete(6), gr.path(10)),
            (gr.cycle(5), gr.grid(3, 4)),
        ]
        pairs.extend((g, h) for g, h in stress if g.n * h.n <= cap)
        return pairs

    def solver_pairs(self) -> list[tuple[Graph, Graph]]:
        """Seeded pairs with small factors for the exact beta/dimension laws."""
        pool = [g for g in self.base_pool(7) if g.n <= 7]
        rng = self._rng("solver-pairs")
        pairs = [
            (gr.complete(3), gr.path(3)),
            (gr.path(4), gr.complete(2)),
            (gr.cycle(6), gr.path(3)),
            (gr.cycle(5), gr.path(3)),
            (gr.cycle(7), gr.complete(2)),
        ]
        for _ in range(self.spec.pair_samples):
            g = pool[rng.randrange(len(pool))]
            h = pool[rng.randrange(len(pool))]
            pairs.append((g, h))
        return pairs

    def dimension_partners(self) -> list[Graph]:
        return [gr.complete(2), gr.path(3), gr.complete(3), gr.path(4), gr.cycle(5)]


# ---------------------------------------------------------------------------
# shared computation environment (memoized per run)
# ---------------------------------------------------------------------------


class Env:
    def __init__(self, spec: CorpusSpec):
        self.spec = spec
        self._dm: dict[Graph, mt.DistanceMatrix] = {}
        self._sr: dict[Graph, rs.SRGraph] = {}
        self._alpha: dict[Graph, int] = {}
        self._dim: dict[Graph, int] = {}
        self._product: dict[tuple[str, Graph, Graph], Graph] = {}

    def dm(self, g: Graph) -> mt.DistanceMatrix:
        if g not in self._dm:
            self._dm[g] = mt.all_pairs_distances(g)
        return self._dm[g]

    def sr(self, g: Graph) -> rs.SRGraph:
        if g not in self._sr:
            self._sr[g] = rs.strong_resolving_graph(g, self.dm(g))
        return self._sr[g]

    def alpha(self, g: Graph) -> int:
        if g not in self._alpha:
            res = cov.min_vertex_cover(g, self.spec.node_budget)
            if not res.proven_optimal:
                raise cov.BudgetExhausted("cover budget exhausted")
            self._alpha[g] = res.size
        return self._alpha[g]

    def beta(self, g: Graph) -> int:
        return g.n - self.alpha(g)

    def dim_s(self, g: Graph) -> int:
        if g not in self._dim:
            self._dim[g] = dim.strong_metric_dimension(g, self.spec.node_budget).dim
        return self._dim[g]

    def product(self, kind: str, g: Graph, h: Graph) -> Graph:
        key = (kind, g, h)
        if key not in self._product:
            self._product[key] = pr.product(kind, g, h)
        return self._product[key]


# ---------------------------------------------------------------------------
# claim infrastructure
# ---------------------------------------------------------------------------


@dataclass
class ClaimReport:
    claim_id: str
    description: str
    status: str  # all_passed | counterexample | skipped_precondition | inconclusive
    instances_checked: int
    skipped: int
    inconclusive: int
    counterexamples: int
    instances: list[dict]
    seed: int
    elapsed_ms: int = 0


@dataclass(frozen=True)
class Claim:
    claim_id: str
    description: str
    instances: Callable[[Corpus], Iterable[tuple[Graph, Graph | None]]]
    check: Callable[[Env, Graph, Graph | None], dict]


def _record(g: Graph, h: Graph | None, outcome: str, expected, actual, **extra) -> dict:
    rec = {
        "g6_g": gr.to_graph6(g),
        "g6_h": gr.to_graph6(h) if h is not None else None,
        "outcome": outcome,
        "expected": expected,
        "actual": actual,
    }
    rec.update(extra)
    return rec


def _skip(g: Graph, h: Graph | None, why: str) -> dict:
    return _record(g, h, "skip", None, None, note=why)


def _connected_nontrivial(g: Graph) -> bool:
    return g.n >= 2 and mt.is_connected(g)


CLAIMS: dict[str, Claim] = {}


def _claim(claim_id: str, description: str, instances):
    def wrap(fn):
        CLAIMS[claim_id] = Claim(claim_id, description, instances, fn)
        return fn
    return wrap


def claim_ids() -> list[str]:
    return list(CLAIMS)


# -- instance iterators ------------------------------------------------------


def _pairs_product(corpus: Corpus):
    return [(g, h) for g, h in corpus.product_pairs()]


def _pairs_solver(corpus: Corpus):
    return [(g, h) for g, h in corpus.solver_pairs()]


def _singleton_with_partners(factors: Callable[[Corpus], list[Graph]]):
    def gen(corpus: Corpus):
        partners = corpus.dimension_partners()
        out = []
        for i, g in enumerate(factors(corpus)):
            out.append((g, partners[i % len(partners)]))
        return out
    return gen


def _odd_odd_instances(limit_attr: str):
    def gen(corpus: Corpus):
        if corpus.spec.odd_odd_fixed is not None:
            r, t = corpus.spec.odd_odd_fixed
            return [(gr.cycle(2 * r + 1), gr.cycle(2 * t + 1))]
        m = getattr(corpus.spec, limit_attr)
        return [
            (gr.cycle(2 * r + 1), gr.cycle(2 * t + 1))
            for r in range(1, m + 1)
            for t in range(r, m + 1)
        ]
    return gen


def _c3_instances(corpus: Corpus):
    return [(gr.cycle(3), gr.cycle(2 * t + 1)) for t in range(1, corpus.spec.t_max + 1)]


def _odd_cycle_instances(corpus: Corpus):
    partners = [gr.path(4), gr.cycle(6), gr.complete(4)]
    return [(gr.cycle(2 * r + 1), h) for r in (1, 2, 3) for h in partners]


# -- structural claims -------------------------------------------------------


@_claim(
    "lemma-mmd",
    "factor-level prediction of MMD pairs matches the strong product's SR graph",
    _pairs_product,
)
def _check_lemma_mmd(env: Env, g: Graph, h: Graph) -> dict:
    if not (_connected_nontrivial(g) and _connected_nontrivial(h)):
        return _skip(g, h, "factors must be connected and nontrivial")
    prod = env.product("strong", g, h)
    actual = env.sr(prod).sr
    predicted = rs.predicted_mmd_edges(g, h)
    ok = actual.adj == predicted.graph.adj
    diff: list[list[int]] = []
    if not ok:
        actual_edges = set(actual.edges())
        predicted_edges = set(predicted.graph.edges())
        diff = [list(e) for e in sorted(actual_edges ^ predicted_edges)[:20]]
    return _record(
        g, h, "pass" if ok else "fail",
        actual.num_edges, predicted.graph.num_edges,
        condition_tags={str(k): v for k, v in predicted.condition_histogram().items()},
        **({"differing_pairs": diff} if diff else {}),
    )


@_claim(
    "thm-boundary",
    "boundary of a strong product is (bd(G) x V(H)) union (V(G) x bd(H))",
    _pairs_product,
)
def _check_thm_boundary(env: Env, g: Graph, h: Graph) -> dict:
    if not (_connected_nontrivial(g) and _connected_nontrivial(h)):
        return _skip(g, h, "factors must be connected and nontrivial")
    prod = env.product("strong", g, h)
    spec = pr.ProductSpec("strong", g.n, h.n)
    actual = env.sr(prod).boundary
    bd_g = env.sr(g).boundary
    bd_h = env.sr(h).boundary
    expected = frozenset(
        spec.index(u, v)
        for u in range(g.n)
        for v in range(h.n)
        if u in bd_g or v in bd_h
    )
    ok = actual == expected
    return _record(g, h, "pass" if ok else "fail", len(expected), len(actual))


@_claim(
    "thm-sandwich",
    "SR(G) x SR(H) is a subgraph of SR(G x H), itself a subgraph of SR(G) (+) SR(H)",
    _pairs_product,
)
def _check_thm_sandwich(env: Env, g: Graph, h: Graph) -> dict:
    if not (_connected_nontrivial(g) and _connected_nontrivial(h)):
        return _skip(g, h, "factors must be connected and nontrivial")
    prod_sr = env.sr(env.product("strong", g, h)).sr
    sr_g, sr_h = env.sr(g).sr, env.sr(h).sr
    lower = pr.product("strong", sr_g, sr_h)
    upper = pr.product("cartesian_sum", sr_g, sr_h)
    ok_low = all(lower.adj[p] & ~prod_sr.adj[p] == 0 for p in range(prod_sr.n))
    ok_up = all(prod_sr.adj[p] & ~upper.adj[p] == 0 for p in range(prod_sr.n))
    return _record(
        g, h, "pass" if (ok_low and ok_up) else "fail",
        [lower.num_edges, upper.num_edges], prod_sr.num_edges,
    )


@_claim(
    "cor-beta-chain",
    "beta(SR(G) x SR(H)) >= beta(SR(G x H)) >= beta(SR(G) (+) SR(H))",
    _pairs_solver,
)
def _check_cor_beta_chain(env: Env, g: Graph, h: Graph) -> dict:
    if not (_connected_nontrivial(g) and _connected_nontrivial(h)):
        return _skip(g, h, "factors must be connected and nontrivial")
    sr_g, sr_h = env.sr(g).sr, env.sr(h).sr
    b_strong = env.beta(pr.product("strong", sr_g, sr_h))
    b_mid = env.beta(env.sr(env.product("strong", g, h)).sr)
    b_sum = env.beta(pr.product("cartesian_sum", sr_g, sr_h))
    ok = b_strong >= b_mid >= b_sum
    return _record(g, h, "pass" if ok else "fail",
                   "non-increasing chain", [b_strong, b_mid, b_sum])


@_claim(
    "thm-ind-sandwich",
    "beta(G) * beta(H) <= beta(G x H) <= beta(G box H)",
    _pairs_solver,
)
def _check_thm_ind_sandwich(env: Env, g: Graph, h: Graph) -> dict:
    lo = env.beta(g) * env.beta(h)
    mid = env.beta(env.product("strong", g, h))
    hi = env.beta(env.product("cartesian", g, h))
    ok = lo <= mid <= hi
    return _record(g, h, "pass" if ok else "fail", "bracketed", [lo, mid, hi])


@_claim(
    "thm-vizing",
    "beta(G box H) <= min(beta(G) * |V(H)|, beta(H) * |V(G)|)",
    _pairs_solver,
)
def _check_thm_vizing(env: Env, g: Graph, h: Graph) -> dict:
    actual = env.beta(env.product("cartesian", g, h))
    bound = min(env.beta(g) * h.n, env.beta(h) * g.n)
    ok = actual <= bound
    return _record(g, h, "pass" if ok else "fail", f"<= {bound}", actual)


@_claim(
    "thm-lex",
    "beta(G o H) = beta(G) * beta(H) for the lexicographic product",
    _pairs_solver,
)
def _check_thm_lex(env: Env, g: Graph, h: Graph) -> dict:
    expected = env.beta(g) * env.beta(h)
    actual = env.beta(env.product("lexicographic", g, h))
    return _record(g, h, "pass" if actual == expected else "fail", expected, actual)


@_claim(
    "lemma-cartesian-sum",
    "beta(G (+) H) = beta(G) * beta(H) for the Cartesian sum",
    _pairs_solver,
)
def _check_lemma_cartesian_sum(env: Env, g: Graph, h: Graph) -> dict:
    expected = env.beta(g) * env.beta(h)
    actual = env.beta(env.product("cartesian_sum", g, h))
    return _record(g, h, "pass" if actual == expected else "fail", expected, actual)


@_claim(
    "thm-bounds",
    "dim_s(G x H) lies between max(n2 dim_s(G), n1 dim_s(H)) and "
    "n2 dim_s(G) + n1 dim_s(H) - dim_s(G) dim_s(H); equality at the top "
    "whenever a factor's SR graph partitions into beta cliques",
    _pairs_solver,
)
def _check_thm_bounds(env: Env, g: Graph, h: Graph) -> dict:
    if not (_connected_nontrivial(g) and _connected_nontrivial(h)):
        return _skip(g, h, "factors must be connected and nontrivial")
    dg, dh = env.dim_s(g), env.dim_s(h)
    actual = env.dim_s(env.product("strong", g, h))
    lo = dim.general_lower(g.n, h.n, dg, dh)
    hi = dim.general_upper(g.n, h.n, dg, dh)
    ok = lo <= actual <= hi
    note = ""
    cap = env.spec.recognition_cap
    sr_g, sr_h = env.sr(g).sr, env.sr(h).sr
    if sr_g.n <= cap and cov.is_c_graph(sr_g, cap):
        ok = ok and actual == hi
        note = "upper bound must be attained (SR(G) is a C-graph)"
    elif sr_h.n <= cap and cov.is_c_graph(sr_h, cap):
        ok = ok and actual == hi
        note = "upper bound must be attained (SR(H) is a C-graph)"
    return _record(g, h, "pass" if ok else "fail", [lo, hi], actual,
                   **({"note": note} if note else {}))


@_claim(
    "lemma-cgraph",
    "if V(G) partitions into beta(G) cliques then beta(G x H) = beta(G) beta(H)",
    _pairs_solver,
)
def _check_lemma_cgraph(env: Env, g: Graph, h: Graph) -> dict:
    if g.n > env.spec.recognition_cap:
        return _skip(g, h, "factor exceeds the recognition cap")
    if not cov.is_c_graph(g, env.spec.recognition_cap):
        return _skip(g, h, "G is not a C-graph")
    expected = env.beta(g) * env.beta(h)
    actual = env.beta(env.product("strong", g, h))
    return _record(g, h, "pass" if actual == expected else "fail", expected, actual)


@_claim(
    "thm-cgraph-exact",
    "if SR(G) partitions into beta cliques then dim_s(G x H) equals the upper bound",
    _pairs_solver,
)
def _check_thm_cgraph_exact(env: Env, g: Graph, h: Graph) -> dict:
    if not (_connected_nontrivial(g) and _connected_nontrivial(h)):
        return _skip(g, h, "factors must be connected and nontrivial")
    sr_g = env.sr(g).sr
    if sr_g.n > env.spec.recognition_cap:
        return _skip(g, h, "SR graph exceeds the recognition cap")
    if not cov.is_c_graph(sr_g, env.spec.recognition_cap):
        return _skip(g, h, "SR(G) is not a C-graph")
    expected = dim.cgraph_exact(g.n, h.n, env.dim_s(g), env.dim_s(h))
    actual = env.dim_s(env.product("strong", g, h))
    return _record(g, h, "pass" if actual == expected else "fail", expected, actual)


@_claim(
    "lemma-c1graph",
    "if V(G) partitions into beta(G) cliques plus one singleton then "
    "beta(G x H) <= beta(G) (beta(H) + 1)",
    _pairs_solver,
)
def _check_lemma_c1graph(env: Env, g: Graph, h: Graph) -> dict:
    if g.n > env.spec.recognition_cap:
        return _skip(g, h, "factor exceeds the recognition cap")
    if not cov.is_c1_graph(g, env.spec.recognition_cap):
        return _skip(g, h, "G is not a C1-graph")
    bound = env.beta(g) * (env.beta(h) + 1)
    actual = env.beta(env.product("strong", g, h))
    return _record(g, h, "pass" if actual <= bound else "fail", f"<= {bound}", actual)


@_claim(
    "thm-c1-lower",
    "if SR(G) is a C1-graph then dim_s(G x H) >= "
    "n1 (dim_s(H) - 1) + dim_s(G) (n2 - dim_s(H) + 1)",
    _pairs_solver,
)
def _check_thm_c1_lower(env: Env, g: Graph, h: Graph) -> dict:
    if not (_connected_nontrivial(g) and _connected_nontrivial(h)):
        return _skip(g, h, "factors must be connected and nontrivial")
    sr_g = env.sr(g).sr
    if sr_g.n > env.spec.recognition_cap:
        return _skip(g, h, "SR graph exceeds the recognition cap")
    if not cov.is_c1_graph(sr_g, env.spec.recognition_cap):
        return _skip(g, h, "SR(G) is not a C1-graph")
    bound = dim.c1_lower(g.n, h.n, env.dim_s(g), env.dim_s(h))
    actual = env.dim_s(env.product("strong", g, h))
    return _record(g, h, "pass" if actual >= bound else "fail", f">= {bound}", actual)


# -- corollary families -------------------------------------------------------


def _family_check(env, g, h, expected_shape, formula_value):
    """Common body: SR shape isomorphism plus the dimension closed form."""
    sr_g = env.sr(g).sr
    shape_ok = gr.graphs_isomorphic(sr_g, expected_shape)
    actual = env.dim_s(env.product("strong", g, h))
    value_ok = actual == formula_value
    outcome = "pass" if (shape_ok and value_ok) else "fail"
    return _record(
        g, h, outcome, formula_value, actual,
        sr_shape_ok=shape_ok, sr_shape_g6=gr.to_graph6(expected_shape),
    )


def _complete_factors(corpus: Corpus) -> list[Graph]:
    return [gr.complete(n) for n in (2, 3, 4, 5, 6)]


@_claim(
    "cor-cgraphs-i",
    "complete factor: SR(K_n) is K_n and dim_s(K_n x H) follows the closed form",
    _singleton_with_partners(_complete_factors),
)
def _check_cor_i(env: Env, g: Graph, h: Graph) -> dict:
    expected = dim.complete_factor(g.n, h.n, env.dim_s(h))
    return _family_check(env, g, h, gr.complete(g.n), expected)


def _kpartite_factors(corpus: Corpus) -> list[Graph]:
    return [
        gr.complete_multipartite(p)
        for p in ([2, 2], [2, 3], [1, 3], [3, 3], [2, 2, 2])
    ]


@_claim(
    "cor-cgraphs-ii",
    "complete k-partite factor: SR is the union of the part cliques and "
    "dim_s follows the closed form",
    _singleton_with_partners(_kpartite_factors),
)
def _check_cor_ii(env: Env, g: Graph, h: Graph) -> dict:
    parts = _multipartite_parts(g)
    if parts is None:
        return _skip(g, h, "factor is not complete multipartite")
    if sum(1 for p in parts if p == 1) > 1:
        return _skip(g, h, "more than one singleton part")
    shape = gr.disjoint_union([gr.complete(p) for p in parts])
    expected = dim.kpartite_factor(g.n, h.n, len(parts), env.dim_s(h))
    return _family_check(env, g, h, shape, expected)


def _multipartite_parts(g: Graph) -> list[int] | None:
    """Part sizes if g is complete multipartite (complement is a clique union)."""
    comp = gr.complement(g)
    comps = []
    remaining = set(range(g.n))
    while remaining:
        v = min(remaining)
        part = {v} | set(comp.neighbors(v))
        for u in part:
            for w in part:
                if u < w and not comp.has_edge(u, w):
                    return None
            if set(comp.neighbors(u)) - (part - {u}):
                return None
        comps.append(len(part))
        remaining -= part
    return sorted(comps) if len(comps) >= 2 else None


def _gtree_factors(corpus: Corpus) -> list[Graph]:
    return [
        gr.generalized_tree([3, 3], 1),
        gr.generalized_tree([4, 2, 3], 2),
        gr.generalized_tree([2, 2, 2, 2], 3),
        gr.path(5),
        gr.star(6),
    ]


@_claim(
    "cor-cgraphs-iii",
    "generalized-tree factor with c cut vertices: SR is K_(n-c) plus c isolated "
    "vertices and dim_s follows the closed form (trees: l(G)-1 in place of n-c-1)",
    _singleton_with_partners(_gtree_factors),
)
def _check_cor_iii(env: Env, g: Graph, h: Graph) -> dict:
    if not mt.is_generalized_tree(g):
        return _skip(g, h, "factor is not a generalized tree")
    c = len(mt.cut_vertices(g))
    shape = gr.disjoint_union([gr.complete(g.n - c)] + [gr.complete(1)] * c)
    expected = dim.generalized_tree_factor(g.n, h.n, c, env.dim_s(h))
    rec = _family_check(env, g, h, shape, expected)
    if g.num_edges == g.n - 1:  # tree: the leaf form must agree
        tree_value = dim.tree_factor(g.n, h.n, mt.leaf_count(g), env.dim_s(h))
        if tree_value != expected:
            rec["outcome"] = "fail"
            rec["note"] = f"tree leaf form disagrees: {tree_value} != {expected}"
    return rec


def _antipodal_factors(corpus: Corpus) -> list[Graph]:
    k2 = gr.complete(2)
    q3 = pr.product("cartesian", k2, pr.product("cartesian", k2, k2))
    return [gr.cycle(4), gr.cycle(6), gr.cycle(8), gr.cycle(10), q3]


@_claim(
    "cor-cgraphs-iv",
    "2-antipodal factor of order n: SR is n/2 disjoint edges and dim_s follows "
    "the closed form",
    _singleton_with_partners(_antipodal_factors),
)
def _check_cor_iv(env: Env, g: Graph, h: Graph) -> dict:
    if not mt.is_two_antipodal(g, env.dm(g)):
        return _skip(g, h, "factor is not 2-antipodal")
    shape = gr.disjoint_union([gr.complete(2)] * (g.n // 2))
    expected = dim.antipodal_factor(g.n, h.n, env.dim_s(h))
    return _family_check(env, g, h, shape, expected)


def _grid_factors(corpus: Corpus) -> list[Graph]:
    return [gr.grid(a, b) for a, b in ((2, 3), (2, 4), (3, 3), (3, 4), (4, 4))]


@_claim(
    "cor-cgraphs-v",
    "grid factor (beyond the 2x2 grid): SR is K_4 plus isolated vertices and "
    "dim_s follows the closed form",
    _singleton_with_partners(_grid_factors),
)
def _check_cor_v(env: Env, g: Graph, h: Graph) -> dict:
    if g.n <= 4:
        return _skip(g, h, "the 2x2 grid is 2-antipodal, not a K4-shape grid")
    shape = gr.disjoint_union([gr.complete(4)] + [gr.complete(1)] * (g.n - 4))
    expected = dim.grid_factor(g.n, h.n, env.dim_s(h))
    return _family_check(env, g, h, shape, expected)


# -- odd-cycle claims ---------------------------------------------------------


@_claim(
    "thm-oddcycle-bounds",
    "n(r+1) + r(dim_s(H)-1) <= dim_s(C_(2r+1) x H) <= n(r+1) + r dim_s(H)",
    _odd_cycle_instances,
)
def _check_oddcycle_bounds(env: Env, g: Graph, h: Graph) -> dict:
    r = (g.n - 1) // 2
    if g.n != 2 * r + 1 or g != gr.cycle(g.n):
        return _skip(g, h, "factor is not an odd cycle")
    dh = env.dim_s(h)
    lo = dim.odd_cycle_lower(r, h.n, dh)
    hi = dim.odd_cycle_upper(r, h.n, dh)
    actual = env.dim_s(env.product("strong", g, h))
    ok = lo <= actual <= hi
    return _record(g, h, "pass" if ok else "fail", [lo, hi], actual)


@_claim(
    "thm-odd-odd-beta",
    "beta(C_(2r+1) x C_(2t+1)) = r t + floor(r/2) for 1 <= r <= t",
    _odd_odd_instances("odd_odd_max"),
)
def _check_odd_odd_beta(env: Env, g: Graph, h: Graph) -> dict:
    r, t = (g.n - 1) // 2, (h.n - 1) // 2
    if g != gr.cycle(g.n) or h != gr.cycle(h.n) or g.n % 2 == 0 or h.n % 2 == 0 or r > t:
        return _skip(g, h, "needs odd cycles with r <= t")
    expected = r * t + r // 2
    actual = env.beta(env.product("strong", g, h))
    return _record(g, h, "pass" if actual == expected else "fail", expected, actual)


@_claim(
    "thm-odd-odd-bounds",
    "3rt + 2r + 2t + 1 - floor(r/2) <= dim_s(C_(2r+1) x C_(2t+1)) <= 3rt + 2r + 2t + 1",
    _odd_odd_instances("odd_odd_dim_max"),
)
def _check_odd_odd_bounds(env: Env, g: Graph, h: Graph) -> dict:
    r, t = (g.n - 1) // 2, (h.n - 1) // 2
    if g != gr.cycle(g.n) or h != gr.cycle(h.n) or g.n % 2 == 0 or h.n % 2 == 0 or r > t:
        return _skip(g, h, "needs odd cycles with r <= t")
    lo, hi = dim.odd_odd_lower(r, t), dim.odd_odd_upper(r, t)
    actual = env.dim_s(env.product("strong", g, h))
    ok = lo <= actual <= hi
    return _record(g, h, "pass" if ok else "fail", [lo, hi], actual)


@_claim(
    "remark-c3",
    "dim_s(C_3 x C_(2t+1)) = 5t + 3",
    _c3_instances,
)
def _check_remark_c3(env: Env, g: Graph, h: Graph) -> dict:
    t = (h.n - 1) // 2
    if g != gr.cycle(3) or h != gr.cycle(h.n) or h.n % 2 == 0:
        return _skip(g, h, "needs C_3 and an odd cycle")
    expected = dim.c3_exact(t)
    actual = env.dim_s(env.product("strong", g, h))
    return _record(g, h, "pass" if actual == expected else "fail", expected, actual)


# ---------------------------------------------------------------------------
# runners
# ---------------------------------------------------------------------------


def verify_claim(
    claim_id: str, corpus: Corpus, env: Env | None = None
) -> ClaimReport:
    if claim_id not in CLAIMS:
        raise ValueError(f"unknown claim id {claim_id!r}")
    claim = CLAIMS[claim_id]
    env = env or Env(corpus.spec)
    t0 = time.perf_counter()
    records = []
    checked = skipped = inconclusive = failures = 0
    for g, h in claim.instances(corpus):
        try:
            rec = claim.check(env, g, h)
        except cov.BudgetExhausted as exc:
            rec = _record(g, h, "inconclusive", None, None, note=str(exc))
        records.append(rec)
        outcome = rec["outcome"]
        if outcome == "pass":
            checked += 1
        elif outcome == "fail":
            checked += 1
            failures += 1
        elif outcome == "inconclusive":
            inconclusive += 1
        else:
            skipped += 1
    if failures:
        status = "counterexample"
    elif inconclusive:
        status = "inconclusive"
    elif checked == 0:
        status = "skipped_precondition"
    else:
        status = "all_passed"
    elapsed = int((time.perf_counter() - t0) * 1000)
    return ClaimReport(
        claim_id, claim.description, status, checked, skipped, inconclusive,
        failures, records, corpus.spec.seed, elapsed,
    )


def run_suite(
    corpus: Corpus, claim_ids_filter: list[str] | None = None, jobs: int = 1
) -> list[ClaimReport]:
    ids = claim_ids_filter or claim_ids()
    for cid in ids:
        if cid not in CLAIMS:
            raise ValueError(f"unknown claim id {cid!r}")
    if jobs <= 1:
        env = Env(corpus.spec)
        return [verify_claim(cid, corpus, env) for cid in ids]
    from concurrent.futures import ProcessPoolExecutor

    with ProcessPoolExecutor(max_workers=jobs) as pool:
        futures = [pool.submit(_run_one, corpus.spec, cid) for cid in ids]
        return [f.result() for f in futures]


def _run_one(spec: CorpusSpec, claim_id: str) -> ClaimReport:
    return verify_claim(claim_id, Corpus(spec))


def replay_instance(claim_id: str, record: dict, spec: CorpusSpec | None = None) -> dict:
    """Re-run a claim check on an instance decoded from its own report record."""
    if claim_id not in CLAIMS:
        raise ValueError(f"unknown claim id {claim_id!r}")
    g = gr.from_graph6(record["g6_g"])
    h = gr.from_graph6(record["g6_h"]) if record.get("g6_h") else None
    env = Env(spec or CorpusSpec())
    return CLAIMS[claim_id].check(env, g, h)


# ---------------------------------------------------------------------------
# serialization
# ---------------------------------------------------------------------------


def suite_to_json(
    reports: list[ClaimReport], spec: CorpusSpec, include_timing: bool = False
) -> str:
    claims = []
    for rep in reports:
        entry = {
            "claim_id": rep.claim_id,
            "description": rep.description,
            "status": rep.status,
            "instances_checked": rep.instances_checked,
            "skipped": rep.skipped,
            "inconclusive": rep.inconclusive,
            "counterexamples": rep.counterexamples,
            "seed": rep.seed,
            "instances": rep.instances,
        }
        if include_timing:
            entry["elapsed_ms"] = rep.elapsed_ms
        claims.append(entry)
    statuses = [r.status for r in reports]
    doc = {
        "seed": spec.seed,
        "corpus": asdict(spec),
        "claims": claims,
        "summary": {
            "claims": len(reports),
            "all_passed": statuses.count("all_passed"),
            "counterexample": statuses.count("counterexample"),
            "skipped_precondition": statuses.count("skipped_precondition"),
            "inconclusive": statuses.count("inconclusive"),
        },
    }
    return json.dumps(doc, indent=2) + "\n"


def suite_to_csv(reports: list[ClaimReport]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(
        ["claim_id", "status", "instances_checked", "skipped",
         "inconclusive", "counterexamples"]
    )
    for rep in reports:
        writer.writerow(
            [rep.claim_id, rep.status, rep.instances_checked, rep.skipped,
             rep.inconclusive, rep.counterexamples]
        )
    return buf.getvalue()


def suite_exit_code(reports: list[ClaimReport]) -> int:
    statuses = {r.status for r in reports}
    if "counterexample" in statuses:
        return 2
    if "inconclusive" in statuses:
        return 3
    return 0
