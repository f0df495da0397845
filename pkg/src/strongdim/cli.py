"""Command-line front door: compute invariants, build products, verify claims.

Graphs come from the ``family:params`` mini-language (``cycle:7``,
``kpartite:2,2,3``, ``grid:3x4``, ...), from raw graph6 strings, from files
(``@path``), or from stdin (``-``, one graph6 per line).

Exit codes for ``verify``: 0 all claims passed, 2 a counterexample was found,
3 a solver budget left a claim inconclusive.  Other errors exit 1 with a
single-line ``error: ...`` message.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import cover as cov
from . import dimension as dim
from . import graph as gr
from . import products as pr
from . import resolving as rs
from . import verify as vf
from .graph import Graph


class CliError(Exception):
    pass


def _load_graphs(source: str) -> list[Graph]:
    """Resolve a graph source argument to one or more graphs."""
    if source == "-":
        lines = [ln.strip() for ln in sys.stdin.read().splitlines()]
        graphs = [gr.from_graph6(ln) for ln in lines if ln]
        if not graphs:
            raise CliError("no graph6 input on stdin")
        return graphs
    if source.startswith("@"):
        with open(source[1:], "r", encoding="ascii") as fh:
            lines = [ln.strip() for ln in fh.read().splitlines()]
        graphs = [gr.from_graph6(ln) for ln in lines if ln]
        if not graphs:
            raise CliError(f"no graph6 lines in {source[1:]}")
        return graphs
    if ":" in source:
        return [gr.generate(source)]
    return [gr.from_graph6(source)]


def _load_one(source: str) -> Graph:
    graphs = _load_graphs(source)
    if len(graphs) != 1:
        raise CliError("expected exactly one graph for this command")
    return graphs[0]


# ---------------------------------------------------------------------------
# compute
# ---------------------------------------------------------------------------


def _compute_one(what: str, g: Graph, budget: int) -> dict:
    out: dict = {"what": what, "n": g.n, "m": g.num_edges}
    if what == "dim-s":
        res = dim.strong_metric_dimension(g, budget)
        out["value"] = res.dim
        out["witness"] = sorted(res.basis)
    elif what == "sr-graph":
        srg = rs.strong_resolving_graph(g)
        out["value"] = srg.sr.num_edges
        out["graph6"] = gr.to_graph6(srg.sr)
        out["edges"] = [list(e) for e in srg.sr.edges()]
    elif what == "alpha":
        res = cov.min_vertex_cover(g, budget)
        if not res.proven_optimal:
            raise cov.BudgetExhausted("cover budget exhausted")
        out["value"] = res.size
        out["witness"] = sorted(res.witness)
    elif what == "beta":
        witness = cov.max_independent_set(g, budget)
        out["value"] = len(witness)
        out["witness"] = sorted(witness)
    elif what == "boundary":
        members = rs.boundary(g)
        out["value"] = len(members)
        out["witness"] = sorted(members)
    elif what == "mmd-pairs":
        srg = rs.strong_resolving_graph(g)
        pairs = [list(e) for e in srg.sr.edges()]
        out["value"] = len(pairs)
        out["pairs"] = pairs
    elif what == "theta":
        theta, partition = cov.clique_cover_number(g)
        out["value"] = theta
        out["parts"] = [sorted(p) for p in partition.parts]
    else:
        raise CliError(f"unknown compute target {what!r}")
    return out


def _emit_compute(args, results: list[dict], graphs: list[Graph]) -> None:
    if args.format == "json":
        payload = results[0] if len(results) == 1 else results
        print(json.dumps(payload, indent=2))
    elif args.format == "dot":
        if args.what != "sr-graph":
            raise CliError("dot output is only available for sr-graph")
        for g in graphs:
            srg = rs.strong_resolving_graph(g)
            sys.stdout.write(rs.sr_to_dot(srg))
    else:
        for res in results:
            value = res["value"]
            extra = ""
            if "witness" in res:
                extra = " witness=" + ",".join(str(v) for v in res["witness"])
            print(f"{res['what']} = {value}{extra}")


def cmd_compute(args) -> int:
    graphs = _load_graphs(args.gen or args.graph or "-")
    results = [_compute_one(args.what, g, args.node_budget) for g in graphs]
    _emit_compute(args, results, graphs)
    return 0


# ---------------------------------------------------------------------------
# product
# ---------------------------------------------------------------------------


_KIND_ALIASES = {
    "strong": "strong",
    "cartesian": "cartesian",
    "box": "cartesian",
    "lex": "lexicographic",
    "lexicographic": "lexicographic",
    "sum": "cartesian_sum",
    "cartesian_sum": "cartesian_sum",
}


def cmd_product(args) -> int:
    kind = _KIND_ALIASES.get(args.kind)
    if kind is None:
        raise CliError(f"unknown product kind {args.kind!r}")
    g = _load_one(args.g)
    h = _load_one(args.h)
    prod = pr.product(kind, g, h)
    spec = pr.ProductSpec(kind, g.n, h.n)
    labels = pr.coordinate_labels(spec)
    out: dict = {
        "kind": kind,
        "n": prod.n,
        "m": prod.num_edges,
        "graph6": gr.to_graph6(prod),
    }
    if args.sr or args.dim_s:
        srg = rs.strong_resolving_graph(prod)
        out["sr_graph6"] = gr.to_graph6(srg.sr)
        out["sr_edges"] = [
            [labels[u], labels[v]] for u, v in srg.sr.edges()
        ]
    if args.dim_s:
        res = dim.strong_metric_dimension(prod, args.node_budget)
        out["dim_s"] = res.dim
        out["basis"] = [labels[v] for v in sorted(res.basis)]
    if args.format == "json":
        print(json.dumps(out, indent=2))
    elif args.format == "dot":
        sys.stdout.write(gr.to_dot(prod, labels=labels))
    else:
        print(f"{kind} product: n={out['n']} m={out['m']} graph6={out['graph6']}")
        if "dim_s" in out:
            print(f"dim_s = {out['dim_s']} basis = {'; '.join(out['basis'])}")
        elif "sr_graph6" in out:
            print(f"sr graph6 = {out['sr_graph6']} ({len(out['sr_edges'])} edges)")
    return 0


# ---------------------------------------------------------------------------
# verify
# ---------------------------------------------------------------------------


def cmd_verify(args) -> int:
    if (args.r is None) != (args.t is None):
        raise CliError("--r and --t must be given together")
    spec = vf.CorpusSpec(
        seed=args.seed,
        exhaustive_n=args.exhaustive_n,
        samples_per_n=args.samples,
        pair_samples=args.pair_samples,
        max_product=args.max_product,
        t_max=args.t_max,
        odd_odd_max=args.odd_odd_max,
        odd_odd_fixed=(args.r, args.t) if args.r is not None else None,
        node_budget=args.node_budget,
    )
    corpus = vf.Corpus(spec)
    ids = None if args.claim == "all" else [args.claim]
    reports = vf.run_suite(corpus, ids, jobs=args.jobs)
    text = vf.suite_to_json(reports, spec, include_timing=args.timings)
    if args.out:
        with open(args.out, "w", encoding="ascii") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    if args.csv:
        with open(args.csv, "w", encoding="ascii") as fh:
            fh.write(vf.suite_to_csv(reports))
    for rep in reports:
        print(
            f"{rep.claim_id}: {rep.status} "
            f"(checked={rep.instances_checked} skipped={rep.skipped})",
            file=sys.stderr,
        )
    return vf.suite_exit_code(reports)


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="strongdim",
        description="Exact strong metric dimension toolkit and claim verifier.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_compute = sub.add_parser("compute", help="compute an invariant of one graph")
    p_compute.add_argument(
        "what",
        choices=["dim-s", "sr-graph", "alpha", "beta", "boundary", "mmd-pairs", "theta"],
    )
    p_compute.add_argument("graph", nargs="?", help="graph6, @file, '-' or family:params")
    p_compute.add_argument("--gen", help="generator spec, e.g. cycle:7")
    p_compute.add_argument("--format", choices=["text", "json", "dot"], default="text")
    p_compute.add_argument("--node-budget", type=int, default=cov.DEFAULT_NODE_BUDGET)
    p_compute.set_defaults(fn=cmd_compute)

    p_product = sub.add_parser("product", help="build a product of two graphs")
    p_product.add_argument("kind", help="strong | cartesian | lex | sum")
    p_product.add_argument("g")
    p_product.add_argument("h")
    p_product.add_argument("--sr", action="store_true", help="also compute the SR graph")
    p_product.add_argument("--dim-s", action="store_true", help="also compute dim_s")
    p_product.add_argument("--format", choices=["text", "json", "dot"], default="text")
    p_product.add_argument("--node-budget", type=int, default=cov.DEFAULT_NODE_BUDGET)
    p_product.set_defaults(fn=cmd_product)

    p_verify = sub.add_parser("verify", help="run claim verification")
    p_verify.add_argument("claim", help="claim id or 'all'")
    p_verify.add_argument("--seed", type=int, default=42)
    p_verify.add_argument("--exhaustive-n", type=int, default=5)
    p_verify.add_argument("--samples", type=int, default=4)
    p_verify.add_argument("--pair-samples", type=int, default=100)
    p_verify.add_argument("--max-product", type=int, default=400)
    p_verify.add_argument("--t-max", type=int, default=5)
    p_verify.add_argument("--odd-odd-max", type=int, default=4)
    p_verify.add_argument("--r", type=int, help="restrict odd-odd claims to one r")
    p_verify.add_argument("--t", type=int, help="restrict odd-odd claims to one t")
    p_verify.add_argument("--node-budget", type=int, default=cov.DEFAULT_NODE_BUDGET)
    p_verify.add_argument("--jobs", type=int, default=1)
    p_verify.add_argument("--timings", action="store_true",
                          help="include elapsed_ms in the JSON report")
    p_verify.add_argument("--out", help="write the JSON report to a file")
    p_verify.add_argument("--csv", help="write a one-row-per-claim CSV summary")
    p_verify.set_defaults(fn=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except (CliError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except cov.BudgetExhausted as exc:
        print(f"error: budget-exhausted: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
