"""Command-line front end.

Subcommands: gen (constructions to edge-list or instance JSON), find
(run a finder and emit a re-verified report), oracle (exact maxima),
verify (check a certificate file), bench (reproducible suite tables).

Exit codes: 0 success, 1 verification failure, 2 usage/parse/precondition
errors.  Set INDUCED_TREE_LOG=debug|info for progress logging.
"""

from __future__ import annotations

import argparse
import csv
import json
import logging
import math
import os
import sys
import time
from pathlib import Path

from . import bench, finders, generators, oracle
from .admissible import InstanceParseError, WeightedBipartiteInstance, save_instance
from .finders import FinderPreconditionError, TreeCertificate
from .graph import (
    EdgeListParseError,
    format_edge_list,
    load_edge_list,
    parse_edge_list,
    save_edge_list,
)
from .oracle import BudgetExceededError, OracleBudget

log = logging.getLogger(__name__)

GRAPH_GENERATORS = {
    "ms-layered": (generators.ms_layered, ("m",)),
    "ms-through-vertex": (lambda m: generators.ms_through_vertex(m)[0], ("m",)),
    "line-graph-tree": (generators.line_graph_balanced_tree, ("r", "depth")),
    "random-triangle-free": (generators.random_triangle_free, ("n", "p", "seed")),
    "random-kr-free": (generators.random_kr_free, ("n", "r", "p", "seed")),
}
INSTANCE_GENERATORS = {
    "dyadic": (generators.dyadic_bipartite, ("k",)),
    "alpha-counterexample": (generators.alpha_counterexample, ("t",)),
}


def _configure_logging() -> None:
    level_name = os.environ.get("INDUCED_TREE_LOG", "").lower()
    levels = {"debug": logging.DEBUG, "info": logging.INFO, "warning": logging.WARNING}
    if level_name in levels:
        logging.basicConfig(
            level=levels[level_name], format="%(levelname)s %(name)s: %(message)s"
        )


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="induced-trees",
        description="Induced trees in clique-free graphs: generators, finders, oracles, verification.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_gen = sub.add_parser("gen", help="generate a construction")
    p_gen.add_argument("name", choices=sorted(GRAPH_GENERATORS) + sorted(INSTANCE_GENERATORS))
    p_gen.add_argument("--m", type=int)
    p_gen.add_argument("--k", type=int)
    p_gen.add_argument("--r", type=int)
    p_gen.add_argument("--t", type=int)
    p_gen.add_argument("--n", type=int)
    p_gen.add_argument("--p", type=float)
    p_gen.add_argument("--depth", type=int)
    p_gen.add_argument("--seed", type=int, default=0)
    p_gen.add_argument("--out", type=Path)

    p_find = sub.add_parser("find", help="run a tree finder, emit a verified report")
    p_find.add_argument("graph", type=Path)
    p_find.add_argument("--root", type=int, required=True)
    p_find.add_argument("--r", type=int, default=3)
    p_find.add_argument("--out", type=Path)

    p_oracle = sub.add_parser(
        "oracle",
        help="exact maximum induced tree (optionally through a root), or the "
        "naive optimum of an instance JSON file",
    )
    p_oracle.add_argument("input", type=Path)
    p_oracle.add_argument("--root", type=int)
    p_oracle.add_argument("--alpha", type=float, default=0.5)
    p_oracle.add_argument("--max-n", type=int, default=20,
                          help="vertex cap for graphs, A-side cap for instances")
    p_oracle.add_argument("--time-limit", type=float, default=60.0)

    p_verify = sub.add_parser("verify", help="check a certificate file against a graph")
    p_verify.add_argument("graph", type=Path)
    p_verify.add_argument("certificate", type=Path)

    p_bench = sub.add_parser("bench", help="run a reproducible benchmark suite")
    p_bench.add_argument("suite", choices=bench.SUITES)
    p_bench.add_argument("--seed", type=int, default=1)
    p_bench.add_argument("--count", type=int, help="override the suite's ensemble size")
    p_bench.add_argument("--out", type=Path)
    return parser


def _require(args: argparse.Namespace, names: tuple[str, ...], generator: str) -> list:
    values = []
    for name in names:
        value = getattr(args, name)
        if value is None:
            raise ValueError(f"gen {generator} requires --{name}")
        values.append(value)
    return values


def _usage_error(message: str) -> int:
    print(f"error: {message}", file=sys.stderr)
    return 2


def _cmd_gen(args) -> int:
    if args.name in GRAPH_GENERATORS:
        fn, params = GRAPH_GENERATORS[args.name]
        g = fn(*_require(args, params, args.name))
        if args.out:
            save_edge_list(g, args.out)
        else:
            sys.stdout.write(format_edge_list(g))
        print(f"{args.name}: {g.n} vertices, {g.edge_count} edges", file=sys.stderr)
        if args.name == "ms-through-vertex":
            print("distinguished root vertex: 0", file=sys.stderr)
    else:
        fn, params = INSTANCE_GENERATORS[args.name]
        inst = fn(*_require(args, params, args.name))
        if args.out:
            save_instance(inst, args.out)
        else:
            sys.stdout.write(inst.to_json() + "\n")
        print(
            f"{args.name}: a_count={inst.a_count}, {inst.b_count} B-items",
            file=sys.stderr,
        )
    return 0


def _cmd_find(args) -> int:
    g = load_edge_list(args.graph)
    if args.r < 3:
        raise ValueError("--r must be >= 3")
    started = time.monotonic()
    if args.r == 3:
        cert = finders.find_tree_triangle_free(g, args.root)
        required = math.sqrt(g.n)
    else:
        cert = finders.find_tree_kr_free(g, args.root, args.r)
        required = math.log(g.n) / (4.0 * math.log(args.r)) if g.n >= 2 else 0.0
    elapsed_ms = int((time.monotonic() - started) * 1000)
    failure = finders.certificate_failure(g, cert)
    verified = failure is None and cert.size >= required - finders.BOUND_EPS
    report = {
        "instance": str(args.graph),
        "algorithm": "find-tree-triangle-free" if args.r == 3 else "find-tree-kr-free",
        "n": g.n,
        "r": args.r,
        "root": args.root,
        "certificate": json.loads(cert.to_json()),
        "bound_required": required,
        "bound_achieved": cert.size,
        "verified": verified,
        "failure": failure,
        "wall_time_ms": elapsed_ms,
    }
    print(json.dumps(report, sort_keys=True))
    if args.out:
        args.out.write_text(cert.to_json() + "\n", encoding="utf-8")
    return 0 if verified else 1


def _cmd_oracle(args) -> int:
    text = args.input.read_text(encoding="utf-8")
    if text.lstrip().startswith("{"):
        inst = WeightedBipartiteInstance.from_json(text)
        budget = OracleBudget(max_a_side=args.max_n, time_limit=args.time_limit)
        sel = oracle.admissible_naive(inst, alpha=args.alpha, budget=budget)
        print(
            json.dumps(
                {
                    "a_count": inst.a_count,
                    "b_count": inst.b_count,
                    "alpha": args.alpha,
                    "value": sel.value,
                    "a_chosen": sorted(sel.a_chosen),
                    "b_chosen": sorted(sel.b_chosen),
                },
                sort_keys=True,
            )
        )
        return 0
    g = parse_edge_list(text)
    budget = OracleBudget(max_vertices=args.max_n, time_limit=args.time_limit)
    if args.root is None:
        size, witness = oracle.max_induced_tree_exact(g, budget)
    else:
        size, witness = oracle.max_tree_through_vertex_exact(g, args.root, budget)
    print(
        json.dumps(
            {"n": g.n, "root": args.root, "max_tree": size, "witness": sorted(witness)},
            sort_keys=True,
        )
    )
    return 0


def _cmd_verify(args) -> int:
    g = load_edge_list(args.graph)
    cert = TreeCertificate.from_json(args.certificate.read_text(encoding="utf-8"))
    failure = finders.certificate_failure(g, cert)
    print(json.dumps({"valid": failure is None, "reason": failure or "ok"}, sort_keys=True))
    return 0 if failure is None else 1


def _cmd_bench(args) -> int:
    rows = bench.run_suite(args.suite, args.seed, args.count)
    summary = bench.summarize(rows)
    out_base = args.out if args.out else Path(f"bench_{args.suite}")
    jsonl_path = out_base.with_suffix(".jsonl")
    csv_path = out_base.with_suffix(".csv")
    with open(jsonl_path, "w", encoding="utf-8", newline="\n") as fh:
        for row in rows:
            fh.write(json.dumps(row, sort_keys=True) + "\n")
        fh.write(json.dumps({"summary": summary}, sort_keys=True) + "\n")
    with open(csv_path, "w", encoding="utf-8", newline="") as fh:
        writer = csv.DictWriter(fh, fieldnames=bench.ROW_FIELDS)
        writer.writeheader()
        writer.writerows(rows)
    print(
        f"{args.suite}: {summary['rows']} rows, all_verified={summary['all_verified']}, "
        f"min_slack={summary['min_slack']}"
    )
    print(f"wrote {jsonl_path} and {csv_path}")
    return 0 if summary["all_verified"] else 1


def main(argv=None) -> int:
    _configure_logging()
    parser = _build_parser()
    args = parser.parse_args(argv)
    handlers = {
        "gen": _cmd_gen,
        "find": _cmd_find,
        "oracle": _cmd_oracle,
        "verify": _cmd_verify,
        "bench": _cmd_bench,
    }
    try:
        return handlers[args.command](args)
    except (EdgeListParseError, InstanceParseError) as exc:
        return _usage_error(f"parse failure: {exc}")
    except FinderPreconditionError as exc:
        return _usage_error(f"precondition failure: {exc}")
    except BudgetExceededError as exc:
        return _usage_error(f"budget error: {exc}")
    except FileNotFoundError as exc:
        return _usage_error(str(exc))
    except ValueError as exc:
        return _usage_error(str(exc))


if __name__ == "__main__":
    sys.exit(main())
