"""Command-line surface: ``cosec parse | annotate | gk | verify | bench``.

Exit codes are a stable contract:

======  =========================================================
0       success (for ``verify``: zero mismatches; original-lemma
        disagreements are findings, not failures)
1       I/O error
2       usage or parse error
3       verification mismatch (oracle disagrees with annotation)
4       oracle budget exceeded
======  =========================================================

``COSEC_BUDGET`` overrides the default oracle caps; the value is either a
single integer applied to both caps or ``DOM,SECURE``.  A ``--budget`` flag
beats the environment.
"""

from __future__ import annotations

import argparse
import json
import os
import statistics
import sys
import time

from .annotate import annotate
from .cotree import (
    JOIN,
    UNION,
    materialize,
    node_paths,
    normalize,
    parse_cotree,
    subtree,
    to_dot,
    to_json,
    to_text,
)
from .errors import BudgetExceededError, CotreeParseError
from .generators import GkSpec, RandomSpec, g_k, random_cotree
from .oracles import (
    DEFAULT_BUDGET,
    OracleBudget,
    domination_number,
    label_r_definitional,
    property_p_definitional,
)
from .verify import report_json, report_text, verify_corpora

EXIT_OK = 0
EXIT_IO = 1
EXIT_USAGE = 2
EXIT_MISMATCH = 3
EXIT_BUDGET = 4


def _read_source(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _resolve_budget(flag_value: str | None) -> OracleBudget:
    text = flag_value if flag_value is not None else os.environ.get("COSEC_BUDGET")
    if text is None:
        return DEFAULT_BUDGET
    parts = text.split(",")
    try:
        if len(parts) == 1:
            cap = int(parts[0])
            return OracleBudget(cap, cap)
        if len(parts) == 2:
            return OracleBudget(int(parts[0]), int(parts[1]))
    except ValueError as exc:
        raise ValueError(f"bad budget {text!r}: {exc}") from None
    raise ValueError(f"bad budget {text!r}: expected CAP or DOM,SECURE")


def cmd_parse(args) -> int:
    t = parse_cotree(_read_source(args.file))
    if args.normalize:
        t = normalize(t)
    if args.dot:
        sys.stdout.write(to_dot(t))
    elif args.json:
        print(json.dumps(to_json(t), indent=2))
    else:
        print(to_text(t))
    return EXIT_OK


_NA = "-"


def _fmt(value) -> str:
    if value is None:
        return _NA
    if value is True:
        return "yes"
    if value is False:
        return "no"
    return str(value)


def cmd_annotate(args) -> int:
    t = normalize(parse_cotree(_read_source(args.file)))
    at = annotate(t)
    if args.json:
        print(json.dumps({"nodes": at.to_json_nodes()}, indent=2))
    else:
        paths = node_paths(t)
        header = (
            "id",
            "path",
            "kind",
            "size",
            "clique",
            "gamma",
            "label_r",
            "two_cliques",
            "p_original",
            "p_corrected",
        )
        rows = [header]
        for v in range(len(t)):
            a = at.node(v)
            rows.append(
                (
                    str(v),
                    paths[v],
                    t.kinds[v],
                    str(a.size),
                    _fmt(a.is_clique),
                    str(a.gamma),
                    _fmt(a.label_r),
                    _fmt(a.union_of_two_cliques),
                    _fmt(a.p_original),
                    _fmt(a.p_corrected),
                )
            )
        widths = [max(len(r[i]) for r in rows) for i in range(len(header))]
        for r in rows:
            print("  ".join(cell.ljust(w) for cell, w in zip(r, widths)).rstrip())
    if args.oracle_check:
        budget = _resolve_budget(args.budget)
        problems = _oracle_check(t, at, budget)
        if problems:
            for p in problems:
                print(f"MISMATCH {p}", file=sys.stderr)
            return EXIT_MISMATCH
        print(f"oracle check: OK ({len(t)} nodes)", file=sys.stderr)
    return EXIT_OK


def _oracle_check(t, at, budget) -> list[str]:
    """Recompute gamma, label ℛ, and the join predicate definitionally."""
    problems = []
    paths = node_paths(t)
    for v in range(len(t)):
        sub = subtree(t, v)
        oracle_gamma = domination_number(materialize(sub), budget)
        if oracle_gamma != at._gamma[v]:
            problems.append(
                f"gamma at {paths[v]}: oracle {oracle_gamma}, pass {at._gamma[v]}"
            )
        kind = t.kinds[v]
        if kind == UNION:
            defn = label_r_definitional(t, v, budget)
            if defn != at._lr[v]:
                problems.append(
                    f"label_r at {paths[v]}: oracle {defn}, pass {at._lr[v]}"
                )
        elif kind == JOIN:
            defn = property_p_definitional(sub)
            if defn != at._pc[v]:
                problems.append(
                    f"p_corrected at {paths[v]}: oracle {defn}, pass {at._pc[v]}"
                )
    return problems


def cmd_gk(args) -> int:
    text = to_text(g_k(GkSpec(args.k))) + "\n"
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.max_n is None and not args.random:
        raise ValueError("nothing to verify: pass --max-n and/or --random")
    report = verify_corpora(
        max_n=args.max_n,
        random_count=args.random,
        random_leaves=args.leaves,
        seed=args.seed,
        budget=_resolve_budget(args.budget),
    )
    if args.json:
        print(json.dumps(report_json(report), indent=2))
    else:
        sys.stdout.write(report_text(report))
    return EXIT_OK if report.ok else EXIT_MISMATCH


def cmd_bench(args) -> int:
    sizes = [int(s) for s in args.sizes.split(",") if s]
    if not sizes or any(s < 1 for s in sizes):
        raise ValueError("sizes must be positive integers")
    print(f"{'leaves':>10}  {'nodes':>10}  {'median_ms':>12}  {'ns_per_node':>12}")
    for size in sizes:
        t = random_cotree(RandomSpec(leaf_count=size, seed=args.seed))
        times = []
        for _ in range(args.repeats):
            start = time.perf_counter()
            annotate(t)
            times.append(time.perf_counter() - start)
        median_s = statistics.median(times)
        ns_per_node = median_s * 1e9 / len(t)
        print(
            f"{size:>10}  {len(t):>10}  {median_s * 1000.0:>12.2f}  "
            f"{ns_per_node:>12.0f}"
        )
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cosec",
        description="Cotree toolkit: annotate cographs with domination facts "
        "and cross-check the join rules against definitional oracles.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("parse", help="parse a .cotree file; print text, DOT, or JSON")
    p.add_argument("file", help="path to a .cotree file, or - for stdin")
    p.add_argument("--normalize", action="store_true", help="normalize before output")
    out = p.add_mutually_exclusive_group()
    out.add_argument("--dot", action="store_true", help="emit Graphviz DOT")
    out.add_argument("--json", action="store_true", help="emit JSON")
    p.set_defaults(func=cmd_parse)

    p = sub.add_parser("annotate", help="print per-node annotations (normalizes first)")
    p.add_argument("file", help="path to a .cotree file, or - for stdin")
    p.add_argument("--json", action="store_true", help="emit JSON")
    p.add_argument(
        "--oracle-check",
        action="store_true",
        help="recompute gamma / label_r / join predicate definitionally and compare",
    )
    p.add_argument("--budget", help="oracle caps: CAP or DOM,SECURE")
    p.set_defaults(func=cmd_annotate)

    p = sub.add_parser("gk", help="emit the k-th counterexample cotree")
    p.add_argument("k", type=int)
    p.add_argument("--out", help="write to file instead of stdout")
    p.set_defaults(func=cmd_gk)

    p = sub.add_parser("verify", help="cross-check corpora against the oracles")
    p.add_argument("--max-n", type=int, help="exhaustive corpus up to this leaf count")
    p.add_argument("--random", type=int, default=0, metavar="COUNT")
    p.add_argument("--leaves", type=int, default=12, help="random corpus leaf cap")
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--budget", help="oracle caps: CAP or DOM,SECURE")
    p.add_argument("--json", action="store_true", help="emit JSON report")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bench", help="time the annotation pass on random cotrees")
    p.add_argument("--sizes", default="1000,10000,100000", help="comma-separated leaf counts")
    p.add_argument("--seed", type=int, default=7)
    p.add_argument("--repeats", type=int, default=3)
    p.set_defaults(func=cmd_bench)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except CotreeParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BudgetExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
