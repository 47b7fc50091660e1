"""Command-line front end: construct | count | enumerate | verify | bench.

Human-readable output goes to stdout; JSON goes to files (--out) or replaces
stdout under --json.  Every command is deterministic for a fixed (config,
seed), timing fields aside.  Exit codes: 0 success, 1 verification or oracle
failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time

from . import kernels
from .counting import (
    count_cycles,
    count_cycles_bruteforce,
    cycle_report,
    SCHEMA_VERSION,
)
from .embeddings import Embedding, planar_embed
from .enumeration import (
    MAX_N,
    MIN_N,
    base_level_code,
    code_to_embedding,
    corpus,
    corpus_graph6,
    enumerate_triangulations,
    _level_codes,
)
from .families import expand, expected_c5, spec_from_name
from .graphs import Graph, GraphError, parse_graph_text, to_edge_list_text, to_graph6
from .verification import (
    edge_deleted_variants,
    verify_lemma1,
    verify_lemma2,
    verify_lemma3,
    verify_lemmas_over,
    verify_monotonicity,
    verify_theorem,
)

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except GraphError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pentaplanar",
        description="Pentagon-count workbench for planar graphs.",
    )
    sub = parser.add_subparsers(required=True)

    p = sub.add_parser("construct", help="build a named family graph")
    p.add_argument("--family", required=True,
                   help="dn | en | a8 | a11 | exc0..exc5")
    p.add_argument("--n", type=int, help="vertex count (dn/en)")
    p.add_argument("--count", action="store_true",
                   help="also print the pentagon count")
    p.add_argument("--format", choices=("graph6", "edgelist"), default="graph6")
    p.add_argument("--out", help="write the graph here instead of stdout")
    p.set_defaults(func=_cmd_construct)

    p = sub.add_parser("count", help="count cycles in an input graph")
    p.add_argument("input", help="path to a graph file, or - for stdin")
    p.add_argument("--k", type=int, choices=(3, 4, 5),
                   help="print a single count instead of the full report")
    p.add_argument("--format", choices=("auto", "graph6", "edgelist"),
                   default="auto")
    p.add_argument("--oracle", action="store_true",
                   help="cross-check against the brute-force counter")
    p.add_argument("--json", action="store_true", help="emit report JSON to stdout")
    p.add_argument("--out", help="write report JSON here")
    p.set_defaults(func=_cmd_count)

    p = sub.add_parser("enumerate", help="enumerate planar triangulations")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--out", help="write sorted graph6 corpus lines here")
    p.add_argument("--json", action="store_true",
                   help="emit the certificate as JSON")
    p.add_argument("--workers", type=int, default=_default_workers())
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser("verify", help="verify the extremal counts and lemmas")
    p.add_argument("--n", default="5..12",
                   help="single n or inclusive range like 5..12")
    p.add_argument("--lemmas-only", action="store_true",
                   help="skip the theorem sweep, run only the lemma suites")
    p.add_argument("--variants", type=int, default=0,
                   help="additionally check this many edge-deleted variants")
    p.add_argument("--workers", type=int, default=_default_workers())
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--json", action="store_true", help="emit JSON to stdout")
    p.add_argument("--out", help="write JSON here")
    p.add_argument("--allow-big", action="store_true",
                   help="permit n = 13..14 (slow)")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("bench", help="timing report for the hot loops")
    p.add_argument("--suite", choices=("counting", "enumeration"),
                   default="counting")
    p.add_argument("--n", type=int, default=10)
    p.add_argument("--workers", type=int, default=_default_workers())
    p.add_argument("--json", action="store_true", help="emit JSON to stdout")
    p.set_defaults(func=_cmd_bench)

    return parser


def _default_workers() -> int:
    return os.cpu_count() or 1


def _write(text: str, out: str | None) -> None:
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _cmd_construct(args: argparse.Namespace) -> int:
    spec = spec_from_name(args.family, args.n)
    g = expand(spec)
    text = to_graph6(g) + "\n" if args.format == "graph6" else to_edge_list_text(g)
    if args.out:
        _write(text, args.out)
    elif not args.count:
        sys.stdout.write(text)
    if args.count:
        c5 = count_cycles(g, 5)
        print(c5)
        if c5 != expected_c5(spec):
            print(f"error: expected {expected_c5(spec)} pentagons, counted {c5}",
                  file=sys.stderr)
            return EXIT_FAIL
    return EXIT_OK


def _read_graph(path: str, fmt: str) -> Graph:
    text = sys.stdin.read() if path == "-" else open(path).read()
    return parse_graph_text(text, fmt)


def _cmd_count(args: argparse.Namespace) -> int:
    g = _read_graph(args.input, args.format)
    report = cycle_report(g)
    if args.oracle:
        for k in (3, 4, 5):
            mine = (report.c3, report.c4, report.c5)[k - 3]
            oracle = count_cycles_bruteforce(g, k)
            if mine != oracle:
                print(
                    f"oracle mismatch at k={k}: counted {mine}, brute force {oracle}",
                    file=sys.stderr,
                )
                return EXIT_FAIL
    if args.out:
        _write(report.to_json() + "\n", args.out)
    if args.k:
        print((report.c3, report.c4, report.c5)[args.k - 3])
    elif args.json:
        print(report.to_json())
    elif not args.out:
        print(f"n={report.n} m={report.m} c3={report.c3} c4={report.c4} c5={report.c5}")
    return EXIT_OK


def _cmd_enumerate(args: argparse.Namespace) -> int:
    if not (MIN_N <= args.n <= MAX_N):
        raise GraphError(f"--n must be in {MIN_N}..{MAX_N}")
    cert = enumerate_triangulations(args.n, workers=args.workers)
    if args.out:
        _write("\n".join(corpus_graph6(args.n)) + "\n", args.out)
    elif not args.json:
        for line in corpus_graph6(args.n):
            print(line)
    if args.json:
        print(cert.to_json())
    else:
        print(f"n={cert.n}: {cert.count} classes, digest {cert.digest[:16]}...",
              file=sys.stderr)
    return EXIT_OK


def _parse_range(text: str) -> list[int]:
    if ".." in text:
        lo, hi = text.split("..", 1)
        return list(range(int(lo), int(hi) + 1))
    return [int(text)]


def _cmd_verify(args: argparse.Namespace) -> int:
    ns = _parse_range(args.n)
    cap = 14 if args.allow_big else 12
    if not ns or min(ns) < 5 or max(ns) > cap:
        raise GraphError(
            f"--n range must lie within 5..{cap}"
            + ("" if args.allow_big else " (use --allow-big for 13..14)")
        )
    failed = False
    reports = []
    for n in ns:
        if args.lemmas_only:
            embs = corpus(n, workers=args.workers)
            lemmas = verify_lemmas_over([e.graph for e in embs], embs)
            rep = {
                "schema_version": SCHEMA_VERSION,
                "n": n,
                "lemmas": {k: v.to_json_dict() for k, v in lemmas.items()},
            }
            bad = sum(v.violations for v in lemmas.values())
            failed |= bad > 0
            if not args.json:
                print(f"n={n}: lemma checks "
                      + " ".join(f"{k}={v.checked}" for k, v in lemmas.items())
                      + f" violations={bad}")
        else:
            cert = verify_theorem(n, workers=args.workers, include_lemmas=True)
            rep = cert.to_json_dict()
            bad = sum(v.violations for v in (cert.lemmas or {}).values())
            failed |= (not cert.theorem_match) or bad > 0
            if not args.json:
                fams = ",".join(e.family for e in cert.extremal)
                print(
                    f"n={n}: max_c5={cert.max_c5} expected={cert.expected_max} "
                    f"second={cert.second_best} extremal=[{fams}] "
                    f"lemma_violations={bad} "
                    f"{'OK' if cert.theorem_match and bad == 0 else 'FAIL'}"
                )
        reports.append(rep)

    summary: dict = {"schema_version": SCHEMA_VERSION, "certificates": reports}
    if args.variants:
        variants = edge_deleted_variants(args.variants, seed=args.seed)
        emb_variants = []
        for gv in variants:
            emb = planar_embed(gv)
            assert isinstance(emb, Embedding)
            emb_variants.append(emb)
        # remark4 is a triangulation property and does not apply to variants
        lemmas = {
            "lemma1": verify_lemma1(variants),
            "lemma2": verify_lemma2(variants),
            "lemma3": verify_lemma3(emb_variants),
        }
        bad = sum(v.violations for v in lemmas.values())
        failed |= bad > 0
        summary["variants"] = {
            "count": len(variants),
            "seed": args.seed,
            "lemmas": {k: v.to_json_dict() for k, v in lemmas.items()},
        }
        if not args.json:
            print(f"variants({len(variants)}, seed={args.seed}): violations={bad}")
    if not args.lemmas_only:
        mono = verify_monotonicity(samples=200, seed=args.seed)
        summary["monotonicity"] = mono.to_json_dict()
        failed |= not mono.passed
        if not args.json:
            print(
                f"monotonicity: {'pass' if mono.passed else 'FAIL'} "
                f"({mono.edges_tested} edge additions, seed={mono.seed})"
            )
    if args.json:
        print(json.dumps(summary, indent=2))
    if args.out:
        _write(json.dumps(summary, indent=2) + "\n", args.out)
    return EXIT_FAIL if failed else EXIT_OK


def _cmd_bench(args: argparse.Namespace) -> int:
    if args.suite == "counting":
        report = _bench_counting(args.n)
    else:
        report = _bench_enumeration(args.n, args.workers)
    print(json.dumps(report, indent=2))
    return EXIT_OK


def _bench_counting(n: int) -> dict:
    """Per-backend pentagon counting throughput over the n-vertex corpus."""
    embs = corpus(n)
    rows_list = [e.graph.bitrows for e in embs]
    backends = {}
    for name, mod in kernels.backends().items():
        t0 = time.perf_counter()
        total = 0
        for rows in rows_list:
            total += mod.cycle_counts(rows, n)[2]
        dt = time.perf_counter() - t0
        backends[name] = {
            "graphs": len(rows_list),
            "c5_total": int(total),
            "seconds": round(dt, 6),
            "graphs_per_sec": round(len(rows_list) / dt, 1) if dt > 0 else None,
        }
    totals = {b["c5_total"] for b in backends.values()}
    return {
        "schema_version": SCHEMA_VERSION,
        "suite": "counting",
        "n": n,
        "active_backend": kernels.backend_name(),
        "backends": backends,
        "backends_agree": len(totals) == 1,
    }


def _bench_enumeration(n: int, workers: int) -> dict:
    """Fresh (cache-free) enumeration timing up to n."""
    if not (MIN_N <= n <= MAX_N):
        raise GraphError(f"--n must be in {MIN_N}..{MAX_N}")
    t0 = time.perf_counter()
    level = [code_to_embedding(base_level_code()).rotations]
    for _ in range(MIN_N, n):
        codes = _level_codes(level, workers)
        level = [code_to_embedding(c).rotations for c in codes]
    dt = time.perf_counter() - t0
    return {
        "schema_version": SCHEMA_VERSION,
        "suite": "enumeration",
        "n": n,
        "workers": workers,
        "classes": len(level),
        "seconds": round(dt, 6),
        "classes_per_sec": round(len(level) / dt, 1) if dt > 0 else None,
        "kernel_backend": kernels.backend_name(),
    }


if __name__ == "__main__":
    sys.exit(main())
