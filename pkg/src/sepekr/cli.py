"""Command-line front end: reproducible reports over the verification toolkit.

Exit codes: 0 success or verified, 1 verification failure, 2 usage error,
3 resource-limit abort.  Output for a fixed invocation is byte-identical
across runs; the SEPEKR_THREADS environment variable caps worker counts and
never changes results (the solver is sequential).
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys
import time

from .compression import verify_compression_suite
from .core import enumerate_separated, star_size_formula
from .families import random_maximal_intersecting, star_family
from .graph import (
    build_kneser,
    build_schrijver,
    chromatic_number,
    export_dimacs,
    independence_number,
)
from .search import (
    CLASS_MAX_VERTICES,
    DEFAULT_MAX_VERTICES,
    ResourceLimitError,
    extremal_classes,
    max_intersecting,
)
from .weighted import verify_weighted_ekr

EXIT_OK = 0
EXIT_VERIFICATION_FAILED = 1
EXIT_USAGE = 2
EXIT_RESOURCE = 3


def _read_thread_env() -> int:
    raw = os.environ.get("SEPEKR_THREADS", "1")
    try:
        threads = int(raw)
    except ValueError:
        raise ValueError(f"SEPEKR_THREADS must be a positive integer, got {raw!r}")
    if threads < 1:
        raise ValueError(f"SEPEKR_THREADS must be a positive integer, got {raw!r}")
    return threads


def _add_instance_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--n", type=int, required=True, help="circle size")
    p.add_argument("--r", type=int, required=True, help="set size")
    p.add_argument("--k", type=int, required=True, help="separation parameter")


def _add_output_args(p: argparse.ArgumentParser) -> None:
    p.add_argument(
        "--format", choices=("json", "csv", "text"), default="text", help="output format"
    )
    p.add_argument("--output", help="write output to this path instead of stdout")


def _add_limit_args(p: argparse.ArgumentParser, default_vertices: int) -> None:
    p.add_argument(
        "--limit-vertices",
        type=int,
        default=default_vertices,
        help="abort instances with more vertices than this",
    )
    p.add_argument(
        "--limit-seconds",
        type=float,
        default=None,
        help="abort searches running longer than this",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sepekr",
        description="Exact bounds and verification for intersecting families of separated sets.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", help="list the k-separated r-sets of a circle")
    _add_instance_args(p)
    _add_output_args(p)

    p = sub.add_parser("max-family", help="exact maximum intersecting family size")
    _add_instance_args(p)
    _add_limit_args(p, DEFAULT_MAX_VERTICES)
    _add_output_args(p)

    p = sub.add_parser("classes", help="maximum families up to circle symmetry")
    _add_instance_args(p)
    p.add_argument(
        "--rotations-only",
        action="store_true",
        help="identify families under rotations only, not reflections",
    )
    _add_limit_args(p, CLASS_MAX_VERTICES)
    _add_output_args(p)

    p = sub.add_parser("lemmas", help="run the compression verification suite")
    _add_instance_args(p)
    p.add_argument("--samples", type=int, default=200, help="random maximal families to check")
    p.add_argument("--seed", type=int, default=0, help="seed for the sampled families")
    _add_output_args(p)

    p = sub.add_parser("weighted", help="verify the weighted bound exactly")
    _add_instance_args(p)
    _add_limit_args(p, DEFAULT_MAX_VERTICES)
    _add_output_args(p)

    p = sub.add_parser("graph", help="build a disjointness graph and compute invariants")
    p.add_argument("--kind", choices=("kneser", "schrijver"), required=True)
    p.add_argument("--n", type=int, required=True, help="circle size")
    p.add_argument("--r", type=int, required=True, help="set size")
    p.add_argument("--k", type=int, default=1, help="separation parameter (schrijver only)")
    p.add_argument("--alpha", action="store_true", help="compute the independence number")
    p.add_argument("--chi", action="store_true", help="compute the chromatic number")
    p.add_argument("--dimacs", help="also write the graph to this path in DIMACS format")
    _add_limit_args(p, DEFAULT_MAX_VERTICES)
    _add_output_args(p)

    p = sub.add_parser("report", help="verify the bound across a parameter grid")
    p.add_argument("--grid", choices=("default", "quick"), default="default")
    p.add_argument(
        "--limit-seconds", type=float, default=None, help="per-row time budget"
    )
    _add_output_args(p)

    return parser


def _emit(args, payload: str) -> None:
    if not payload.endswith("\n"):
        payload += "\n"
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(payload)
    else:
        sys.stdout.write(payload)


def _json_dumps(data) -> str:
    return json.dumps(data, indent=2, sort_keys=False)


def _cmd_enumerate(args) -> int:
    family = enumerate_separated(args.n, args.r, args.k)
    if args.format == "json":
        _emit(args, _json_dumps(family.to_json_dict()))
    elif args.format == "csv":
        rows = ["elems"] + [" ".join(str(a) for a in s.elems) for s in family]
        _emit(args, "\n".join(rows))
    else:
        _emit(args, family.to_line())
    return EXIT_OK


def _cmd_max_family(args) -> int:
    result = max_intersecting(
        args.n,
        args.r,
        args.k,
        max_vertices=args.limit_vertices,
        time_limit=args.limit_seconds,
    )
    if args.format == "json":
        _emit(args, _json_dumps(result.to_json_dict()))
    elif args.format == "csv":
        _emit(
            args,
            "n,r,k,optimum,nodes\n"
            f"{result.n},{result.r},{result.k},{result.optimum},{result.nodes_explored}",
        )
    else:
        _emit(
            args,
            f"optimum {result.optimum}\nwitness {result.witness.to_line()}",
        )
    return EXIT_OK


def _cmd_classes(args) -> int:
    result = extremal_classes(
        args.n,
        args.r,
        args.k,
        rotations_only=args.rotations_only,
        max_vertices=args.limit_vertices,
        time_limit=args.limit_seconds,
    )
    if args.format == "json":
        _emit(args, _json_dumps(result.to_json_dict()))
    elif args.format == "csv":
        _emit(
            args,
            "n,r,k,optimum,classes,nodes\n"
            f"{result.n},{result.r},{result.k},{result.optimum},"
            f"{len(result.classes or ())},{result.nodes_explored}",
        )
    else:
        lines = [f"optimum {result.optimum}", f"classes {len(result.classes or ())}"]
        lines.extend(c.to_line() for c in result.classes or ())
        _emit(args, "\n".join(lines))
    return EXIT_OK


def _cmd_lemmas(args) -> int:
    rng = random.Random(f"{args.seed}:{args.n}:{args.r}:{args.k}")
    families = [star_family(args.n, args.r, args.k, 1)]
    for _ in range(args.samples):
        families.append(random_maximal_intersecting(args.n, args.r, args.k, rng))
    failures = []
    for family in families:
        report = verify_compression_suite(family)
        if not report.passed:
            failures.append((family, report))
    if args.format == "json":
        payload = {
            "n": args.n,
            "r": args.r,
            "k": args.k,
            "samples": args.samples,
            "seed": args.seed,
            "families_checked": len(families),
            "all_passed": not failures,
            "failures": [
                {"family": fam.to_json_dict(), "report": rep.to_json_dict()}
                for fam, rep in failures
            ],
        }
        _emit(args, _json_dumps(payload))
    else:
        lines = [
            f"checked {len(families)} intersecting families on n={args.n} r={args.r} k={args.k}"
        ]
        if failures:
            for fam, rep in failures:
                failed = ",".join(c.clause_id for c in rep.clauses if not c.passed)
                lines.append(f"FAIL [{failed}] {fam.to_line()}")
        else:
            lines.append("all clauses passed")
        _emit(args, "\n".join(lines))
    return EXIT_OK if not failures else EXIT_VERIFICATION_FAILED


def _cmd_weighted(args) -> int:
    report = verify_weighted_ekr(
        args.n,
        args.r,
        args.k,
        max_vertices=args.limit_vertices,
        time_limit=args.limit_seconds,
    )
    if args.format == "json":
        _emit(args, _json_dumps(report.to_json_dict()))
    elif args.format == "csv":
        _emit(
            args,
            "n,r,k,optimum,star_weight,binomial,pass\n"
            f"{report.n},{report.r},{report.k},{report.optimum},"
            f"{report.star_weight},{report.binomial},{str(report.passed).lower()}",
        )
    else:
        _emit(
            args,
            f"optimum {report.optimum}\nstar_weight {report.star_weight}\n"
            f"binomial {report.binomial}\npass {str(report.passed).lower()}",
        )
    return EXIT_OK if report.passed else EXIT_VERIFICATION_FAILED


def _cmd_graph(args) -> int:
    if args.kind == "kneser":
        graph = build_kneser(args.n, args.r, max_vertices=args.limit_vertices)
        k = 0
    else:
        graph = build_schrijver(args.n, args.r, args.k, max_vertices=args.limit_vertices)
        k = args.k
    alpha = (
        independence_number(graph, time_limit=args.limit_seconds) if args.alpha else None
    )
    chi = chromatic_number(graph) if args.chi else None
    if args.dimacs:
        export_dimacs(graph, args.dimacs)
    if args.format == "json":
        payload = {
            "kind": args.kind,
            "n": args.n,
            "r": args.r,
            "k": k,
            "num_vertices": graph.num_vertices,
            "num_edges": graph.num_edges,
        }
        if alpha is not None:
            payload["alpha"] = alpha
        if chi is not None:
            payload["chi"] = chi
        payload.update(graph.to_json_dict())
        _emit(args, _json_dumps(payload))
    else:
        lines = [
            f"{args.kind} n={args.n} r={args.r} k={k}: "
            f"{graph.num_vertices} vertices, {graph.num_edges} edges"
        ]
        if alpha is not None:
            lines.append(f"alpha {alpha}")
        if chi is not None:
            lines.append(f"chi {chi}")
        _emit(args, "\n".join(lines))
    return EXIT_OK


def default_grid() -> list[tuple[int, int, int, bool]]:
    """Rows (n, r, k, with_classes) of the standard verification grid."""
    rows: list[tuple[int, int, int, bool]] = []
    for r in (2, 3, 4):
        for n in range(2 * r, 15):
            rows.append((n, r, 1, n <= 12))
    for r in (2, 3):
        for n in range(3 * r, 16):
            rows.append((n, r, 2, n <= 14))
    for n in range(8, 17):
        rows.append((n, 2, 3, False))
    return rows


def quick_grid() -> list[tuple[int, int, int, bool]]:
    return [(n, 2, 1, True) for n in range(4, 9)]


def _cmd_report(args) -> int:
    rows = default_grid() if args.grid == "default" else quick_grid()
    started = time.monotonic()
    out_rows = []
    all_ok = True
    for n, r, k, with_classes in rows:
        formula = star_size_formula(n, r, k)
        if with_classes:
            result = extremal_classes(
                n, r, k, max_vertices=DEFAULT_MAX_VERTICES, time_limit=args.limit_seconds
            )
            class_count: int | None = len(result.classes or ())
            multi_expected = k == 1 and n == 2 * r + 2
            class_ok: bool | None = (
                class_count > 1 if multi_expected else class_count == 1
            )
        else:
            result = max_intersecting(n, r, k, time_limit=args.limit_seconds)
            class_count = None
            class_ok = None
        match = result.optimum == formula
        all_ok = all_ok and match and class_ok is not False
        out_rows.append(
            {
                "n": n,
                "r": r,
                "k": k,
                "optimum": result.optimum,
                "formula": formula,
                "match": match,
                "classes": class_count,
                "class_ok": class_ok,
                "nodes": result.nodes_explored,
            }
        )
    elapsed = time.monotonic() - started
    if args.format == "json":
        _emit(args, _json_dumps({"grid": args.grid, "rows": out_rows, "all_verified": all_ok}))
    elif args.format == "csv":
        lines = ["n,r,k,optimum,formula,match,classes,class_ok,nodes"]
        for row in out_rows:
            lines.append(
                f"{row['n']},{row['r']},{row['k']},{row['optimum']},{row['formula']},"
                f"{str(row['match']).lower()},"
                f"{'' if row['classes'] is None else row['classes']},"
                f"{'' if row['class_ok'] is None else str(row['class_ok']).lower()},"
                f"{row['nodes']}"
            )
        _emit(args, "\n".join(lines))
    else:
        header = f"{'n':>3} {'r':>2} {'k':>2} {'optimum':>8} {'formula':>8} {'match':>6} {'classes':>8} {'nodes':>10}"
        lines = [header]
        for row in out_rows:
            classes = "-" if row["classes"] is None else str(row["classes"])
            lines.append(
                f"{row['n']:>3} {row['r']:>2} {row['k']:>2} {row['optimum']:>8} "
                f"{row['formula']:>8} {'ok' if row['match'] else 'FAIL':>6} "
                f"{classes:>8} {row['nodes']:>10}"
            )
        lines.append(f"verified {str(all_ok).lower()}")
        _emit(args, "\n".join(lines))
    print(f"grid completed in {elapsed:.1f}s", file=sys.stderr)
    return EXIT_OK if all_ok else EXIT_VERIFICATION_FAILED


_HANDLERS = {
    "enumerate": _cmd_enumerate,
    "max-family": _cmd_max_family,
    "classes": _cmd_classes,
    "lemmas": _cmd_lemmas,
    "weighted": _cmd_weighted,
    "graph": _cmd_graph,
    "report": _cmd_report,
}


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        _read_thread_env()
        return _HANDLERS[args.command](args)
    except ResourceLimitError as exc:
        print(f"resource limit: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
