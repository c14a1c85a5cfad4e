"""Command-line front end.

Exit codes: 0 success, 1 usage/parse/resource errors, 2 when a checked
bound is violated (the report then carries a graph6 witness).  Output
is deterministic for a fixed config including the seed, and every
report carries the tool version plus the fully resolved config.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from . import __version__
from .extremal import (
    StabilityParams,
    band_violation,
    extremal_degree_sum_local_search,
    extremal_degree_sum_min,
    record_to_dict,
    records_to_csv,
    scan_m,
    stability_experiment,
    stability_report_to_csv,
    stability_report_to_dict,
    verify_all,
    verify_report_to_dict,
)
from .graph6 import Graph6ParseError, load_graph_text
from .graphs import ResourceLimitError
from .greedy import DEFAULT_BRANCH_CAP, all_greedy_sequences, greedy_sequence
from .cliques import max_clique_degree_sum
from .turan import turan_decomposition

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_VIOLATION = 2


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cliquedeg",
        description="Clique degree sums: greedy construction, exact extremal scans, "
        "and balanced multipartite graph arithmetic.",
    )
    parser.add_argument("--version", action="version", version=f"cliquedeg {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_output_flags(p):
        p.add_argument("--format", choices=["json", "csv", "text"], default="text")
        p.add_argument("--out", default=None, help="output path (default: stdout)")

    p = sub.add_parser("turan", help="balanced r-partite part sizes and edge count")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    add_output_flags(p)

    p = sub.add_parser("greedy", help="run the greedy clique construction on a graph file")
    p.add_argument("--input", required=True, help="graph6 or edge-list file")
    p.add_argument("--all-branches", action="store_true", help="enumerate every tie branch")
    p.add_argument("--branch-cap", type=int, default=DEFAULT_BRANCH_CAP)
    add_output_flags(p)

    p = sub.add_parser("delta", help="max degree sum over r-cliques of a graph file")
    p.add_argument("--input", required=True)
    p.add_argument("--r", type=int, required=True)
    add_output_flags(p)

    p = sub.add_parser("extremal", help="minimum over all (n,m)-graphs of the max r-clique degree sum")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--mode", choices=["exhaustive", "canonical", "local-search"], default="exhaustive")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--restarts", type=int, default=4)
    p.add_argument("--iter-budget", type=int, default=200)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--max-graphs", type=int, default=None)
    add_output_flags(p)

    p = sub.add_parser("scan", help="one extremal record per edge count in a range")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--m-from", type=int, required=True)
    p.add_argument("--m-to", type=int, required=True)
    p.add_argument("--mode", choices=["exhaustive", "canonical", "local-search"], default="exhaustive")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--restarts", type=int, default=4)
    p.add_argument("--iter-budget", type=int, default=200)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--max-graphs", type=int, default=None)
    add_output_flags(p)

    p = sub.add_parser("stability", help="ratio table over the window just below the threshold")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--epsilon", required=True, help="exact rational, e.g. 1/4")
    p.add_argument("--mode", choices=["exhaustive", "canonical", "local-search"], default="exhaustive")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--restarts", type=int, default=4)
    p.add_argument("--iter-budget", type=int, default=200)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--max-graphs", type=int, default=None)
    add_output_flags(p)

    p = sub.add_parser("verify", help="exhaustive greedy and band checks over all small graphs")
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--r", required=True, help="comma-separated clique sizes, e.g. 2,3")
    p.add_argument("--mode", choices=["exhaustive", "canonical"], default="exhaustive")
    p.add_argument("--max-graphs", type=int, default=None)
    add_output_flags(p)

    return parser


def _resolved_config(args: argparse.Namespace) -> dict:
    return {k: v for k, v in sorted(vars(args).items())}


def _emit(text: str, out: str | None):
    if out is None:
        sys.stdout.write(text)
    else:
        Path(out).write_text(text, encoding="utf-8")


def _emit_json(result, args: argparse.Namespace):
    envelope = {
        "tool": "cliquedeg",
        "version": __version__,
        "config": _resolved_config(args),
        "result": result,
    }
    _emit(json.dumps(envelope, indent=2, sort_keys=True) + "\n", args.out)


def _audit_line(args: argparse.Namespace) -> str:
    return (
        f"# cliquedeg {__version__} config="
        + json.dumps(_resolved_config(args), sort_keys=True, separators=(",", ":"))
        + "\n"
    )


def _emit_csv(body: str, args: argparse.Namespace):
    _emit(_audit_line(args) + body, args.out)


def _emit_text(lines: list[str], args: argparse.Namespace):
    head = f"cliquedeg {__version__} | " + json.dumps(
        _resolved_config(args), sort_keys=True, separators=(",", ":")
    )
    _emit("\n".join([head] + lines) + "\n", args.out)


def _cmd_turan(args) -> int:
    dec = turan_decomposition(args.r, args.n)
    if args.format == "json":
        _emit_json(
            {"r": dec.r, "n": dec.n, "t": dec.t, "parts": list(dec.parts), "s": dec.s}, args
        )
    elif args.format == "csv":
        body = "r,n,t,s,parts\n" + f"{dec.r},{dec.n},{dec.t},{dec.s},{' '.join(map(str, dec.parts))}\n"
        _emit_csv(body, args)
    else:
        parts = "[" + ",".join(map(str, dec.parts)) + "]"
        _emit_text([f"t={dec.t} parts={parts}"], args)
    return EXIT_OK


def _load_input(path: str):
    return load_graph_text(Path(path).read_text(encoding="utf-8"))


def _cmd_greedy(args) -> int:
    g = _load_input(args.input)
    if args.all_branches:
        seqs = all_greedy_sequences(g, branch_cap=args.branch_cap)
        result = {
            "n": g.n,
            "m": g.m,
            "count": len(seqs),
            "sequences": [
                {"vertices": list(s.vertices), "degree_sums": list(s.degree_sums)}
                for s in seqs
            ],
        }
        lines = [f"sequences={len(seqs)}"] + [
            f"vertices={list(s.vertices)} degree_sums={list(s.degree_sums)}" for s in seqs
        ]
    else:
        s = greedy_sequence(g)
        result = {
            "n": g.n,
            "m": g.m,
            "vertices": list(s.vertices),
            "degree_sums": list(s.degree_sums),
            "tie_policy": s.tie_policy,
        }
        lines = [f"vertices={list(s.vertices)} degree_sums={list(s.degree_sums)}"]
    if args.format == "json":
        _emit_json(result, args)
    elif args.format == "csv":
        body = "length,vertices,degree_sums\n"
        seqs = result.get("sequences", [result])
        for s in seqs:
            body += (
                f"{len(s['vertices'])},{' '.join(map(str, s['vertices']))},"
                f"{' '.join(map(str, s['degree_sums']))}\n"
            )
        _emit_csv(body, args)
    else:
        _emit_text(lines, args)
    return EXIT_OK


def _cmd_delta(args) -> int:
    g = _load_input(args.input)
    res = max_clique_degree_sum(g, args.r)
    witness = sorted(res.witness.members) if res.witness is not None else None
    result = {"n": g.n, "m": g.m, "r": res.r, "value": res.value, "witness": witness}
    if args.format == "json":
        _emit_json(result, args)
    elif args.format == "csv":
        wit = " ".join(map(str, witness)) if witness is not None else ""
        _emit_csv(f"n,m,r,value,witness\n{g.n},{g.m},{res.r},{res.value},{wit}\n", args)
    else:
        _emit_text([f"value={res.value} witness={witness}"], args)
    return EXIT_OK


def _records_exit(records) -> int:
    return EXIT_VIOLATION if any(band_violation(rec) for rec in records) else EXIT_OK


def _emit_records(records, args) -> int:
    if args.format == "json":
        _emit_json([record_to_dict(rec) for rec in records], args)
    elif args.format == "csv":
        _emit_csv(records_to_csv(records), args)
    else:
        lines = []
        for rec in records:
            lines.append(
                f"n={rec.n} m={rec.m} r={rec.r} mode={rec.mode} delta_min={rec.delta_min} "
                f"bound={rec.ratio_num}/{rec.ratio_den} witness={rec.witness_g6} "
                f"graphs={rec.graphs_examined} regime={rec.regime}"
            )
        for rec in records:
            problem = band_violation(rec)
            if problem:
                lines.append(f"VIOLATION n={rec.n} m={rec.m} r={rec.r}: {problem}")
        _emit_text(lines, args)
    return _records_exit(records)


def _cmd_extremal(args) -> int:
    if args.mode == "local-search":
        rec = extremal_degree_sum_local_search(
            args.n, args.m, args.r, seed=args.seed, restarts=args.restarts,
            iter_budget=args.iter_budget,
        )
    else:
        rec = extremal_degree_sum_min(
            args.n, args.m, args.r, mode=args.mode, workers=args.workers,
            max_graphs=args.max_graphs,
        )
    return _emit_records([rec], args)


def _cmd_scan(args) -> int:
    records = scan_m(
        args.n, args.r, args.m_from, args.m_to, mode=args.mode, seed=args.seed,
        restarts=args.restarts, iter_budget=args.iter_budget, workers=args.workers,
        max_graphs=args.max_graphs,
    )
    return _emit_records(records, args)


def _cmd_stability(args) -> int:
    params = StabilityParams(epsilon=Fraction(args.epsilon), r=args.r, n=args.n)
    rep = stability_experiment(
        params, mode=args.mode, seed=args.seed, restarts=args.restarts,
        iter_budget=args.iter_budget, workers=args.workers, max_graphs=args.max_graphs,
    )
    if args.format == "json":
        _emit_json(stability_report_to_dict(rep), args)
    elif args.format == "csv":
        _emit_csv(stability_report_to_csv(rep), args)
    else:
        lines = [
            f"r={rep.r} n={rep.n} epsilon={rep.epsilon_num}/{rep.epsilon_den} "
            f"delta={rep.delta_num}/{rep.delta_den} window=({rep.m_threshold},{rep.m_upper}]"
        ]
        for row in rep.rows:
            lines.append(
                f"m={row.m} delta_min={row.delta_min} ratio={row.ratio_num}/{row.ratio_den} "
                f"({row.ratio_decimal}) exceeds={row.exceeds_threshold}"
            )
        _emit_text(lines, args)
    return EXIT_OK


def _cmd_verify(args) -> int:
    r_set = [int(tok) for tok in args.r.split(",") if tok.strip()]
    rep = verify_all(args.n_max, r_set, mode=args.mode, max_graphs=args.max_graphs)
    if args.format == "json":
        _emit_json(verify_report_to_dict(rep), args)
    elif args.format == "csv":
        body = "n_max,r_set,mode,graphs_examined,cells,violations,cap_skips\n"
        body += (
            f"{rep.n_max},{' '.join(map(str, rep.r_set))},{rep.mode},"
            f"{rep.graphs_examined},{rep.cells},{rep.violations},{rep.cap_skips}\n"
        )
        _emit_csv(body, args)
    else:
        lines = [
            f"graphs_examined={rep.graphs_examined} cells={rep.cells} "
            f"violations={rep.violations} cap_skips={rep.cap_skips}"
        ]
        for ce in rep.counterexamples:
            lines.append(f"VIOLATION {ce}")
        _emit_text(lines, args)
    return EXIT_VIOLATION if rep.violations else EXIT_OK


_HANDLERS = {
    "turan": _cmd_turan,
    "greedy": _cmd_greedy,
    "delta": _cmd_delta,
    "extremal": _cmd_extremal,
    "scan": _cmd_scan,
    "stability": _cmd_stability,
    "verify": _cmd_verify,
}


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors; remap to the general error code
        return EXIT_ERROR if exc.code else EXIT_OK
    try:
        return _HANDLERS[args.command](args)
    except (ValueError, Graph6ParseError, ResourceLimitError, OSError) as exc:
        print(f"cliquedeg: error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
