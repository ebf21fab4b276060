"""Command-line surface.

One subcommand per operation, graphs supplied inline (--graph6) or from
a file/stdin (--input, graph6 or edge-list, autodetected), reports
emitted as JSON (schema-versioned), CSV, or plain text.  Every
invocation is deterministic: identical arguments produce byte-identical
output.  --threads and --seed are accepted for interface compatibility
and ignored, because all computations are exact and single-valued.

Exit status: 0 on success with all verifications passing, 1 on a
verification failure (a census violation, a bound that does not hold, a
construction that misses its target, a refused evaluation), 2 on usage
or input-format errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction
from typing import Optional, Sequence, Union

from .bounds import (BoundReport, LevDenominatorZero, closed_form_bound,
                     levenshtein_bound, rankin_bound, reference_params,
                     verify_code_lemma)
from .census import (EnumerationCapError, ExtremalConstructionError,
                     census_counts, construct_extremal, lemma_suite,
                     verify_conjecture, verify_m_inequalities)
from .exact import COS_REFERENCE, QSqrt2
from .formats import (FormatError, graph6_decode, graph6_encode,
                      parse_edge_list, parse_graph6, sniff_format)
from .graphs import (Graph, duplication_witness, min_removal_for_duplicates,
                     min_removal_for_rank_drop, neighborhood_symdiff, rank,
                     reduce_graph)

SCHEMA = 1


class _UsageError(Exception):
    """Bad arguments or bad input discovered after argparse."""


# ── argument plumbing ────────────────────────────────────────────


def _add_io_options(p: argparse.ArgumentParser, default_format: str) -> None:
    p.add_argument("--output", metavar="PATH", default=None,
                   help="write the report here instead of stdout")
    p.add_argument("--format", choices=("json", "csv", "text"),
                   default=default_format,
                   help=f"output format (default {default_format})")
    p.add_argument("--threads", type=int, metavar="N", default=None,
                   help="accepted and ignored; output is deterministic")
    p.add_argument("--seed", type=int, metavar="N", default=None,
                   help="accepted and ignored; output is deterministic")


def _add_graph_options(p: argparse.ArgumentParser) -> None:
    p.add_argument("--graph6", metavar="STR", default=None,
                   help="inline graph6 string")
    p.add_argument("--input", metavar="PATH", default=None,
                   help="graph file, '-' for stdin")
    p.add_argument("--input-format", choices=("auto", "graph6", "edges"),
                   default="auto", help="input format (default: autodetect)")


def _read_source(args: argparse.Namespace) -> str:
    if args.input == "-":
        return sys.stdin.read()
    with open(args.input, encoding="utf-8") as fh:
        return fh.read()


def _load_graphs(args: argparse.Namespace) -> list[Graph]:
    if (args.graph6 is None) == (args.input is None):
        raise _UsageError("supply exactly one of --graph6 or --input")
    if args.graph6 is not None:
        return [graph6_decode(args.graph6)]
    text = _read_source(args)
    fmt = args.input_format
    if fmt == "auto":
        fmt = sniff_format(text)
    if fmt == "edges":
        return [parse_edge_list(text)]
    graphs = parse_graph6(text)
    if not graphs:
        raise _UsageError("no graphs found in input")
    return graphs


def _load_one_graph(args: argparse.Namespace) -> Graph:
    graphs = _load_graphs(args)
    if len(graphs) != 1:
        raise _UsageError(f"expected exactly one graph, found {len(graphs)}")
    return graphs[0]


def _parse_cosine(text: str) -> Union[QSqrt2, Fraction]:
    if text == "s0":
        return COS_REFERENCE
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise _UsageError(
            f"cosine {text!r} not understood; use 's0' or a rational like -1/2"
        ) from None


# ── output plumbing ──────────────────────────────────────────────


def _emit(args: argparse.Namespace, payload: dict,
          text_lines: list[str],
          csv_header: Optional[list[str]] = None,
          csv_rows: Optional[list[list[object]]] = None) -> None:
    if args.format == "json":
        body = json.dumps({"schema": SCHEMA, **payload}, indent=2) + "\n"
    elif args.format == "csv":
        if csv_header is None or csv_rows is None:
            raise _UsageError(
                f"csv output is not available for '{args.command}'")
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(csv_header)
        writer.writerows(csv_rows)
        body = buf.getvalue()
    else:
        body = "\n".join(text_lines) + "\n"
    if args.output:
        with open(args.output, "w", encoding="utf-8", newline="") as fh:
            fh.write(body)
    else:
        sys.stdout.write(body)


def _bound_json(report: BoundReport) -> dict:
    return report.to_json(include_exact=True)


def _bound_csv_row(report: BoundReport) -> list[object]:
    return [report.n, report.method, report.value_decimal(),
            report.threshold_decimal() or "",
            "" if report.holds is None else report.holds,
            "" if report.k_used is None else report.k_used,
            report.branch_used or ""]


_BOUND_CSV_HEADER = ["n", "method", "value_decimal", "threshold_decimal",
                     "holds", "k", "branch"]


def _bound_text(report: BoundReport) -> str:
    bits = [f"n={report.n}", report.method, report.value_decimal()]
    if report.threshold is not None:
        bits.append(f"threshold={report.threshold_decimal()}")
        bits.append(f"holds={report.holds}")
    if report.k_used is not None:
        bits.append(f"k={report.k_used}")
    if report.branch_used is not None:
        bits.append(f"branch={report.branch_used}")
    return " ".join(bits)


def _emit_bound_list(args: argparse.Namespace, command: str,
                     reports: list[BoundReport]) -> int:
    all_hold = all(r.holds for r in reports if r.holds is not None)
    payload = {"command": command,
               "reports": [_bound_json(r) for r in reports],
               "all_hold": all_hold}
    lines = [_bound_text(r) for r in reports]
    lines.append(f"all hold: {all_hold}")
    _emit(args, payload, lines, _BOUND_CSV_HEADER,
          [_bound_csv_row(r) for r in reports])
    return 0 if all_hold else 1


# ── scalar graph commands ────────────────────────────────────────


def _cmd_rank(args: argparse.Namespace) -> int:
    g = _load_one_graph(args)
    value = rank(g)
    _emit(args, {"command": "rank", "order": g.n, "rank": value},
          [str(value)], ["order", "rank"], [[g.n, value]])
    return 0


def _cmd_reduce(args: argparse.Namespace) -> int:
    g = _load_one_graph(args)
    reduced = reduce_graph(g)
    g6 = graph6_encode(reduced)
    _emit(args, {"command": "reduce", "input_order": g.n,
                 "order": reduced.n, "rank": rank(reduced), "graph6": g6},
          [g6], ["input_order", "order", "rank", "graph6"],
          [[g.n, reduced.n, rank(reduced), g6]])
    return 0


def _cmd_tau(args: argparse.Namespace) -> int:
    g = _load_one_graph(args)
    value = min_removal_for_duplicates(g)
    _emit(args, {"command": "tau", "order": g.n, "tau": value},
          [str(value)], ["order", "tau"], [[g.n, value]])
    return 0


def _cmd_rho(args: argparse.Namespace) -> int:
    g = _load_one_graph(args)
    value = min_removal_for_rank_drop(g)
    _emit(args, {"command": "rho", "order": g.n, "rho": value},
          [str(value)], ["order", "rho"], [[g.n, value]])
    return 0


def _cmd_delta(args: argparse.Namespace) -> int:
    g = _load_one_graph(args)
    diff = neighborhood_symdiff(g, args.u, args.v)
    _emit(args, {"command": "delta", "u": args.u, "v": args.v,
                 "vertices": list(diff), "size": len(diff)},
          [str(len(diff))], ["u", "v", "size", "vertices"],
          [[args.u, args.v, len(diff), " ".join(map(str, diff))]])
    return 0


def _cmd_witness(args: argparse.Namespace) -> int:
    g = _load_one_graph(args)
    w = duplication_witness(g)
    payload = {
        "command": "witness",
        "pair": list(w.pair),
        "removed": list(w.removed),
        "classes": [list(c) for c in w.classes],
        "oriented": None if w.oriented is None else [list(p) for p in w.oriented],
        "t1": None if w.t1 is None else list(w.t1),
        "t2": None if w.t2 is None else list(w.t2),
        "isolated": w.isolated,
        "split_ok": w.split_ok,
    }
    lines = [f"pair: {w.pair[0]} {w.pair[1]}",
             f"removed: {' '.join(map(str, w.removed)) or '-'}",
             f"classes: {'; '.join(' '.join(map(str, c)) for c in w.classes)}",
             f"split_ok: {w.split_ok}"]
    if w.split_ok:
        lines.append(f"t1: {' '.join(map(str, w.t1)) or '-'}")
        lines.append(f"t2: {' '.join(map(str, w.t2)) or '-'}")
    _emit(args, payload, lines,
          ["pair", "removed", "classes", "t1", "t2", "split_ok"],
          [[" ".join(map(str, w.pair)), " ".join(map(str, w.removed)),
            ";".join(" ".join(map(str, c)) for c in w.classes),
            "" if w.t1 is None else " ".join(map(str, w.t1)),
            "" if w.t2 is None else " ".join(map(str, w.t2)), w.split_ok]])
    return 0


# ── bound commands ───────────────────────────────────────────────


def _cmd_bounds(args: argparse.Namespace) -> int:
    n = args.n
    reports = []
    if n >= 3:
        reports.append(levenshtein_bound(n, COS_REFERENCE))
    if n >= 6:
        params = reference_params(n)
        reports.append(closed_form_bound(n, params))
        reports.append(rankin_bound(n, "acute", params))
    if not reports:
        raise _UsageError("no bound applies below dimension 3")
    payload = {"command": "bounds", "n": n, "cosine": "s0",
               "reports": [_bound_json(r) for r in reports]}
    _emit(args, payload, [_bound_text(r) for r in reports],
          _BOUND_CSV_HEADER, [_bound_csv_row(r) for r in reports])
    return 0


def _cmd_lev(args: argparse.Namespace) -> int:
    s = _parse_cosine(args.s)
    report = levenshtein_bound(args.n, s)
    _emit(args, {"command": "lev", "s": args.s, **_bound_json(report)},
          [_bound_text(report)], _BOUND_CSV_HEADER, [_bound_csv_row(report)])
    return 0


def _cmd_rankin(args: argparse.Namespace) -> int:
    case = {"half_pi": "exactly_half_pi", "obtuse": "obtuse",
            "acute": "acute"}[args.case]
    params = reference_params(args.n) if case == "acute" else None
    report = rankin_bound(args.n, case, params)
    _emit(args, {"command": "rankin", "case": args.case, **_bound_json(report)},
          [_bound_text(report)], _BOUND_CSV_HEADER, [_bound_csv_row(report)])
    return 0


def _cmd_lemma5(args: argparse.Namespace) -> int:
    reports = verify_code_lemma(args.start, args.end, -4)
    return _emit_bound_list(args, "lemma5", reports)


def _cmd_lemma8(args: argparse.Namespace) -> int:
    reports = verify_code_lemma(args.start, args.end, 2)
    return _emit_bound_list(args, "lemma8", reports)


# ── enumeration commands ─────────────────────────────────────────


def _cmd_census(args: argparse.Namespace) -> int:
    rows = census_counts(args.max_order)
    payload = {"command": "census",
               "rows": [{"order": o, "total_graphs": t, "reduced_graphs": r}
                        for o, t, r in rows]}
    _emit(args, payload,
          [f"order {o}: {t} graphs, {r} reduced" for o, t, r in rows],
          ["order", "total_graphs", "reduced_graphs"],
          [list(row) for row in rows])
    return 0


def _cmd_conjecture(args: argparse.Namespace) -> int:
    stream = None
    if args.input is not None:
        text = _read_source(args)
        stream = parse_graph6(text)
    summary = verify_conjecture(args.max_order, graphs=stream)
    payload = {"command": "conjecture", **summary.to_json()}
    lines = []
    for rep in summary.reports:
        ranks = ", ".join(f"rank {r} -> order {o}"
                          for r, o in rep.per_rank_max_order) or "-"
        lines.append(f"order {rep.order}: {rep.total_graphs} graphs, "
                     f"{rep.reduced_graphs} reduced, {ranks}")
    lines.append(f"violations: {len(summary.violations)}")
    lines.append(f"covered ranks: "
                 f"{' '.join(map(str, summary.covered_ranks)) or '-'}")
    lines.append(f"holds: {summary.holds}")
    _emit(args, payload, lines,
          ["order", "total_graphs", "reduced_graphs", "violations"],
          [[r.order, r.total_graphs, r.reduced_graphs,
            ";".join(r.violations)] for r in summary.reports])
    return 0 if summary.holds else 1


def _cmd_extremal(args: argparse.Namespace) -> int:
    g = construct_extremal(args.rank)
    g6 = graph6_encode(g)
    _emit(args, {"command": "extremal", "rank": args.rank, "order": g.n,
                 "reduced": True, "graph6": g6},
          [g6], ["rank", "order", "graph6"], [[args.rank, g.n, g6]])
    return 0


def _cmd_mineq(args: argparse.Namespace) -> int:
    report = verify_m_inequalities(args.r_max)
    payload = {"command": "mineq", **report.to_json()}
    lines = [f"recurrence checks: {report.recurrence_checks}",
             f"family (i) checks: {report.family_i_checks}",
             f"family (ii) checks: {report.family_ii_checks}",
             f"failures: {len(report.failures)}",
             f"holds: {report.holds}"]
    _emit(args, payload, lines,
          ["r_max", "recurrence_checks", "family_i_checks",
           "family_ii_checks", "failures", "holds"],
          [[report.r_max, report.recurrence_checks, report.family_i_checks,
            report.family_ii_checks, len(report.failures), report.holds]])
    return 0 if report.holds else 1


def _cmd_lemmas(args: argparse.Namespace) -> int:
    report = lemma_suite(args.max_order)
    payload = {"command": "lemmas", **report.to_json()}
    lines = [f"reduced graphs processed: {report.graphs_processed}"]
    lines.extend(f"{c.name}: {c.passed}/{c.run}" for c in report.checks)
    lines.append(f"holds: {report.holds}")
    _emit(args, payload, lines,
          ["check", "run", "passed"],
          [[c.name, c.run, c.passed] for c in report.checks])
    return 0 if report.holds else 1


# ── entry point ──────────────────────────────────────────────────


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="redrank",
        description="Exact rank, reducedness, and order-bound toolkit "
                    "for graphs, with certified spherical-code bounds.")
    sub = parser.add_subparsers(dest="command", required=True)

    def graph_cmd(name: str, helptext: str, default_format: str = "text"):
        p = sub.add_parser(name, help=helptext)
        _add_graph_options(p)
        _add_io_options(p, default_format)
        return p

    def plain_cmd(name: str, helptext: str, default_format: str = "json"):
        p = sub.add_parser(name, help=helptext)
        _add_io_options(p, default_format)
        return p

    graph_cmd("rank", "exact adjacency-matrix rank over the rationals")
    graph_cmd("reduce", "remove isolated and duplicated vertices")
    graph_cmd("tau", "minimum removals creating a duplicated pair")
    graph_cmd("rho", "minimum removals dropping the rank")
    p = graph_cmd("delta", "neighborhood symmetric difference of a pair")
    p.add_argument("--u", type=int, required=True)
    p.add_argument("--v", type=int, required=True)
    graph_cmd("witness", "duplication witness with the two-sided split",
              default_format="json")

    p = plain_cmd("bounds", "all applicable bounds at the reference cosine")
    p.add_argument("--n", type=int, required=True, help="dimension")
    p = plain_cmd("lev", "Levenshtein bound at a cosine")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--s", default="s0",
                   help="cosine: 's0' or a rational like -1/2 (default s0)")
    p = plain_cmd("rankin", "Rankin bound by angle regime")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--case", choices=("half_pi", "obtuse", "acute"),
                   required=True)
    p = plain_cmd("lemma5", "threshold sweep against 5*2^((n-4)/2)-2")
    p.add_argument("--from", dest="start", type=int, default=47)
    p.add_argument("--to", dest="end", type=int, default=118)
    p = plain_cmd("lemma8", "threshold sweep against 5*2^((n+2)/2)-2")
    p.add_argument("--from", dest="start", type=int, default=3)
    p.add_argument("--to", dest="end", type=int, default=118)

    p = plain_cmd("census", "isomorphism class counts per order")
    p.add_argument("--max-order", type=int, required=True)
    p = plain_cmd("conjecture", "verify order <= m(rank) over a census")
    p.add_argument("--max-order", type=int, required=True)
    p.add_argument("--input", metavar="PATH", default=None,
                   help="verify an external graph6 stream instead of "
                        "the internal generator ('-' for stdin)")
    p = plain_cmd("extremal", "construct a reduced graph of rank r and "
                              "the conjectured maximum order")
    p.add_argument("--rank", type=int, required=True)
    p = plain_cmd("mineq", "exhaustive max-order inequality check")
    p.add_argument("--r-max", type=int, default=60)
    p = plain_cmd("lemmas", "per-graph property suite over a census")
    p.add_argument("--max-order", type=int, default=7)
    return parser


_HANDLERS = {
    "rank": _cmd_rank,
    "reduce": _cmd_reduce,
    "tau": _cmd_tau,
    "rho": _cmd_rho,
    "delta": _cmd_delta,
    "witness": _cmd_witness,
    "bounds": _cmd_bounds,
    "lev": _cmd_lev,
    "rankin": _cmd_rankin,
    "lemma5": _cmd_lemma5,
    "lemma8": _cmd_lemma8,
    "census": _cmd_census,
    "conjecture": _cmd_conjecture,
    "extremal": _cmd_extremal,
    "mineq": _cmd_mineq,
    "lemmas": _cmd_lemmas,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return _HANDLERS[args.command](args)
    except (_UsageError, FormatError, EnumerationCapError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ExtremalConstructionError, LevDenominatorZero) as exc:
        print(f"verification failure: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
