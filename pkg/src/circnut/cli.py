"""Command-line interface.

Every numeric output is exact: integers or integer-coefficient
polynomials in the canonical rendering.  The only floating-point value in
the program (the analytic scan bound) is never emitted here.  Commands
print JSON or plain text on stdout and use exit codes 0 (success),
1 (violated precondition, with a JSON error object) and 2 (usage).

Long scans stream NDJSON, one record per completed t, so an interrupted
run can be resumed with --resume-from.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ThreadPoolExecutor

from . import search, theory
from .circulant import (
    APPENDIX_B,
    GeneratorSet,
    NutVerdict,
    UniversalityReport,
    appendix_table,
    is_nut,
    is_universal,
    pstar_table,
    zero_multiplicity,
)
from .cyclotomic import cyclotomic
from .oracle import adjacency, check_order_cap, enumerate_balanced, kernel


def _parse_set(text: str) -> GeneratorSet:
    try:
        items = [int(part) for part in text.split(",") if part.strip() != ""]
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"expected comma-separated integers, got {text!r}"
        )
    if not items:
        raise argparse.ArgumentTypeError("generator set is empty")
    if any(s < 1 for s in items):
        raise argparse.ArgumentTypeError("generators must be >= 1")
    if len(set(items)) != len(items):
        raise argparse.ArgumentTypeError("duplicate generators rejected")
    return GeneratorSet.of(items)


def _emit(doc) -> None:
    print(json.dumps(doc))


def _set_json(s: GeneratorSet) -> list[int]:
    return list(s.elements)


def _report_json(report: UniversalityReport) -> dict:
    return {
        "universal": report.universal,
        "degree_bound": report.degree_bound,
        "min_order": report.min_order,
        "scanned_b": list(report.scanned_b),
        "failing_b": list(report.failing_b),
    }


def _verdict_json(n: int, s: GeneratorSet, verdict: NutVerdict) -> dict:
    doc = {
        "order": n,
        "set": _set_json(s),
        "is_nut": verdict.is_nut,
        "reason": verdict.reason,
    }
    if verdict.witness_b is not None:
        doc["witness_b"] = verdict.witness_b
    if n % 2 == 0 and 2 * s.top <= n:
        doc["zero_multiplicity"] = zero_multiplicity(s, n)
    else:
        doc["zero_multiplicity"] = None
    return doc


def _cmd_nut_check(args) -> int:
    _emit(_verdict_json(args.order, args.set, is_nut(args.set, args.order)))
    return 0


def _cmd_oracle(args) -> int:
    check_order_cap(args.order)
    result = kernel(adjacency(args.order, args.set))
    _emit(
        {
            "order": args.order,
            "set": _set_json(args.set),
            "nullity": result.nullity,
            "kernel_basis": [list(v) for v in result.basis],
            "is_nut": result.nullity == 1 and result.full_support,
        }
    )
    return 0


def _exhaust_one(order: int, s: GeneratorSet) -> dict:
    result = kernel(adjacency(order, s))
    return {
        "set": _set_json(s),
        "nullity": result.nullity,
        "is_nut": result.nullity == 1 and result.full_support,
    }


def _cmd_exhaust(args) -> int:
    check_order_cap(args.order)
    sets = enumerate_balanced(args.order, args.t)
    if args.jobs > 1:
        with ThreadPoolExecutor(max_workers=args.jobs) as pool:
            records = list(pool.map(lambda s: _exhaust_one(args.order, s), sets))
    else:
        records = [_exhaust_one(args.order, s) for s in sets]
    _emit(records)
    return 0


def _cmd_universal(args) -> int:
    report = is_universal(args.set)
    doc = {"set": _set_json(args.set)}
    doc.update(_report_json(report))
    _emit(doc)
    return 0


def _cmd_cyclotomic(args) -> int:
    print(cyclotomic(args.b).render())
    return 0


def _table_lines(rows, fmt: str, left_header: str) -> list[str]:
    if fmt == "text":
        return [f"{key}: {poly.render()}" for key, poly in rows]
    lines = [
        "\\begin{tabular}{rl}",
        "\\toprule",
        f"{left_header} & remainder \\\\",
        "\\midrule",
    ]
    lines += [f"{key} & ${poly.render()}$ \\\\" for key, poly in rows]
    lines += ["\\bottomrule", "\\end{tabular}"]
    return lines


def _cmd_pstar_table(args) -> int:
    rows = pstar_table(args.set)
    print("\n".join(_table_lines(rows, args.format, "$b$")))
    return 0


def _cmd_appendix_table(args) -> int:
    rows = appendix_table(args.b)
    lines = _table_lines(rows, args.format, f"$t \\bmod {args.b}$")
    if args.b not in APPENDIX_B:
        note = f"extension: b={args.b} is outside the standard table set"
        lines.insert(0, f"% {note}" if args.format == "latex" else f"# {note}")
    print("\n".join(lines))
    return 0


def _cmd_predicate(args) -> int:
    if args.kind == "thm3":
        value = theory.consecutive_is_nut(args.n, args.x, args.t)
        doc = {"predicate": "thm3", "n": args.n, "x": args.x, "t": args.t}
    else:
        value = theory.gap_set_obstruction(args.t, args.n)
        doc = {"predicate": "lemma5", "t": args.t, "n": args.n}
    doc["value"] = value
    _emit(doc)
    return 0


def _cmd_claim1(args) -> int:
    exponent = theory.unique_residue_exponent(args.t, args.p)
    _emit({"t": args.t, "p": args.p, "unique_exponent": exponent})
    return 0


def _cmd_lemma7(args) -> int:
    order = 4 * args.t + 4
    holds = theory.no_nut_at_minimal_order(
        args.t, allow_large=args.allow_large
    )
    _emit(
        {
            "t": args.t,
            "order": order,
            "sets_checked": len(enumerate_balanced(order, args.t)),
            "holds": holds,
        }
    )
    return 0


def _candidate_json(candidate: search.UniversalCandidate) -> dict:
    return {
        "removed": list(candidate.removed),
        "set": _set_json(candidate.generators),
        "report": _report_json(candidate.report),
    }


def _cmd_find_pt(args) -> int:
    candidate = search.find_pt(args.t)
    if candidate is None:
        _emit({"t": args.t, "p": None})
    else:
        doc = {"t": args.t, "p": candidate.removed[0]}
        doc.update(_candidate_json(candidate))
        _emit(doc)
    return 0


def _cmd_find_qr(args) -> int:
    mode = "all" if args.all else "first"
    pairs = [
        dict(q=c.removed[0], r=c.removed[1], **_candidate_json(c))
        for c in search.find_qt_rt(args.t, mode)
    ]
    _emit({"t": args.t, "pairs": pairs})
    return 0


def _scan_record_json(record: search.ScanRecord) -> dict:
    doc = {"t": record.t, "applicable": record.applicable}
    if record.candidate is None:
        doc["found"] = False
    else:
        doc["found"] = True
        doc.update(_candidate_json(record.candidate))
    return doc


def _scan_latex_row(record: search.ScanRecord) -> str:
    c = record.candidate
    if c is None:
        return f"{record.t} & (none found) \\\\"
    if record.t % 2 and c.removed == (record.t,):
        return f"{record.t} & $S_{{{record.t}}}$ \\\\"
    top = 2 * c.t + 1 if c.t % 2 else 2 * c.t + 2
    removed = ",".join(str(x) for x in c.removed)
    return (
        f"{record.t} & $\\{{1,\\dots,{top}\\}}"
        f"\\setminus\\{{{removed}\\}}$ \\\\"
    )


def _cmd_scan(args) -> int:
    t_lo = max(args.t_from, args.resume_from) if args.resume_from else args.t_from
    width = max(args.jobs, 1)
    t = t_lo
    while t <= args.t_to:
        # Work a window of `jobs` values of t, then stream them in order.
        hi = min(t + width - 1, args.t_to)
        for record in search.scan_range(t, hi, parallel_width=width):
            if args.format == "latex":
                print(_scan_latex_row(record), flush=True)
            else:
                print(json.dumps(_scan_record_json(record)), flush=True)
        t = hi + 1
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="circnut",
        description="Exact certification of circulant nut graphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("nut-check", help="nut verdict for a fixed order")
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--set", type=_parse_set, required=True)
    p.set_defaults(func=_cmd_nut_check)

    p = sub.add_parser("oracle", help="exact kernel of the adjacency matrix")
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--set", type=_parse_set, required=True)
    p.set_defaults(func=_cmd_oracle)

    p = sub.add_parser("exhaust", help="kernel of every balanced set")
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=_cmd_exhaust)

    p = sub.add_parser("universal", help="certify a set for all even orders")
    p.add_argument("--set", type=_parse_set, required=True)
    p.set_defaults(func=_cmd_universal)

    p = sub.add_parser("cyclotomic", help="print a cyclotomic polynomial")
    p.add_argument("b", type=int)
    p.set_defaults(func=_cmd_cyclotomic)

    p = sub.add_parser("pstar-table", help="remainder table for a set")
    p.add_argument("--set", type=_parse_set, required=True)
    p.add_argument("--format", choices=("text", "latex"), default="text")
    p.set_defaults(func=_cmd_pstar_table)

    p = sub.add_parser("appendix-table", help="per-residue remainder table")
    p.add_argument("--b", type=int, required=True)
    p.add_argument("--format", choices=("text", "latex"), default="text")
    p.set_defaults(func=_cmd_appendix_table)

    p = sub.add_parser("predicate", help="closed-form nut predicates")
    kinds = p.add_subparsers(dest="kind", required=True)
    thm3 = kinds.add_parser("thm3", help="consecutive-run criterion")
    thm3.add_argument("--n", type=int, required=True)
    thm3.add_argument("--x", type=int, required=True)
    thm3.add_argument("--t", type=int, required=True)
    thm3.set_defaults(func=_cmd_predicate)
    lemma5 = kinds.add_parser("lemma5", help="gap-set obstruction")
    lemma5.add_argument("--t", type=int, required=True)
    lemma5.add_argument("--n", type=int, required=True)
    lemma5.set_defaults(func=_cmd_predicate)

    p = sub.add_parser("claim1", help="unique residue among gap exponents")
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--p", type=int, required=True)
    p.set_defaults(func=_cmd_claim1)

    p = sub.add_parser("lemma7", help="exhaust the minimal even-t order")
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--allow-large", action="store_true")
    p.set_defaults(func=_cmd_lemma7)

    p = sub.add_parser("find-pt", help="smallest universal odd removal")
    p.add_argument("--t", type=int, required=True)
    p.set_defaults(func=_cmd_find_pt)

    p = sub.add_parser("find-qr", help="universal opposite-parity removals")
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--all", action="store_true")
    p.set_defaults(func=_cmd_find_qr)

    p = sub.add_parser("scan", help="stream per-t search records")
    p.add_argument("--from", dest="t_from", type=int, required=True)
    p.add_argument("--to", dest="t_to", type=int, required=True)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--format", choices=("json", "latex"), default="json")
    p.add_argument("--resume-from", dest="resume_from", type=int, default=0)
    p.set_defaults(func=_cmd_scan)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        print(json.dumps({"error": "precondition", "message": str(exc)}))
        return 1


if __name__ == "__main__":
    sys.exit(main())
