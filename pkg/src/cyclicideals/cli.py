"""Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 size cap exceeded.
"""
from __future__ import annotations

import argparse
import json
import sys

from .enumeration import DEFAULT_CAP, FILTERS, enumerate_ideals, formula_report, oracle_report
from .errors import CyclicIdealError, SizeBound
from .ideal import decompose, ideal_from_record
from .product import build_star_table, is_semigroup, isolated_vertex_checks, multiply, qualifies_for_split
from .quiver import Quiver, build_from_word, from_signature
from .stair import CylDyckPath, from_dyck, render_ascii, to_dyck

AUTO_ORACLE_MAX_N = 10


class UsageError(Exception):
    pass


def _dumps(obj) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False) + "\n"


def _quiver(args, required: bool = True) -> Quiver | None:
    word, sig = getattr(args, "word", None), getattr(args, "signature", None)
    if word is not None and sig is not None:
        raise UsageError("give exactly one of --word and --signature")
    if word is not None:
        return build_from_word(word)
    if sig is not None:
        try:
            return from_signature([int(x) for x in sig.split(",") if x.strip()])
        except ValueError:
            raise UsageError(f"--signature expects comma-separated integers, got {sig!r}") from None
    if required:
        raise UsageError("a quiver is required: pass --word or --signature")
    return None


def _read_json(path: str):
    try:
        if path == "-":
            return json.load(sys.stdin)
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise UsageError(f"{path} is not valid JSON: {exc}") from None


def _path_list(ideal) -> list:
    return [p.to_record() for p in ideal.sorted_paths()]


# -- subcommands --------------------------------------------------------------


def cmd_enumerate(args) -> tuple[str, int]:
    q = _quiver(args)
    ideals = enumerate_ideals(q, args.filter, args.cap)
    if args.format == "summary":
        lines = [f"{q.word} signature={','.join(map(str, q.signature))} filter={args.filter}: {len(ideals)} ideals"]
        lines += [" ".join(_fmt_path(p) for p in i.sorted_paths()) or "0" for i in ideals]
        return "\n".join(lines) + "\n", 0
    _require(args, ("json",))
    rec = {
        "quiver": q.to_record(),
        "signature": list(q.signature),
        "filter": args.filter,
        "count": len(ideals),
        "ideals": [{"paths": _path_list(i)} for i in ideals],
    }
    return _dumps(rec), 0


def _fmt_path(p) -> str:
    return f"e{p.tail}" if p.is_trivial else f"{p.first_arrow}:{p.length}"


def cmd_count(args) -> tuple[str, int]:
    q = _quiver(args)
    variants = ("printed", "corrected") if args.variant == "both" else (args.variant,)
    reports = [formula_report(q.signature, v) for v in variants]
    use_oracle = args.oracle or (args.variant == "both" and q.n <= AUTO_ORACLE_MAX_N)
    if use_oracle:
        reports.append(oracle_report(q, args.cap))
    rec = {"signature": list(q.signature), "reports": [r.to_record() for r in reports]}
    status = 0
    notes = []
    by = {r.methods["indecomposable"]: r for r in reports}
    if "formulaPrinted" in by and "formulaCorrected" in by:
        p, c = by["formulaPrinted"].counts["indecomposable"], by["formulaCorrected"].counts["indecomposable"]
        if p != c:
            notes.append({"count": "indecomposable", "formulaPrinted": str(p), "formulaCorrected": str(c)})
    if "bruteForce" in by:
        oracle = by["bruteForce"].counts
        for r in reports:
            if r.methods["indecomposable"] == "bruteForce":
                continue
            for key, val in r.counts.items():
                if val != oracle[key]:
                    notes.append({"count": key, r.methods[key]: str(val), "bruteForce": str(oracle[key])})
                    if r.methods[key] == "formulaCorrected" or key != "indecomposable":
                        status = 1
    rec["discrepancies"] = notes
    if args.format == "summary":
        lines = [f"signature {','.join(map(str, q.signature))}"]
        for r in reports:
            tag = r.methods["indecomposable"]
            lines.append(f"{tag}: " + " ".join(f"{k}={v}" for k, v in r.counts.items()))
        for d in notes:
            lines.append("discrepancy: " + " ".join(f"{k}={v}" for k, v in d.items()))
        return "\n".join(lines) + "\n", status
    _require(args, ("json",))
    return _dumps(rec), status


def cmd_multiply(args) -> tuple[str, int]:
    q = _quiver(args, required=False)
    I = ideal_from_record(_read_json(args.left), q)
    J = ideal_from_record(_read_json(args.right), q if q is not None else I.quiver)
    P = multiply(I, J)
    parts = decompose(P)
    rec = {"product": P.to_record(), "decomposition": [d.to_record() for d in parts]}
    if qualifies_for_split(I, J):
        checks = isolated_vertex_checks(I, J)
        rec["splitCriterion"] = all(c.passes for c in checks)
        rec["isolatedVertices"] = [
            {"vertex": c.vertex.to_record(), "arm": c.arm, "jEdges": list(c.j_edges), "sinkEdge": c.sink_edge,
             "is": c.is_I, "ts": c.ts_J}
            for c in checks
        ]
    else:
        rec["splitCriterion"] = None
    if args.format == "summary":
        lines = [f"product: {' '.join(_fmt_path(p) for p in P.sorted_paths()) or '0'}",
                 f"summands: {len(parts)}"]
        if rec["splitCriterion"] is not None:
            lines.append(f"split criterion: {rec['splitCriterion']}")
        return "\n".join(lines) + "\n", 0
    _require(args, ("json",))
    return _dumps(rec), 0


def cmd_star_table(args) -> tuple[str, int]:
    q = _quiver(args)
    width = 2 * q.k if args.width is None else args.width
    table = build_star_table(q, width)
    if args.format == "csv":
        return table.to_csv(), 0
    if args.format == "summary":
        multi = sum(1 for v in table.entries.values() if len(v) > 1)
        return (f"{q.word} width<={width}: {len(table.elements)} elements, {multi} multi-valued entries, "
                f"semigroup={is_semigroup(table)}\n"), 0
    _require(args, ("json",))
    return table.to_json(), 0


def cmd_verify(args) -> tuple[str, int]:
    from .verify import run_verify

    progress = None
    if args.progress:
        def progress(w):
            print(f"checked {w}", file=sys.stderr, flush=True)
    report = run_verify(args.max_n, seed=args.seed, workers=args.workers, cap=args.cap, progress=progress)
    status = 0 if report.passed else 1
    if args.format == "summary":
        return report.summary(), status
    _require(args, ("json",))
    return _dumps(report.to_record()), status


def cmd_dyck(args) -> tuple[str, int]:
    q = _quiver(args, required=False)
    rec = _read_json(args.input)
    if args.direction == "to":
        ideal = ideal_from_record(rec, q)
        if args.format == "ascii":
            return render_ascii(ideal), 0
        _require(args, ("json",))
        out = to_dyck(ideal).to_record()
        out["quiver"] = ideal.quiver.to_record()
        return _dumps(out), 0
    pi = CylDyckPath.from_record(rec)
    if q is None and "quiver" in rec:
        q = build_from_word(rec["quiver"]["word"]) if "word" in rec["quiver"] else from_signature(pi.signature)
    ideal = from_dyck(pi, q)
    if args.format == "ascii":
        return render_ascii(ideal), 0
    _require(args, ("json",))
    return _dumps(ideal.to_record()), 0


def _require(args, allowed) -> None:
    if args.format not in allowed:
        raise UsageError(f"{args.command} does not support --format {args.format}")


# -- parser -------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="cyclicideals", description="Ideals of path algebras of cyclic quivers.")
    sub = p.add_subparsers(dest="command", required=True)

    def quiver_flags(sp):
        sp.add_argument("--word", help="orientation word over {+,-}; use --word=-+... when it starts with '-'")
        sp.add_argument("--signature", help="comma-separated signature, e.g. 2,3")

    def common(sp, formats, default="json"):
        sp.add_argument("--format", choices=formats, default=default)
        sp.add_argument("--out", help="write output here instead of stdout")
        sp.add_argument("--cap", type=int, default=DEFAULT_CAP, help="maximum number of ideals to enumerate")

    sp = sub.add_parser("enumerate", help="list ideals of a quiver")
    quiver_flags(sp)
    sp.add_argument("--filter", choices=FILTERS, default="all")
    common(sp, ("json", "summary"))

    sp = sub.add_parser("count", help="closed-form counts, optionally cross-checked by brute force")
    quiver_flags(sp)
    sp.add_argument("--variant", choices=("printed", "corrected", "both"), default="both")
    sp.add_argument("--oracle", action="store_true", help="also count by brute-force enumeration")
    common(sp, ("json", "summary"))

    sp = sub.add_parser("multiply", help="multiply two ideals given as JSON records")
    quiver_flags(sp)
    sp.add_argument("left")
    sp.add_argument("right")
    common(sp, ("json", "summary"))

    sp = sub.add_parser("star-table", help="multiplication table of indecomposables of bounded width")
    quiver_flags(sp)
    sp.add_argument("--width", type=int, help="width bound m (default 2k)")
    common(sp, ("json", "csv", "summary"))

    sp = sub.add_parser("verify", help="run every invariant over all quivers up to --max-n vertices")
    sp.add_argument("--max-n", type=int, default=6)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--workers", type=int, default=1)
    sp.add_argument("--progress", action="store_true")
    common(sp, ("json", "summary"), default="summary")

    sp = sub.add_parser("dyck", help="convert between ideal records and cylindrical Dyck paths")
    quiver_flags(sp)
    g = sp.add_mutually_exclusive_group(required=True)
    g.add_argument("--to", dest="direction", action="store_const", const="to", help="ideal JSON to Dyck JSON")
    g.add_argument("--from", dest="direction", action="store_const", const="from", help="Dyck JSON to ideal JSON")
    sp.add_argument("input", help="JSON file, or - for stdin")
    common(sp, ("json", "ascii"))
    return p


COMMANDS = {
    "enumerate": cmd_enumerate,
    "count": cmd_count,
    "multiply": cmd_multiply,
    "star-table": cmd_star_table,
    "verify": cmd_verify,
    "dyck": cmd_dyck,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        text, status = COMMANDS[args.command](args)
    except SizeBound as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (UsageError, CyclicIdealError, KeyError, TypeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return status


if __name__ == "__main__":
    sys.exit(main())
