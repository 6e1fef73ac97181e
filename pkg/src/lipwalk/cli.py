"""Command-line interface: ``lipwalk avg|count|table|verify|kc|endpoint-dist``.

Exit codes: 0 success, 1 usage or input error, 2 verification failure,
3 undefined average, 4 KC-transformation not applicable.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction
from pathlib import Path

from . import closed_forms as cf
from .combinatorics import format_rational, parse_rational, path_endpoint_distribution
from .errors import LipwalkError, TransformNotApplicableError, UndefinedAverageError
from .graphs import (
    classify,
    from_edgelist,
    from_json,
    kc_transform,
    make_complete,
    make_complete_bipartite,
    make_corolla,
    make_cycle,
    make_path,
    make_star,
    to_edgelist,
    to_json,
)
from .lipschitz import AvgRangeReport, Mode, avg_range_bruteforce, mapping_stats
from .reference import PUBLISHED_CYCLE_AVERAGES, PUBLISHED_PATH_AVERAGES
from .suites import SUITES

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_VIOLATION = 2
EXIT_UNDEFINED = 3
EXIT_NOT_APPLICABLE = 4


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on bad usage, which we reserve for verification failures
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def approx(x: Fraction, digits: int = 6) -> str:
    return f"~{float(x):.{digits}f} (approx)"


# ---------------------------------------------------------------- graph specs


def _add_graph_source(p):
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--path", type=int, metavar="N")
    src.add_argument("--cycle", type=int, metavar="N")
    src.add_argument("--complete", type=int, metavar="N")
    src.add_argument("--star", type=int, metavar="N")
    src.add_argument("--bipartite", type=int, nargs=2, metavar=("P", "Q"))
    src.add_argument("--corolla", nargs=2, metavar=("C", "L1,...,LC"))
    src.add_argument("--file", metavar="PATH")
    p.add_argument("--strong", action="store_true", help="strong mappings: |f(u)-f(v)| = M on every edge")
    p.add_argument("--lipschitz", type=int, default=1, metavar="M")
    how = p.add_mutually_exclusive_group()
    how.add_argument("--closed-form", dest="method", action="store_const", const="closed-form")
    how.add_argument("--brute", dest="method", action="store_const", const="brute")
    how.add_argument("--both", dest="method", action="store_const", const="both")
    p.set_defaults(method="closed-form")
    p.add_argument("--format", choices=("text", "json", "csv"), default="text")


def _load(path):
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror or exc}") from exc
    return (from_json(text), "json") if text.lstrip().startswith("{") else (from_edgelist(text), "edgelist")


def graph_from_args(args):
    if args.path is not None:
        return make_path(args.path)
    if args.cycle is not None:
        return make_cycle(args.cycle)
    if args.complete is not None:
        return make_complete(args.complete)
    if args.star is not None:
        return make_star(args.star)
    if args.bipartite is not None:
        return make_complete_bipartite(*args.bipartite)
    if args.corolla is not None:
        c, lengths = args.corolla
        try:
            parts = [int(x) for x in lengths.split(",") if x.strip()]
            return make_corolla(int(c), parts)
        except ValueError as exc:
            if isinstance(exc, LipwalkError):
                raise
            raise UsageError(f"bad --corolla value: {exc}") from exc
    return _load(args.file)[0]


def _mode(args):
    if args.lipschitz < 1:
        raise UsageError("--lipschitz must be >= 1")
    return Mode(args.lipschitz, args.strong)


# ---------------------------------------------------------------- avg / count


def _reports(g, mode, method):
    """Reports to show, in order; raises UndefinedAverageError on empty strong sets."""
    closed = cf.closed_form_report(g, mode)
    if method == "brute" or (method == "closed-form" and closed is None):
        return [avg_range_bruteforce(g, mode)]
    if method == "closed-form":
        return [closed]
    brute = avg_range_bruteforce(g, mode)
    return [brute] if closed is None else [closed, brute]


def _emit_reports(g, reports, fmt, out):
    tag = str(classify(g))
    if fmt == "json":
        payload = {"graph": g.as_dict(), "class": tag, "reports": [r.as_dict() for r in reports]}
        out.write(json.dumps(payload, sort_keys=True) + "\n")
    elif fmt == "csv":
        w = csv.writer(out, lineterminator="\n")
        w.writerow(["class", "n", "mode", "source", "mapping_count", "range_sum", "average"])
        for r in reports:
            w.writerow([tag, g.n, str(r.mode), r.source, r.mapping_count, r.range_sum, format_rational(r.average)])
    else:
        out.write(f"graph: {tag}, n={g.n}, m={g.m}, root={g.root}\n")
        for r in reports:
            out.write(f"[{r.source}] mode={r.mode} mappings={r.mapping_count} range_sum={r.range_sum}\n")
            out.write(f"average: {format_rational(r.average)} {approx(r.average)}\n")


def cmd_avg(args, out):
    g = graph_from_args(args)
    mode = _mode(args)
    try:
        reports = _reports(g, mode, args.method)
    except UndefinedAverageError as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_UNDEFINED
    _emit_reports(g, reports, args.format, out)
    if len(reports) == 2 and reports[0].average != reports[1].average:
        print("DISAGREE: closed form and brute force differ", file=sys.stderr)
        return EXIT_VIOLATION
    return EXIT_OK


def cmd_count(args, out):
    g = graph_from_args(args)
    mode = _mode(args)
    closed = cf.closed_form_count(g, mode)
    counts = []
    if args.method in ("closed-form", "both") and closed is not None:
        counts.append(closed)
    if args.method in ("brute", "both") or closed is None:
        counts.append(("brute-force", mapping_stats(g, mode)[0]))
    if args.format == "json":
        out.write(json.dumps({"graph": g.as_dict(), "mode": str(mode),
                              "counts": {s: c for s, c in counts}}, sort_keys=True) + "\n")
    elif args.format == "csv":
        w = csv.writer(out, lineterminator="\n")
        w.writerow(["source", "mapping_count"])
        w.writerows(counts)
    else:
        for s, c in counts:
            out.write(f"[{s}] mode={mode} mappings={c}\n")
    if len({c for _, c in counts}) > 1:
        return EXIT_VIOLATION
    return EXIT_OK


# ---------------------------------------------------------------- table


_TABLES = {
    "path": (2, cf.avg1_path, PUBLISHED_PATH_AVERAGES),
    "cycle": (3, cf.avg1_cycle, PUBLISHED_CYCLE_AVERAGES),
}


def table_rows(kind: str, n_max: int) -> list:
    """``(n, computed, published-or-None, status)`` rows; status is AGREE, DIFFER or ''."""
    lo, fn, published = _TABLES[kind]
    if n_max < lo:
        raise UsageError(f"{kind} table starts at n={lo}")
    rows = []
    for n in range(lo, n_max + 1):
        value = fn(n)
        ref = published.get(n)
        status = "" if ref is None else ("AGREE" if parse_rational(ref) == value else "DIFFER")
        rows.append((n, value, ref, status))
    return rows


def cmd_table(args, out):
    rows = table_rows(args.kind, args.n_max)
    if args.format == "json":
        data = [{"n": n, "average": format_rational(v), **({"published": r, "status": s} if args.check else {})}
                for n, v, r, s in rows]
        out.write(json.dumps(data, sort_keys=True) + "\n")
    elif args.format == "csv":
        w = csv.writer(out, lineterminator="\n")
        w.writerow(["n", "average"] + (["published", "status"] if args.check else []))
        for n, v, r, s in rows:
            w.writerow([n, format_rational(v)] + ([r or "", s] if args.check else []))
    else:
        for n, v, r, s in rows:
            line = f"n={n:<4} {format_rational(v):<24} {approx(v)}"
            if args.check:
                line += f"  published={r or '-':<16} {s or 'NO REFERENCE'}"
            out.write(line + "\n")
        if args.check:
            agree = sum(1 for row in rows if row[3] == "AGREE")
            checked = sum(1 for row in rows if row[3])
            out.write(f"{agree}/{checked} rows agree with the published table\n")
    if args.check and any(row[3] == "DIFFER" for row in rows):
        return EXIT_VIOLATION
    return EXIT_OK


# ---------------------------------------------------------------- verify


def cmd_verify(args, out):
    names = list(SUITES) if args.suite == "all" else [args.suite]
    outcomes = []
    for name in names:
        if name == "conjectures":
            outcomes += SUITES[name](n=args.n, workers=args.workers)
        else:
            outcomes += SUITES[name]()
    if args.format == "json":
        out.write(json.dumps([{"name": o.name, "passed": o.passed, "detail": o.detail} for o in outcomes],
                             sort_keys=True) + "\n")
    else:
        for o in outcomes:
            out.write(o.line() + "\n")
        failed = sum(1 for o in outcomes if not o.passed)
        out.write(f"{len(outcomes) - failed}/{len(outcomes)} checks passed\n")
    return EXIT_OK if all(o.passed for o in outcomes) else EXIT_VIOLATION


# ---------------------------------------------------------------- kc


def cmd_kc(args, out):
    g, fmt = _load(args.file)
    try:
        h = kc_transform(g, args.a, args.b)
    except TransformNotApplicableError as exc:
        print(f"not applicable: {exc}", file=sys.stderr)
        return EXIT_NOT_APPLICABLE
    text = to_json(h) + "\n" if fmt == "json" else to_edgelist(h)
    if args.output:
        Path(args.output).write_text(text)
    else:
        out.write(text)
    if args.compare:
        mode = Mode(1, False)
        before = avg_range_bruteforce(g, mode).average
        after = avg_range_bruteforce(h, mode).average
        rel = ">=" if before >= after else "<"
        print(f"avg_1(G) = {format_rational(before)}  {rel}  avg_1(G_a->b) = {format_rational(after)}",
              file=sys.stderr if not args.output else out)
    return EXIT_OK


# ---------------------------------------------------------------- endpoint-dist


def cmd_endpoint_dist(args, out):
    if args.n < 1:
        raise UsageError("--n must be >= 1")
    dist = path_endpoint_distribution(args.n)
    if args.format == "json":
        out.write(json.dumps({str(k): format_rational(p) for k, p in dist.items()}) + "\n")
    elif args.format == "csv":
        w = csv.writer(out, lineterminator="\n")
        w.writerow(["k", "probability"])
        for k, p in dist.items():
            w.writerow([k, format_rational(p)])
    else:
        for k, p in dist.items():
            out.write(f"{k:>4}  {format_rational(p):<20} {approx(p)}\n")
    return EXIT_OK


# ---------------------------------------------------------------- entry point


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="lipwalk", description="Average range of Lipschitz mappings of graphs.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("avg", help="average range of a graph")
    _add_graph_source(p)
    p.set_defaults(func=cmd_avg)

    p = sub.add_parser("count", help="number of mappings of a graph")
    _add_graph_source(p)
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("table", help="avg_1 table for paths or cycles")
    p.add_argument("kind", choices=sorted(_TABLES))
    p.add_argument("n_max", type=int)
    p.add_argument("--check", action="store_true", help="compare with the published values")
    p.add_argument("--format", choices=("text", "json", "csv"), default="text")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("verify", help="run property suites and sweeps")
    p.add_argument("suite", choices=[*SUITES, "all"])
    p.add_argument("--n", type=int, default=None, help="largest order for the sweeps")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("kc", help="apply the KC-transformation G -> G_{a->b}")
    p.add_argument("file")
    p.add_argument("a", type=int)
    p.add_argument("b", type=int)
    p.add_argument("output", nargs="?", help="where to write the result (default: stdout)")
    p.add_argument("--compare", action="store_true", help="also print avg_1 before and after")
    p.set_defaults(func=cmd_kc)

    p = sub.add_parser("endpoint-dist", help="distribution of the far endpoint of P_n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--format", choices=("text", "json", "csv"), default="text")
    p.set_defaults(func=cmd_endpoint_dist)
    return parser


def main(argv=None, out=None) -> int:
    out = out if out is not None else sys.stdout
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except UndefinedAverageError as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_UNDEFINED
    except (UsageError, LipwalkError, OSError) as exc:
        print(f"lipwalk: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def run(argv=None) -> tuple:
    """Call :func:`main` and capture stdout; handy for tests and notebooks."""
    buf = io.StringIO()
    try:
        code = main(argv, out=buf)
    except SystemExit as exc:
        code = exc.code if isinstance(exc.code, int) else EXIT_USAGE
    return code, buf.getvalue()


if __name__ == "__main__":
    sys.exit(main())
