"""Command line front end.

Subcommands: enumerate, totals, verify, oeis, distribution, sample.
Exit codes: 0 success or full match, 1 verification mismatch, 2 usage or
limit error. Output is deterministic; the sampler requires an explicit
seed and is then deterministic too.
"""

import argparse
import csv
import functools
import json
import random
import sys

from . import oeis as oeis_files
from .bijections import random_dyck_path
from .formulas import closed_total, narayana
from .limits import EnumerationLimitError
from .paths import enumerate_dyck
from .verify import SUITE_CAPS, run_suite
from .words import (
    StatId,
    StatKind,
    SweepTotals,
    enumerate_catalan,
    stat_value,
    sweep_totals,
)

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2

DEFAULT_STATS = [StatId(kind) for kind in StatKind]

_PARALLEL_DEPTH = 4


def _parse_stats(text: str) -> list[StatId]:
    if text.strip() == "all":
        return list(DEFAULT_STATS)
    stats = [StatId.parse(part) for part in text.split(",") if part.strip()]
    if not stats:
        raise ValueError("no statistics selected")
    return stats


def _sweep_shard(task: tuple[int, tuple[int, ...], int | None]) -> SweepTotals:
    n, prefix, max_n = task
    return sweep_totals(n, prefix=prefix, max_n=max_n)


def _totals_for(n: int, max_n: int | None, parallel: int) -> SweepTotals:
    if parallel <= 1 or n <= _PARALLEL_DEPTH + 1:
        return sweep_totals(n, max_n=max_n)
    from concurrent.futures import ProcessPoolExecutor

    prefixes = [w.letters for w in enumerate_catalan(_PARALLEL_DEPTH, max_n=max_n)]
    tasks = [(n, prefix, max_n) for prefix in prefixes]
    with ProcessPoolExecutor(max_workers=parallel) as pool:
        shards = list(pool.map(_sweep_shard, tasks))
    return functools.reduce(lambda a, b: a + b, shards)


def cmd_enumerate(args) -> int:
    stats = _parse_stats(args.stats) if args.stats else None
    if stats and args.kind == "paths":
        raise ValueError("per-item statistics are only available for words")
    if args.kind == "words":
        items = enumerate_catalan(args.n, max_n=args.max_n)
    else:
        items = enumerate_dyck(args.n, max_n=args.max_n)
    out = sys.stdout
    if args.format == "csv":
        writer = csv.writer(out)
        header = ["index", "value"]
        if stats:
            header += [str(s) for s in stats]
        writer.writerow(header)
        for i, item in enumerate(items):
            row = [i, str(item)]
            if stats:
                row += [stat_value(item, s) for s in stats]
            writer.writerow(row)
    elif args.format == "json":
        for i, item in enumerate(items):
            record = {"index": i, "value": str(item)}
            if stats:
                record["stats"] = {str(s): stat_value(item, s) for s in stats}
            out.write(json.dumps(record) + "\n")
    else:
        for item in items:
            out.write(str(item) + "\n")
    return EXIT_OK


def cmd_totals(args) -> int:
    stats = _parse_stats(args.stats)
    rows = []
    for n in range(1, args.n_max + 1):
        totals = _totals_for(n, args.max_n, args.parallel)
        for s in stats:
            brute = totals.total(s)
            closed = closed_total(n, s)
            rows.append((n, str(s), brute, closed, brute == closed))
    out = sys.stdout
    if args.format == "csv":
        writer = csv.writer(out)
        writer.writerow(["n", "stat", "brute", "closed", "match"])
        for n, name, brute, closed, match in rows:
            writer.writerow([n, name, brute, closed, str(match).lower()])
    elif args.format == "json":
        for n, name, brute, closed, match in rows:
            out.write(
                json.dumps(
                    {
                        "n": n,
                        "stat": name,
                        "brute": brute,
                        "closed": closed,
                        "match": match,
                    }
                )
                + "\n"
            )
    elif rows:
        width = max(len(name) for _, name, *_ in rows)
        out.write(f"{'n':>3} {'stat':<{width}} {'brute':>22} {'closed':>22} match\n")
        for n, name, brute, closed, match in rows:
            flag = "ok" if match else "MISMATCH"
            out.write(f"{n:>3} {name:<{width}} {brute:>22} {closed:>22} {flag}\n")
    return EXIT_OK if all(match for *_, match in rows) else EXIT_MISMATCH


def cmd_verify(args) -> int:
    reports = run_suite(args.suite, args.n_max)
    ok = True
    for report in reports:
        sys.stdout.write(report.to_text() + "\n")
        ok = ok and report.passed
    sys.stdout.write("verification PASSED\n" if ok else "verification FAILED\n")
    return EXIT_OK if ok else EXIT_MISMATCH


def cmd_oeis(args) -> int:
    if args.id:
        binding = oeis_files.BUILTIN_BINDINGS.get(args.id)
        if binding is None:
            known = ", ".join(sorted(oeis_files.BUILTIN_BINDINGS))
            raise ValueError(f"no built-in binding for {args.id}; known: {known}")
        if args.stat:
            binding = oeis_files.OeisBinding(
                args.id, StatId.parse(args.stat), args.offset, args.first_n
            )
    elif args.stat:
        binding = oeis_files.OeisBinding(
            None, StatId.parse(args.stat), args.offset, args.first_n
        )
    else:
        raise ValueError("provide an OEIS id or --stat")
    terms = binding.terms(args.terms)
    if args.check:
        with open(args.check, encoding="utf-8") as fh:
            reference = oeis_files.parse_bfile(fh.read())
        divergence = oeis_files.first_divergence(terms, reference)
        shared = sum(1 for i, _ in terms if i in reference)
        if divergence is None:
            sys.stdout.write(f"match: {shared} shared terms agree\n")
            return EXIT_OK
        index, expected, got = divergence
        sys.stdout.write(
            f"divergence at index {index}: b-file has {expected}, computed {got}\n"
        )
        return EXIT_MISMATCH
    sys.stdout.write(oeis_files.format_bfile(terms))
    return EXIT_OK


def cmd_distribution(args) -> int:
    stat = StatId.parse(args.stat)
    hist: dict[int, int] = {}
    for w in enumerate_catalan(args.n, max_n=args.max_n):
        value = stat_value(w, stat)
        hist[value] = hist.get(value, 0) + 1
    narayana_kinds = (StatKind.RUNS_ASC, StatKind.RUNS_WEAK_DESC)
    with_narayana = stat.kind in narayana_kinds
    rows = []
    for value in sorted(hist):
        row = {"value": value, "count": hist[value]}
        if with_narayana:
            expected = narayana(args.n, value)
            row["narayana"] = expected
            row["match"] = expected == hist[value]
        rows.append(row)
    out = sys.stdout
    if args.format == "csv":
        writer = csv.writer(out)
        writer.writerow(list(rows[0]) if rows else ["value", "count"])
        for row in rows:
            writer.writerow(
                [str(v).lower() if isinstance(v, bool) else v for v in row.values()]
            )
    elif args.format == "json":
        for row in rows:
            out.write(json.dumps(row) + "\n")
    else:
        for row in rows:
            line = f"{row['value']:>4} {row['count']:>16}"
            if with_narayana:
                flag = "ok" if row["match"] else "MISMATCH"
                line += f" {row['narayana']:>16} {flag}"
            out.write(line + "\n")
    if with_narayana and not all(row["match"] for row in rows):
        return EXIT_MISMATCH
    return EXIT_OK


def cmd_sample(args) -> int:
    rng = random.Random(args.seed)
    out = sys.stdout
    for i in range(args.count):
        path = random_dyck_path(args.n, rng)
        if args.format == "json":
            out.write(json.dumps({"index": i, "value": str(path)}) + "\n")
        else:
            out.write(str(path) + "\n")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="catalan-lab",
        description="Catalan word and Dyck path statistics laboratory",
    )
    parser.add_argument(
        "--max-n",
        type=int,
        default=None,
        help="enumeration ceiling (default: CATALAN_LAB_MAX_N or 16)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", help="list words or paths")
    p.add_argument("--kind", choices=["words", "paths"], required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--format", choices=["plain", "json", "csv"], default="plain")
    p.add_argument("--stats", help="comma-separated statistics to attach (words only)")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("totals", help="brute-force vs closed-form totals")
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--stats", default="all", help="comma-separated names or 'all'")
    p.add_argument("--format", choices=["plain", "json", "csv"], default="plain")
    p.add_argument("--parallel", type=int, default=1, help="worker processes")
    p.set_defaults(func=cmd_totals)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument(
        "--suite",
        choices=["bijections", "identities", "distributions", "transport", "all"],
        required=True,
    )
    p.add_argument(
        "--n-max",
        type=int,
        default=None,
        help=f"bound per suite (caps: {SUITE_CAPS})",
    )
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("oeis", help="emit or check b-file terms")
    p.add_argument("id", nargs="?", help="OEIS id with a built-in binding")
    p.add_argument("--stat", help="statistic for a custom binding")
    p.add_argument("--offset", type=int, default=1, help="first emitted index")
    p.add_argument("--first-n", type=int, default=1, help="word length of first term")
    p.add_argument("--terms", type=int, default=10)
    p.add_argument("--check", help="b-file to compare against")
    p.set_defaults(func=cmd_oeis)

    p = sub.add_parser("distribution", help="histogram of a statistic")
    p.add_argument("--stat", required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--format", choices=["plain", "json", "csv"], default="plain")
    p.set_defaults(func=cmd_distribution)

    p = sub.add_parser("sample", help="uniform random Dyck paths")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--count", type=int, default=1)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--format", choices=["plain", "json"], default="plain")
    p.set_defaults(func=cmd_sample)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except EnumerationLimitError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_USAGE
    except (ValueError, OSError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
