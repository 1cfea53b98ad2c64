"""Command line front end.

    degseq count 3^4,1^2 --stats
    degseq check 4,4,4,1,1
    degseq table regular --n 2..15 --m 1..8
    degseq verify --nmax 7 --dmax 5
    degseq bench regular --n 4..9 --m 2
    degseq cache export 2^8 3^8 -o table.cache

Exit codes: 0 success (or realizable), 1 internal or verification failure,
2 usage error, 3 not realizable.
"""

from __future__ import annotations

import argparse
import csv
import json
import re
import sys
import time
from typing import Optional, Sequence

from degseq import cachefile
from degseq.bench import COLUMNS, LEAF_BUDGET, family_points, measure
from degseq.core import MemoCache, canonicalize, count
from degseq.families import binary_tree_count, bipartite_count_eq8, bipartite_count_raw, regular_count
from degseq.oracles import BRUTE_FORCE_MAX_N
from degseq.realizability import erdos_gallai, havel_hakimi
from degseq.verify import cross_check

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2
EXIT_NOT_REALIZABLE = 3

_TERM = re.compile(r"^\s*(\d+)\s*(?:\^\s*(\d+)\s*)?$")
_RANGE = re.compile(r"^\s*(\d+)\s*(?:\.\.\s*(\d+)\s*)?$")


class UsageError(Exception):
    pass


def parse_sequence(text: str) -> tuple[int, ...]:
    """Expand ``3^4,1^2`` into (3, 3, 3, 3, 1, 1), canonicalized.

    An empty or blank string is the empty sequence.
    """
    if not text.strip():
        return ()
    raw: list[int] = []
    for term in text.split(","):
        match = _TERM.match(term)
        if not match:
            raise UsageError(f"bad term {term.strip()!r} in sequence {text!r}")
        value, times = match.groups()
        raw.extend([int(value)] * (int(times) if times is not None else 1))
    return canonicalize(raw)


def parse_range(text: str) -> range:
    """``2..15`` is inclusive on both ends; a bare ``7`` is the range {7}."""
    match = _RANGE.match(text)
    if not match:
        raise argparse.ArgumentTypeError(f"bad range {text!r}, expected A..B or A")
    lo = int(match.group(1))
    hi = int(match.group(2)) if match.group(2) is not None else lo
    if hi < lo:
        raise argparse.ArgumentTypeError(f"empty range {text!r}")
    return range(lo, hi + 1)


def _format_seq(d: Sequence[int]) -> str:
    return ",".join(map(str, d))


def _load_cache(path: Optional[str]) -> MemoCache:
    if path is None:
        return MemoCache()
    return cachefile.load(path)


def _save_cache(cache: MemoCache, path: Optional[str]) -> None:
    if path is not None:
        cachefile.save(cache, path)


def _read_batch(path: str) -> list[str]:
    handle = sys.stdin if path == "-" else open(path, encoding="utf-8")
    with handle:
        return [line.strip() for line in handle if line.strip() and not line.lstrip().startswith("#")]


def cmd_count(args, out, err) -> int:
    cache = _load_cache(args.cache_in)
    prune = not args.no_prune
    if args.file is not None:
        texts = _read_batch(args.file)
        if args.sequence is not None:
            texts.insert(0, args.sequence)
    elif args.sequence is not None:
        texts = [args.sequence]
    else:
        raise UsageError("give a sequence or --file")
    sequences = [parse_sequence(t) for t in texts]

    for d in sequences:
        value = count(d, cache, prune=prune)
        if args.file is not None:
            out.write(f"{_format_seq(d)}\t{value}\n")
        else:
            out.write(f"{value}\n")
    if args.stats:
        s = cache.stats
        err.write(
            f"calls={s.calls} cache_hits={s.cache_hits} cache_misses={s.cache_misses} "
            f"hit_rate={s.hit_rate:.3f} entries={len(cache)}\n"
        )
        if args.leaves:
            from degseq.core import count_leaves

            for d in sequences:
                err.write(f"leaves({_format_seq(d)})={count_leaves(d)}\n")
    _save_cache(cache, args.cache_out)
    return EXIT_OK


def cmd_check(args, out, err) -> int:
    d = parse_sequence(args.sequence)
    eg = erdos_gallai(d)
    hh = havel_hakimi(d)
    if eg != hh:
        err.write(f"internal error: Erdos-Gallai says {eg}, Havel-Hakimi says {hh} for {_format_seq(d)}\n")
        return EXIT_FAILURE
    out.write("realizable\n" if eg else "not realizable\n")
    return EXIT_OK if eg else EXIT_NOT_REALIZABLE


def _table_rows(args, cache: MemoCache):
    """Yield (header, iterator of row tuples) for the requested family."""
    prune = not args.no_prune
    if args.family == "regular":
        if args.n is None or args.m is None:
            raise UsageError("table regular needs --n and --m")
        header = ("n", "m", "count")
        rows = ((n, m, regular_count(n, m, cache, prune=prune)) for n in args.n for m in args.m)
    elif args.family == "tree":
        if args.k is None:
            raise UsageError("table tree needs --k")
        header = ("k", "count")
        rows = ((k, binary_tree_count(k, cache, prune=prune)) for k in args.k)
    else:
        if args.n is None or args.m is None:
            raise UsageError("table bipartite needs --n and --m")
        fn = bipartite_count_eq8 if args.eq8 else bipartite_count_raw
        header = ("m", "n", "count")
        rows = ((m, n, fn(n, m, cache, prune=prune)) for m in args.m for n in args.n if n <= m)
    return header, rows


def cmd_table(args, out, err) -> int:
    if args.family == "tree" and args.k is not None and args.k.start < 1:
        raise UsageError("k must be positive")
    if args.family != "tree" and args.m is not None and args.m.start < 1:
        raise UsageError("m must be positive")
    if args.family == "bipartite" and args.n is not None and args.n.start < 1:
        raise UsageError("n must be positive")
    cache = _load_cache(args.cache_in)
    header, rows = _table_rows(args, cache)
    deadline = None if args.time_budget is None else time.monotonic() + args.time_budget

    done: list[tuple] = []
    status = EXIT_OK
    for row in rows:
        done.append(row)
        if deadline is not None and time.monotonic() > deadline:
            err.write(f"time budget of {args.time_budget}s exceeded after {len(done)} rows; output is partial\n")
            status = EXIT_FAILURE
            break

    handle = out if args.output is None else open(args.output, "w", encoding="utf-8", newline="")
    try:
        if args.format == "csv":
            writer = csv.writer(handle, lineterminator="\n")
            writer.writerow(header)
            writer.writerows(done)
        else:
            json.dump([dict(zip(header, row)) for row in done], handle, indent=1)
            handle.write("\n")
    finally:
        if handle is not out:
            handle.close()
    _save_cache(cache, args.cache_out)
    return status


def cmd_verify(args, out, err) -> int:
    max_n = max(BRUTE_FORCE_MAX_N, args.nmax) if args.force else BRUTE_FORCE_MAX_N
    if args.nmax > max_n:
        raise UsageError(f"--nmax above {BRUTE_FORCE_MAX_N} needs --force (brute force is 2**(n(n-1)/2))")
    if args.nmax < 0 or args.dmax < 1:
        raise UsageError("need --nmax >= 0 and --dmax >= 1")

    # per length: [agreed, total]
    matrix = {n: [0, 0] for n in range(args.nmax + 1)}
    failures = []
    for check in cross_check(args.nmax, args.dmax, prune=not args.no_prune, max_n=max_n):
        cell = matrix[len(check.sequence)]
        cell[1] += 1
        if check.ok:
            cell[0] += 1
        else:
            failures.append(check)

    out.write("n,sequences,agree,status\n")
    for n, (agreed, total) in matrix.items():
        out.write(f"{n},{total},{agreed},{'pass' if agreed == total else 'FAIL'}\n")
    total = sum(t for _, t in matrix.values())
    if failures:
        for f in failures:
            out.write(
                f"mismatch {_format_seq(f.sequence) or '()'}: recursive={f.recursive} "
                f"brute_force={f.brute_force} mckay={f.mckay}\n"
            )
        return EXIT_FAILURE
    out.write(f"all {total} sequences agree\n")
    return EXIT_OK


def cmd_bench(args, out, err) -> int:
    if args.family in ("regular", "bipartite") and args.m is None:
        raise UsageError(f"bench {args.family} needs --m")
    ns = args.k if args.family == "tree" else args.n
    if ns is None:
        raise UsageError(f"bench {args.family} needs {'--k' if args.family == 'tree' else '--n'}")
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(COLUMNS)
    for n, m, seq in family_points(args.family, ns, args.m or ()):
        row = measure(args.family, n, m, seq, leaf_budget=args.leaf_budget)
        writer.writerow(row.as_row(timings=not args.no_timings))
    err.write("mckay_multiplications models the naive full expansion, 2**binom(vertices,2) - 1\n")
    return EXIT_OK


def cmd_cache_export(args, out, err) -> int:
    cache = _load_cache(args.cache_in)
    for text in args.sequences:
        count(parse_sequence(text), cache, prune=not args.no_prune)
    cachefile.save(cache, args.output)
    err.write(f"wrote {len(cache)} entries to {args.output}\n")
    return EXIT_OK


def cmd_cache_import(args, out, err) -> int:
    cache = cachefile.load(args.path)
    if args.check:
        fresh = MemoCache()
        for d, value in sorted(cache.entries.items()):
            expected = count(d, fresh)
            if expected != value:
                err.write(f"{args.path}: entry {_format_seq(d)} holds {value}, recomputed {expected}\n")
                return EXIT_FAILURE
    out.write(f"{len(cache)} entries\n")
    if args.output is not None:
        cachefile.save(cache, args.output)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="degseq",
        description="Exact counts of labeled graphs with a prescribed degree sequence.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def cache_options(p):
        p.add_argument("--cache-in", metavar="PATH", help="start from a saved cache")
        p.add_argument("--cache-out", metavar="PATH", help="save the cache when done")

    def prune_option(p):
        p.add_argument(
            "--no-prune", action="store_true",
            help="skip the Erdos-Gallai pre-check and run the bare recurrence",
        )

    p = sub.add_parser("count", help="count graphs realizing one sequence, e.g. 3^4,1^2")
    p.add_argument("sequence", nargs="?", help="comma separated degrees, VALUE^TIMES for repeats")
    p.add_argument("--file", metavar="PATH", help="one sequence per line ('-' for stdin)")
    p.add_argument("--stats", action="store_true", help="print recursion counters to stderr")
    p.add_argument("--leaves", action="store_true", help="with --stats, also print unmemoized leaf counts")
    prune_option(p)
    cache_options(p)
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("check", help="decide whether a sequence is graphical")
    p.add_argument("sequence")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("table", help="tabulate a graph family")
    p.add_argument("family", choices=("regular", "tree", "bipartite"))
    p.add_argument("--n", type=parse_range, help="vertex count (regular) or part size (bipartite), A..B")
    p.add_argument("--m", type=parse_range, help="degree (regular) or larger part size (bipartite), A..B")
    p.add_argument("--k", type=parse_range, help="binary tree parameter, A..B")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--eq8", action="store_true", help="bipartite: multiply by comb(n+m, n) off the diagonal")
    p.add_argument("--time-budget", type=float, metavar="SECONDS", help="stop early and exit 1 past this")
    p.add_argument("-o", "--output", metavar="PATH", help="write the table here instead of stdout")
    prune_option(p)
    cache_options(p)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("verify", help="cross-check against brute force and the generating polynomial")
    p.add_argument("--nmax", type=int, default=5)
    p.add_argument("--dmax", type=int, default=4)
    p.add_argument("--force", action="store_true", help=f"allow --nmax above {BRUTE_FORCE_MAX_N}")
    prune_option(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bench", help="CSV of leaf counts, memoized work and timings")
    p.add_argument("family", choices=("regular", "tree", "bipartite"))
    p.add_argument("--n", type=parse_range)
    p.add_argument("--m", type=parse_range)
    p.add_argument("--k", type=parse_range)
    p.add_argument("--leaf-budget", type=int, default=LEAF_BUDGET,
                   help="skip the unmemoized run when the tree has more leaves than this")
    p.add_argument("--no-timings", action="store_true", help="blank the timing columns (reproducible output)")
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("cache", help="save or load memo caches")
    csub = p.add_subparsers(dest="cache_command", required=True)
    q = csub.add_parser("export", help="count the given sequences and save every cached subresult")
    q.add_argument("sequences", nargs="*", metavar="SEQUENCE")
    q.add_argument("-o", "--output", required=True, metavar="PATH")
    q.add_argument("--cache-in", metavar="PATH", help="extend an existing cache file")
    prune_option(q)
    q.set_defaults(func=cmd_cache_export)
    q = csub.add_parser("import", help="validate a cache file")
    q.add_argument("path")
    q.add_argument("--check", action="store_true", help="recompute every entry")
    q.add_argument("-o", "--output", metavar="PATH", help="re-save in canonical form")
    q.set_defaults(func=cmd_cache_import)

    return parser


def main(argv: Optional[Sequence[str]] = None, out=None, err=None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args, out, err)
    except UsageError as exc:
        err.write(f"degseq: error: {exc}\n")
        return EXIT_USAGE
    except (cachefile.CacheFormatError, OSError) as exc:
        err.write(f"degseq: error: {exc}\n")
        return EXIT_USAGE
    except Exception as exc:  # guard violations and bugs
        err.write(f"degseq: internal error: {type(exc).__name__}: {exc}\n")
        return EXIT_FAILURE


if __name__ == "__main__":
    sys.exit(main())
