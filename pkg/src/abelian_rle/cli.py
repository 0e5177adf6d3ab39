"""Command line front end: squares, periods, lcaf, oracle and bench subcommands.

Exit status: 0 on success, 1 on usage errors (bad flags, out-of-range
parameters, unreadable files), 2 on malformed input content.  All positions
in output are 1-based.  Input is either plain text (one string, trailing
newline ignored) or, with --rle, whitespace-separated char:exponent tokens.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from concurrent.futures import ThreadPoolExecutor

from . import bench, lcaf, oracles, periods, rle, squares


class UsageError(Exception):
    pass


class InputError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # usage problems exit 1, not argparse's default 2
        raise UsageError(message)


def _read_source(source: str) -> str:
    if source == "-":
        return sys.stdin.read()
    try:
        with open(source, "r", encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {source}: {exc.strerror}") from exc


def _strip_newline(raw: str) -> str:
    if raw.endswith("\r\n"):
        return raw[:-2]
    if raw.endswith("\n"):
        return raw[:-1]
    return raw


def _parse_rle_tokens(raw: str) -> list[tuple[str, int]]:
    pairs = []
    for tok in raw.split():
        ch, sep, exp_s = tok.rpartition(":")
        if not sep or len(ch) != 1:
            raise InputError(f"malformed RLE token {tok!r}; expected char:exponent")
        try:
            exp = int(exp_s)
        except ValueError:
            raise InputError(f"malformed RLE exponent in token {tok!r}") from None
        if exp < 1:
            raise InputError(f"RLE exponent must be positive in token {tok!r}")
        pairs.append((ch, exp))
    return pairs


def _load(source: str, is_rle: bool,
          alphabet: rle.AlphabetMap | None = None) -> rle.RleString:
    raw = _read_source(source)
    if is_rle:
        return rle.from_factors(_parse_rle_tokens(raw), alphabet)[0]
    return rle.encode(_strip_newline(raw), alphabet)[0]


def _load_pair(src1: str, src2: str, is_rle: bool) -> tuple[rle.RleString, rle.RleString]:
    if src1 == "-" and src2 == "-":
        raise UsageError("at most one input may come from standard input")
    r1 = _load(src1, is_rle)
    r2 = _load(src2, is_rle)
    amap = rle.AlphabetMap.from_texts(rle.decode(r1), rle.decode(r2))
    return (rle.encode(rle.decode(r1), amap)[0],
            rle.encode(rle.decode(r2), amap)[0])


def _emit(records: list[dict], tsv_fields: list[str], as_json: bool) -> None:
    if as_json:
        sys.stdout.write(json.dumps(records, sort_keys=True,
                                    separators=(",", ":")) + "\n")
    else:
        for rec in records:
            sys.stdout.write("\t".join(str(rec[f]) for f in tsv_fields) + "\n")


def _threads() -> int:
    raw = os.environ.get("ABELIAN_RLE_THREADS", "0")
    try:
        value = int(raw)
    except ValueError:
        raise UsageError(f"ABELIAN_RLE_THREADS must be an integer, got {raw!r}") from None
    if value < 0:
        raise UsageError("ABELIAN_RLE_THREADS must be >= 0")
    if value == 0:
        return min(os.cpu_count() or 1, 8)
    return value


def _pmap(fn, items):
    workers = _threads()
    if workers <= 1 or len(items) <= 1:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items))


def _square_records(runs: list[squares.SquareRun]) -> list[dict]:
    return [{"first_start": r.first_start, "last_start": r.last_start,
             "half_len": r.half_len} for r in runs]


def _period_records(ps: list[periods.RegularPeriod]) -> list[dict]:
    return [{"p": r.p, "t": r.t} for r in ps]


def _constraint_params(con: lcaf.Constraint) -> str:
    parts = []
    if con.c is not None:
        parts.append(f"c={con.c}")
    if con.x0 is not None:
        parts.append(f"x0={con.x0}")
    if con.y0 is not None:
        parts.append(f"y0={con.y0}")
    return ",".join(parts) if parts else "-"


def _lcaf_compact_records(matches: list[lcaf.LcafMatch]) -> list[dict]:
    recs = []
    for m in sorted(matches, key=lambda m: (m.i, m.k, m.constraint.kind)):
        con = {"kind": m.constraint.kind}
        for f in ("c", "x0", "y0"):
            v = getattr(m.constraint, f)
            if v is not None:
                con[f] = v
        recs.append({"i": m.i, "k": m.k, "d": m.d,
                     "x_max": m.x_max, "y_max": m.y_max,
                     "constraint": con,
                     "kind": m.constraint.kind,
                     "params": f"x_max={m.x_max},y_max={m.y_max},"
                               + _constraint_params(m.constraint)})
    return recs


def _lcaf_expanded_records(pairs: list[tuple[int, int]], d: int) -> list[dict]:
    return [{"pos1": a, "pos2": b, "d": d} for a, b in pairs]


def _squares_half_lengths(args, n: int) -> tuple[int, int]:
    top = n // 2
    if args.d is not None:
        if args.min_d is not None or args.max_d is not None:
            raise UsageError("--d excludes --min-d/--max-d")
        if not 1 <= args.d <= top:
            raise UsageError(f"--d {args.d} out of range [1, {top}] for length {n}")
        return args.d, args.d
    lo = args.min_d if args.min_d is not None else 1
    hi = args.max_d if args.max_d is not None else top
    if lo < 1 or hi > top:
        raise UsageError(f"half-length range [{lo}, {hi}] outside [1, {top}]")
    return lo, hi


def _cmd_squares(args) -> int:
    r = _load(args.input, args.rle)
    if r.n < 2 and args.d is None and args.min_d is None and args.max_d is None:
        _emit([], ["first_start", "last_start", "half_len"], args.json)
        return 0
    lo, hi = _squares_half_lengths(args, r.n)
    per_d = _pmap(lambda d: squares.find_squares_of_length(r, d), range(lo, hi + 1))
    runs = [run for chunk in per_d for run in chunk]
    _emit(_square_records(runs), ["first_start", "last_start", "half_len"], args.json)
    return 0


def _cmd_periods(args) -> int:
    r = _load(args.input, args.rle)
    _emit(_period_records(periods.find_regular_periods(r)), ["p", "t"], args.json)
    return 0


def _cmd_lcaf(args) -> int:
    r1, r2 = _load_pair(args.file1, args.file2, args.rle)
    if r1.n == 0 or r2.n == 0:
        raise InputError("lcaf needs two non-empty strings")
    length, matches = lcaf.find_lcaf(r1, r2, all_lengths=args.all_lengths)
    if args.expand:
        pairs = lcaf.expand_matches(matches)
        _emit(_lcaf_expanded_records(pairs, length), ["pos1", "pos2", "d"], args.json)
    else:
        _emit(_lcaf_compact_records(matches),
              ["i", "k", "d", "kind", "params"], args.json)
    return 0


def _cmd_oracle(args) -> int:
    if args.oracle_cmd == "squares":
        r = _load(args.input, args.rle)
        text = rle.decode(r)
        runs = oracles.naive_squares(text)
        if args.d is not None:
            if not 1 <= args.d <= len(text) // 2:
                raise UsageError(f"--d {args.d} out of range for length {len(text)}")
            runs = [x for x in runs if x.half_len == args.d]
        _emit(_square_records(runs), ["first_start", "last_start", "half_len"], args.json)
    elif args.oracle_cmd == "periods":
        r = _load(args.input, args.rle)
        _emit(_period_records(oracles.naive_periods(rle.decode(r))), ["p", "t"], args.json)
    else:
        r1, r2 = _load_pair(args.file1, args.file2, args.rle)
        if r1.n == 0 or r2.n == 0:
            raise InputError("lcaf needs two non-empty strings")
        length, pairs = oracles.naive_lcaf(rle.decode(r1), rle.decode(r2))
        _emit(_lcaf_expanded_records(pairs, length), ["pos1", "pos2", "d"], args.json)
    return 0


def _cmd_bench(args) -> int:
    text = bench.gen(args.gen, args.n, args.seed, sigma=args.sigma,
                     mean_run_len=args.mean_run_len)
    if args.algo == "lcaf":
        other = bench.gen(args.gen, args.n, args.seed + 1, sigma=args.sigma,
                          mean_run_len=args.mean_run_len)
        inputs: tuple = (text, other)
        m = rle.encode(text)[0].m + rle.encode(other)[0].m
    else:
        inputs = (text,)
        m = rle.encode(text)[0].m
    t0 = time.perf_counter_ns()
    _result, counters = bench.run_instrumented(args.algo, *inputs)
    wall_ns = time.perf_counter_ns() - t0
    row = [args.algo, args.n, m, args.sigma, args.seed, wall_ns,
           counters.window_jumps, counters.segment_pairs, counters.parikh_entry_ops]
    if args.csv:
        sys.stdout.write("algo,n,m,sigma,seed,wall_ns,window_jumps,"
                         "segment_pairs,parikh_entry_ops\n")
        sys.stdout.write(",".join(str(v) for v in row) + "\n")
    else:
        sys.stdout.write(
            f"algo={args.algo} n={args.n} m={m} sigma={args.sigma} seed={args.seed} "
            f"wall_ns={wall_ns} window_jumps={counters.window_jumps} "
            f"segment_pairs={counters.segment_pairs} "
            f"parikh_entry_ops={counters.parikh_entry_ops}\n")
    return 0


def _add_format_flags(p: argparse.ArgumentParser) -> None:
    fmt = p.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true", help="emit a JSON array of records")
    fmt.add_argument("--tsv", dest="json", action="store_false",
                     help="emit tab-separated records (default)")
    p.set_defaults(json=False)


def _add_single_input(p: argparse.ArgumentParser) -> None:
    p.add_argument("positional_input", nargs="?", default=None, metavar="FILE|-",
                   help="input file, or - for standard input (default -)")
    p.add_argument("--input", default=None, help="alternative way to name the input")
    p.add_argument("--rle", action="store_true",
                   help="input is whitespace-separated char:exponent tokens")


def _resolve_single_input(args) -> None:
    if args.positional_input is not None and args.input is not None:
        raise UsageError("input named both positionally and with --input")
    args.input = args.positional_input if args.positional_input is not None \
        else (args.input if args.input is not None else "-")


def build_parser() -> _Parser:
    top = _Parser(prog="abelian-rle",
                  description="Abelian regularities of strings, accelerated "
                              "by run-length encoding")
    sub = top.add_subparsers(dest="cmd", required=True)

    p = sub.add_parser("squares", parents=[], help="all Abelian squares")
    _add_single_input(p)
    p.add_argument("--d", type=int, default=None, help="single half length")
    p.add_argument("--min-d", type=int, default=None)
    p.add_argument("--max-d", type=int, default=None)
    _add_format_flags(p)
    p.set_defaults(fn=_cmd_squares)

    p = sub.add_parser("periods", help="all regular Abelian periods")
    _add_single_input(p)
    _add_format_flags(p)
    p.set_defaults(fn=_cmd_periods)

    p = sub.add_parser("lcaf", help="longest common Abelian factors of two strings")
    p.add_argument("file1", metavar="FILE1")
    p.add_argument("file2", metavar="FILE2")
    p.add_argument("--rle", action="store_true")
    p.add_argument("--all-lengths", action="store_true",
                   help="scan every window length instead of stopping at the first hit")
    p.add_argument("--expand", action="store_true",
                   help="emit every position pair instead of compact matches")
    _add_format_flags(p)
    p.set_defaults(fn=_cmd_lcaf)

    p = sub.add_parser("oracle", help="brute-force reference implementations")
    osub = p.add_subparsers(dest="oracle_cmd", required=True)
    q = osub.add_parser("squares")
    _add_single_input(q)
    q.add_argument("--d", type=int, default=None)
    _add_format_flags(q)
    q.set_defaults(fn=_cmd_oracle)
    q = osub.add_parser("periods")
    _add_single_input(q)
    _add_format_flags(q)
    q.set_defaults(fn=_cmd_oracle)
    q = osub.add_parser("lcaf")
    q.add_argument("file1", metavar="FILE1")
    q.add_argument("file2", metavar="FILE2")
    q.add_argument("--rle", action="store_true")
    _add_format_flags(q)
    q.set_defaults(fn=_cmd_oracle)

    p = sub.add_parser("bench", help="generate input and report work counters")
    p.add_argument("--algo", required=True,
                   choices=["squares", "periods", "lcaf", "naive_squares"])
    p.add_argument("--gen", required=True, choices=["unary", "random", "runs"])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--sigma", type=int, default=2)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--mean-run-len", type=float, default=8.0)
    p.add_argument("--csv", action="store_true")
    p.set_defaults(fn=_cmd_bench)

    return top


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if hasattr(args, "positional_input"):
            _resolve_single_input(args)
        if args.cmd == "bench":
            try:
                return args.fn(args)
            except ValueError as exc:
                raise UsageError(str(exc)) from exc
        return args.fn(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except InputError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return 2


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
