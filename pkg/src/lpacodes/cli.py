"""Command-line front end.

Exit codes are part of the contract:

  0  success
  2  usage problem: bad flags, malformed word file, infeasible parameters
  3  corrupt codeword encountered while decoding
  4  a checked constraint or invariant was violated (invalid word found,
     formula/enumeration mismatch, mean-step bound exceeded)
  5  requested work exceeds the enumeration budget

Word files hold one word per line: contiguous digits for q <= 10,
comma-separated integers for larger alphabets.  Blank lines and lines
starting with '#' are ignored.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

import numpy as np

from . import cardinality, codec, segmented
from .cardinality import CountQuery, Family
from .errors import BudgetExceededError, CorruptCodewordError
from .periodicity import Word, first_violation

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_CORRUPT = 3
EXIT_VIOLATION = 4
EXIT_BUDGET = 5


class WordFileError(ValueError):
    """A word file did not parse."""


def read_words(path: str, q: int, expected_len: int | None = None) -> list[Word]:
    words = []
    for lineno, raw in enumerate(Path(path).read_text().splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        try:
            word = Word.from_text(line, q)
        except ValueError as exc:
            raise WordFileError(f"{path}:{lineno}: {exc}") from exc
        if expected_len is not None and len(word) != expected_len:
            raise WordFileError(
                f"{path}:{lineno}: expected {expected_len} symbols, got {len(word)}"
            )
        words.append(word)
    return words


def _emit(lines: list[str], path: str | None) -> None:
    text = "\n".join(lines) + ("\n" if lines else "")
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_text(text)


def _print_report(pairs: list[tuple[str, object]], as_json: bool) -> None:
    if as_json:
        print(json.dumps(dict(pairs)))
    else:
        for key, value in pairs:
            print(f"{key}={value}")


def _seed_to_int(seed: str) -> int:
    try:
        return int(seed)
    except ValueError:
        import zlib

        return zlib.crc32(seed.encode("utf-8"))


# ---------------------------------------------------------------- commands


def cmd_params(args) -> int:
    params = codec.derive_params(args.q, args.n, args.p)
    feasible = cardinality.min_window_feasible(args.q, args.n + 1, args.p)
    _print_report(
        [
            ("q", params.q),
            ("n", params.n),
            ("p", params.p),
            ("l", params.l),
            ("index_width", params.index_width),
            ("redundancy", 1),
            ("min_feasible_l", feasible),
            ("gap", params.l - feasible),
        ],
        args.json,
    )
    return EXIT_OK


def cmd_encode(args) -> int:
    params = codec.derive_params(args.q, args.n, args.p)
    words = read_words(args.infile, args.q, expected_len=args.n)
    lines: list[str] = []
    for i, x in enumerate(words, start=1):
        y, trace = codec.encode(x, params)
        if args.trace:
            for j, step in enumerate(trace.steps, start=1):
                lines.append(
                    f"# word={i} step={j} index={step.index} "
                    f"period={step.least_period} kernel={step.kernel.to_text()}"
                )
        lines.append(y.to_text())
    _emit(lines, args.outfile)
    return EXIT_OK


def cmd_decode(args) -> int:
    params = codec.derive_params(args.q, args.n, args.p)
    words = read_words(args.infile, args.q, expected_len=args.n + 1)
    lines: list[str] = []
    corrupt = False
    for y in words:
        try:
            lines.append(codec.decode(y, params).to_text())
        except CorruptCodewordError as exc:
            lines.append(f"!corrupt {exc}")
            corrupt = True
    _emit(lines, args.outfile)
    return EXIT_CORRUPT if corrupt else EXIT_OK


def cmd_check(args) -> int:
    if args.rll is None and (args.l is None or args.p is None):
        print("check: need either --l and --p, or --rll K", file=sys.stderr)
        return EXIT_USAGE
    words = read_words(args.infile, args.q)
    bad = False
    for w in words:
        if args.rll is not None:
            index = _first_zero_run(w, args.rll)
            if index is None:
                print("valid")
            else:
                print(f"invalid index={index}")
                bad = True
        else:
            violation = first_violation(w, args.l, args.p)
            if violation is None:
                print("valid")
            else:
                print(
                    f"invalid index={violation.index} "
                    f"period={violation.least_period}"
                )
                bad = True
    return EXIT_VIOLATION if bad else EXIT_OK


def _first_zero_run(w: Word, k: int) -> int | None:
    if k < 1:
        raise ValueError("run length must be at least 1")
    run = 0
    for i, s in enumerate(w.symbols.tolist()):
        if s == 0:
            run += 1
            if run >= k:
                return i - k + 1
        else:
            run = 0
    return None


def cmd_count(args) -> int:
    family = Family(args.family)
    query = CountQuery(family, args.q, args.n, l=args.l, p=args.p, k=args.k)
    report = cardinality.build_report(
        query,
        include_exact=args.mode in ("brute", "both"),
        include_formula=args.mode in ("formula", "both"),
        budget=args.budget,
    )
    pairs: list[tuple[str, object]] = [
        ("family", family.value),
        ("q", args.q),
        ("n", args.n),
    ]
    if family is Family.RLL:
        pairs.append(("k", args.k))
    else:
        pairs.extend([("l", args.l), ("p", args.p)])
    pairs.extend(
        [
            ("exact", report.exact),
            ("formula", report.formula),
            ("lower_bound", report.lower_bound),
            ("upper_bound", report.upper_bound),
            ("provenance", report.provenance),
        ]
    )
    problems = report.violations()
    if args.mode == "both":
        pairs.append(("consistent", not problems))
    _print_report(pairs, args.json)
    for problem in problems:
        print(f"violation: {problem}", file=sys.stderr)
    return EXIT_VIOLATION if problems else EXIT_OK


def cmd_stats(args) -> int:
    params = codec.derive_params(args.q, args.n, args.p)
    if args.exhaustive:
        cost = args.q**args.n
        if cost > args.budget:
            raise BudgetExceededError(
                f"exhaustive statistics over {args.q}**{args.n} = {cost} words "
                f"exceed the budget of {args.budget}",
                cost=cost,
                budget=args.budget,
            )
        source = cardinality.all_words(args.q, args.n)
    elif args.infile is not None:
        source = read_words(args.infile, args.q, expected_len=args.n)
        if not source:
            print("stats: input file holds no words", file=sys.stderr)
            return EXIT_USAGE
    else:
        if args.samples < 1:
            print("stats: need at least one sample", file=sys.stderr)
            return EXIT_USAGE
        rng = np.random.default_rng(_seed_to_int(args.seed))
        source = (
            Word(rng.integers(0, args.q, size=args.n, dtype=np.int64), args.q)
            for _ in range(args.samples)
        )
    stats = codec.step_statistics(params, source)
    mean_bound = args.q - 1
    pairs = [
        ("q", args.q),
        ("n", args.n),
        ("p", args.p),
        ("l", params.l),
        ("words", stats.total_words),
        ("mean_steps", float(stats.mean_steps)),
        ("mean_steps_exact", str(stats.mean_steps)),
        ("max_steps", stats.max_steps),
        ("histogram", {str(k): v for k, v in stats.histogram.items()}),
        ("mean_bound", mean_bound),
    ]
    exceeded = args.exhaustive and stats.mean_steps > mean_bound
    pairs.append(("mean_bound_satisfied", not exceeded))
    _print_report(pairs, args.json)
    return EXIT_VIOLATION if exceeded else EXIT_OK


def _segmented_params(args) -> segmented.SegmentedParams:
    if args.variant == "auto":
        return segmented.select_construction(args.q, args.n, args.l, args.p).params
    return segmented.plan(args.q, args.n, args.l, args.p, segmented.Variant(args.variant))


def cmd_segmented(args) -> int:
    if args.action == "plan":
        if args.variant == "auto":
            selection = segmented.select_construction(args.q, args.n, args.l, args.p)
            sp = selection.params
            extras: list[tuple[str, object]] = [
                (
                    "candidates",
                    {
                        v.name: c.total_redundancy
                        for v, c in selection.candidates.items()
                    },
                ),
                ("notes", list(selection.notes)),
            ]
        else:
            sp = segmented.plan(
                args.q, args.n, args.l, args.p, segmented.Variant(args.variant)
            )
            extras = []
        _print_report(
            [
                ("variant", sp.variant.name),
                ("q", sp.q),
                ("n", sp.n),
                ("l", sp.l),
                ("p", sp.p),
                ("k", sp.k),
                ("segment_lengths", list(sp.segment_lengths)),
                ("segment_window", sp.base[0].l),
                ("total_redundancy", sp.total_redundancy),
            ]
            + extras,
            args.json,
        )
        return EXIT_OK

    sp = _segmented_params(args)
    if args.action == "encode":
        words = read_words(args.infile, args.q, expected_len=args.n)
        lines = [segmented.encode(x, sp).to_text() for x in words]
        _emit(lines, args.outfile)
        return EXIT_OK

    words = read_words(
        args.infile, args.q, expected_len=sp.n + sp.total_redundancy
    )
    lines = []
    corrupt = False
    for y in words:
        try:
            lines.append(segmented.decode(y, sp).to_text())
        except CorruptCodewordError as exc:
            lines.append(f"!corrupt {exc}")
            corrupt = True
    _emit(lines, args.outfile)
    return EXIT_CORRUPT if corrupt else EXIT_OK


# ----------------------------------------------------------------- parser


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lpacodes",
        description="Window-periodicity-constrained codes: encode, decode, "
        "check, count, and plan segmented layouts.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_qnp(p, with_l=False):
        p.add_argument("--q", type=int, required=True, help="alphabet size")
        p.add_argument("--n", type=int, required=True, help="message length")
        if with_l:
            p.add_argument("--l", type=int, required=True, help="window length")
        p.add_argument("--p", type=int, required=True, help="least-period target")
        p.add_argument("--json", action="store_true", help="print JSON")

    p = sub.add_parser("params", help="derive code parameters")
    add_qnp(p)
    p.set_defaults(func=cmd_params)

    p = sub.add_parser("encode", help="encode a word file")
    add_qnp(p)
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--out", dest="outfile", required=True)
    p.add_argument(
        "--trace", action="store_true", help="emit repair steps as comments"
    )
    p.set_defaults(func=cmd_encode)

    p = sub.add_parser("decode", help="decode a word file")
    add_qnp(p)
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--out", dest="outfile", required=True)
    p.set_defaults(func=cmd_decode)

    p = sub.add_parser("check", help="report the first offending window per word")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--l", type=int)
    p.add_argument("--p", type=int)
    p.add_argument("--rll", type=int, help="check zero runs of this length instead")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("count", help="count a word family")
    p.add_argument("--family", choices=["A", "B", "R"], required=True)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--l", type=int)
    p.add_argument("--p", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--mode", choices=["brute", "formula", "both"], default="both")
    p.add_argument("--budget", type=int, default=cardinality.DEFAULT_BUDGET)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("stats", help="repair-step statistics")
    add_qnp(p)
    group = p.add_mutually_exclusive_group()
    group.add_argument("--exhaustive", action="store_true")
    group.add_argument("--samples", type=int, default=0)
    group.add_argument("--in", dest="infile", help="take inputs from a word file")
    p.add_argument("--seed", default="0", help="sampling seed (any string)")
    p.add_argument("--budget", type=int, default=cardinality.DEFAULT_BUDGET)
    p.set_defaults(func=cmd_stats, infile=None)

    p = sub.add_parser("segmented", help="plan or run a segmented layout")
    p.add_argument("action", choices=["plan", "encode", "decode"])
    p.add_argument("--variant", choices=["half", "sep", "glue", "auto"], default="auto")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--in", dest="infile")
    p.add_argument("--out", dest="outfile")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_segmented)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "command", None) == "segmented" and args.action != "plan":
        if args.infile is None:
            parser.error("segmented encode/decode need --in")
    try:
        return args.func(args)
    except BudgetExceededError as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except CorruptCodewordError as exc:
        print(f"corrupt codeword: {exc}", file=sys.stderr)
        return EXIT_CORRUPT
    except (WordFileError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
