"""Command line entry point.

Subcommands: resolve (build a complex and serialize it), verify (strand
exactness of an ideal or a complex file), betti, homotopy (identity checks),
report (CSV tables plus figures), selftest.  Exit codes: 0 success, 1 a
verification or identity check failed, 2 unusable input.
"""
from __future__ import annotations

import argparse
import json
import random
import re
import sys

from .errors import CapacityError, ParseError, SdrInvariantError
from .reduction import build_lyubeznik
from .report import build_report_data, write_report
from .selftest import homotopy_check, run_selftest, sdr_check, splitting_check
from .serialize import (dumps_complex, loads_complex, looks_like_complex,
                        parse_ideal)
from .taylor import build_taylor
from .verify import betti_numbers, check_d_squared, check_exactness


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from None


def _taylor_from_ideal(text: str, force: bool):
    ideal = parse_ideal(text)
    return build_taylor(ideal.context, ideal.monomials, force=force)


def _load_any_complex(path: str, force: bool):
    """A complex file is taken as is; anything else is parsed as an ideal
    and expanded to its full complex."""
    text = _read(path)
    if looks_like_complex(text):
        complex_, _ = loads_complex(text)
        return complex_
    return _taylor_from_ideal(text, force)


def _cmd_resolve(args) -> int:
    complex_ = _taylor_from_ideal(_read(args.infile), args.force)
    report = None
    if args.kind == "lyubeznik":
        complex_, report = build_lyubeznik(complex_, "forward")
    elif args.kind == "lyubeznik-reverse":
        complex_, report = build_lyubeznik(complex_, "reverse")
    print(f"ranks {json.dumps(list(complex_.ranks()))}")
    if args.out:
        payload = dumps_complex(complex_, report)
        if args.out == "-":
            sys.stdout.write(payload)
        else:
            with open(args.out, "w", encoding="utf-8") as fh:
                fh.write(payload)
    return 0


def _cmd_verify(args) -> int:
    complex_ = _load_any_complex(args.infile, args.force)
    ok = True
    if not check_d_squared(complex_):
        print("d^2 != 0", file=sys.stderr)
        ok = False
    rng = random.Random(args.seed) if args.strands else None
    result = check_exactness(complex_, samples=args.strands, rng=rng)
    for failure in result.failures():
        note = failure.note or f"homology {list(failure.homology)}"
        print(f"strand {failure.mu.format(complex_.context)}: {note}",
              file=sys.stderr)
    if not result.ok:
        ok = False
    print(f"checked {len(result.checks)} strands: "
          f"{'all exact' if ok else 'FAILED'}")
    return 0 if ok else 1


def _cmd_betti(args) -> int:
    complex_ = _load_any_complex(args.infile, args.force)
    print(json.dumps(betti_numbers(complex_)))
    return 0


def _cmd_homotopy(args) -> int:
    complex_ = _taylor_from_ideal(_read(args.infile), args.force)
    if args.check == "psi":
        message = homotopy_check(complex_, "forward", seed=args.seed)
    elif args.check == "psi-r":
        message = homotopy_check(complex_, "reverse", seed=args.seed)
    elif args.check == "phi":
        message = (splitting_check(complex_, "forward", seed=args.seed)
                   or splitting_check(complex_, "reverse", seed=args.seed))
    else:
        message = sdr_check(complex_)
    if message:
        print(f"check {args.check}: {message}", file=sys.stderr)
        return 1
    print(f"check {args.check}: ok")
    return 0


def _cmd_report(args) -> int:
    ideal = parse_ideal(_read(args.infile))
    data = build_report_data(ideal.context, ideal.monomials, force=args.force)
    for path in write_report(data, args.out_dir):
        print(path)
    return 0 if data["exactness"].ok else 1


def _cmd_selftest(args) -> int:
    ok = run_selftest(args.trials, args.r, args.n, args.maxdeg, args.seed)
    return 0 if ok else 1


def _strand_count(value: str) -> int:
    if value == "lcm":
        return 0
    match = re.fullmatch(r"lcm\+random:(\d+)", value)
    if not match:
        raise argparse.ArgumentTypeError(
            "expected 'lcm' or 'lcm+random:N'")
    return int(match.group(1))


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="monores",
        description="Resolutions of monomial ideals: build, prune, verify.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p):
        p.add_argument("--in", dest="infile", required=True,
                       help="input file, or - for stdin")
        p.add_argument("--force", action="store_true",
                       help="allow more than 12 generators")

    p = sub.add_parser("resolve", help="build a complex and print its ranks")
    add_common(p)
    p.add_argument("--kind", choices=("taylor", "lyubeznik",
                                      "lyubeznik-reverse"), default="taylor")
    p.add_argument("--out", help="write the complex as JSON (- for stdout)")
    p.add_argument("--order", choices=("lex", "grlex", "grevlex"),
                   default="lex",
                   help="base term order (the built complex does not depend "
                        "on it; accepted for symmetry with the checks)")
    p.set_defaults(func=_cmd_resolve)

    p = sub.add_parser("verify", help="check strand exactness")
    add_common(p)
    p.add_argument("--strands", type=_strand_count, default=0,
                   metavar="lcm|lcm+random:N",
                   help="test set: the lcm lattice, optionally plus N "
                        "random multiples")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("betti", help="Betti numbers of the resolved ideal")
    add_common(p)
    p.set_defaults(func=_cmd_betti)

    p = sub.add_parser("homotopy", help="run homotopy identity checks")
    add_common(p)
    p.add_argument("--check", choices=("psi", "psi-r", "phi", "sdr"),
                   required=True)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=_cmd_homotopy)

    p = sub.add_parser("report", help="write CSV tables and figures")
    add_common(p)
    p.add_argument("--out-dir", required=True)
    p.set_defaults(func=_cmd_report)

    p = sub.add_parser("selftest", help="randomized invariant suite")
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--r", type=int, default=5)
    p.add_argument("--n", type=int, default=3)
    p.add_argument("--maxdeg", type=int, default=4)
    p.add_argument("--seed", type=int, default=42)
    p.set_defaults(func=_cmd_selftest)
    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except CapacityError as exc:
        print(f"error: {exc} (use --force)", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except SdrInvariantError as exc:
        print(f"invariant failure: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
