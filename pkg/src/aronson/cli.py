"""Command-line front end.

Sequences are written to stdout as b-files unless ``--bfile`` is given.
Exit status: 0 on success, 1 when a verification or generation step fails,
2 on usage errors (bad flags, unknown names, malformed specs).
"""

from __future__ import annotations

import argparse
import os
import sys

from .analysis import all_checks, average_density_constant, density_profile, verify_identity
from .bfile import format_bfile, read_bfile, write_bfile
from .core import (AronsonError, GeneratedSequence, HorizonExceeded, InvalidParameters,
                   Provenance, UnknownIdentity, UnknownSequence)
from .engine import WINDOWS, Mode, RuleSpec, generate
from .oracles import FromSequence, parse_oracle
from .registry import REGISTRY, registry_lookup, sequence_a
from .squares import SquareConstraint, solve_square
from .transform import aronson_transform, inverse_aronson, oracle_sequence, sequence_square
from .words import difference_word

SPEC_HELP = """\
inline rule specs are comma-separated key=value pairs, for example
  oracle=residue:3:0,mode=iff,n0=1,seeds=2
keys:
  oracle    odds | evens | squares | triangular | primes | wythoff |
            multiples:M | residue:Y:Z | theorem1:Y:Z | all:N0 |
            complement:<oracle> | bfile:PATH
  mode      iff (default) | onlyif | if | negated
  n0        starting index (default 1)
  seeds     forced initial terms separated by ';'
  monotone  true (default) | false
  window    {windows}
""".format(windows=" | ".join(WINDOWS))

USAGE_ERRORS = (UnknownSequence, UnknownIdentity, InvalidParameters)


class UsageError(Exception):
    pass


def parse_rule(text: str) -> RuleSpec:
    fields: dict[str, str] = {}
    for part in text.split(","):
        key, sep, value = part.partition("=")
        if not sep:
            raise UsageError(f"expected key=value in rule spec, got {part!r}")
        fields[key.strip().lower()] = value.strip()
    unknown = set(fields) - {"oracle", "mode", "n0", "seeds", "monotone", "window"}
    if unknown:
        raise UsageError(f"unknown rule key(s): {', '.join(sorted(unknown))}")
    try:
        mode = Mode(fields.get("mode", "iff").lower())
    except ValueError:
        raise UsageError(f"unknown mode {fields['mode']!r}") from None
    window = None
    if "window" in fields:
        if fields["window"] not in WINDOWS:
            raise UsageError(f"unknown window {fields['window']!r}")
        window = WINDOWS[fields["window"]]
    elif "oracle" not in fields:
        raise UsageError("rule spec needs an oracle or a window")
    try:
        n0 = int(fields.get("n0", "1"))
        seeds = tuple(int(s) for s in fields["seeds"].split(";")) if fields.get("seeds") else ()
    except ValueError:
        raise UsageError(f"non-integer n0 or seeds in {text!r}") from None
    monotone = fields.get("monotone", "true").lower()
    if monotone not in ("true", "false"):
        raise UsageError(f"monotone must be true or false, got {monotone!r}")
    oracle = parse_oracle(fields["oracle"]) if "oracle" in fields else None
    return RuleSpec(oracle=oracle, mode=mode, monotone=monotone == "true", n0=n0,
                    seeds=seeds, window=window, name="rule")


def _sequence(name: str, count: int) -> GeneratedSequence:
    if "=" in name:
        return generate(parse_rule(name), count)
    return registry_lookup(name).generate(count)


def _alpha(name: str, size: int) -> GeneratedSequence:
    """A monotone sequence by registry name, oracle spec, or b-file path."""
    if os.path.isfile(name):
        return read_bfile(name)
    try:
        return registry_lookup(name).generate(size)
    except UnknownSequence:
        pass
    try:
        oracle = parse_oracle(name)
    except InvalidParameters:
        raise UnknownSequence(f"{name!r} is not a sequence name, oracle spec or file") from None
    return oracle_sequence(oracle, size, n0=oracle.n0 if oracle.n0 > 0 else 1)


def _beta(name: str, size: int):
    try:
        return parse_oracle(name)
    except InvalidParameters:
        pass
    if os.path.isfile(name):
        return FromSequence(read_bfile(name))
    return FromSequence(registry_lookup(name).generate(size))


def _emit(seq: GeneratedSequence, args, comments=()) -> None:
    if args.bfile:
        write_bfile(seq, args.bfile, comments)
    else:
        sys.stdout.write(format_bfile(seq, comments))


def cmd_gen(args) -> int:
    seq = _sequence(args.name, args.count)
    _emit(seq, args, [str(seq.provenance)])
    return 0


def cmd_transform(args) -> int:
    size = 4 * args.count + 64
    while True:
        try:
            seq = aronson_transform(_beta(args.beta, size), args.n0, args.count)
            break
        except HorizonExceeded:
            if os.path.isfile(args.beta) or "=" in args.beta:
                raise
            size *= 2
    _emit(seq, args, [f"Aronson transform of {args.beta}"])
    return 0


def cmd_inverse(args) -> int:
    if os.path.isfile(args.alpha):
        seq = inverse_aronson(read_bfile(args.alpha), args.count)
    else:
        size = args.count + 16
        while True:
            try:
                seq = inverse_aronson(_alpha(args.alpha, size), args.count)
                break
            except HorizonExceeded:
                size *= 2
    _emit(seq, args, [f"inverse Aronson transform of {args.alpha}"])
    return 0


def cmd_square(args) -> int:
    size = args.count
    while True:
        try:
            seq = sequence_square(_sequence(args.seq, size), args.count)
            break
        except HorizonExceeded:
            if size > 1 << 22:
                raise
            size *= 2
    _emit(seq, args, [f"square of {args.seq}"])
    return 0


def cmd_solve_square(args) -> int:
    forced = []
    for item in args.seed or ():
        n, sep, v = item.partition("=")
        try:
            forced.append((int(n), int(v)))
        except ValueError:
            raise UsageError(f"--seed expects n=v, got {item!r}") from None
    con = SquareConstraint(args.y, args.z, args.n0, tuple(forced), args.start)
    seq = solve_square(con, args.count)
    _emit(seq, args, [str(seq.provenance)])
    return 0


def cmd_diff(args) -> int:
    seq = _sequence(args.seq, args.count + 1)
    word = difference_word(seq)
    out = GeneratedSequence(seq.n0, tuple(word),
                            Provenance(f"differences of {args.seq}", monotone=False))
    _emit(out, args, [f"first differences of {args.seq}"])
    return 0


def cmd_verify(args) -> int:
    names = all_checks() if args.identity == "all" else [args.identity]
    failed = 0
    for name in names:
        report = verify_identity(name, args.horizon)
        print(report)
        failed += not report.passed
    return 1 if failed else 0


def cmd_stats(args) -> int:
    k = args.segment
    seq = sequence_a((12 << k) - 3)
    p = density_profile(seq, k)
    print(f"segment {k}: indices {p.indices.start}..{p.indices.stop - 1}")
    print(f"max n/a(n) {float(p.max_ratio):.6f} at n={p.argmax} ({p.max_ratio})")
    print(f"min n/a(n) {float(p.min_ratio):.6f} at n={p.argmin} ({p.min_ratio})")
    print(f"boundary ratios {float(p.first_ratio):.6f} {float(p.last_ratio):.6f}")
    print(f"mean n/a(n) {p.mean_ratio:.6f} (stride {p.stride}); limit {average_density_constant():.6f}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="aronson", description="Self-referential integer sequences.",
        epilog=SPEC_HELP, formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = parser.add_subparsers(dest="command", required=True)

    def positive(text):
        try:
            v = int(text)
        except ValueError:
            raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
        if v < 1:
            raise argparse.ArgumentTypeError(f"must be >= 1, got {v}")
        return v

    def add(name, fn, help_text, count=True):
        p = sub.add_parser(name, help=help_text, epilog=SPEC_HELP,
                           formatter_class=argparse.RawDescriptionHelpFormatter)
        p.set_defaults(func=fn)
        if count:
            p.add_argument("--count", type=positive, default=20)
            p.add_argument("--bfile", help="write a b-file here instead of stdout")
        return p

    p = add("gen", cmd_gen, "generate a named sequence or an inline rule")
    p.add_argument("name", help=f"one of {', '.join(REGISTRY)}, f(y,z), or an inline rule spec")
    p = add("transform", cmd_transform, "Aronson transform of an oracle or sequence")
    p.add_argument("--beta", required=True)
    p.add_argument("--n0", type=int, default=1)
    p = add("inverse", cmd_inverse, "inverse Aronson transform")
    p.add_argument("--alpha", required=True, help="sequence name, oracle spec, or b-file path")
    p = add("square", cmd_square, "the square s(s(n)) of a sequence")
    p.add_argument("--seq", required=True)
    p = add("solve-square", cmd_solve_square, "least increasing solution of s(s(n)) = yn+z")
    p.add_argument("--y", type=int, required=True)
    p.add_argument("--z", type=int, required=True)
    p.add_argument("--n0", type=int, default=1)
    p.add_argument("--start", type=int, help="first n where the constraint applies (default n0)")
    p.add_argument("--seed", action="append", metavar="N=V")
    p = add("diff", cmd_diff, "first differences of a sequence")
    p.add_argument("--seq", required=True)
    p = add("verify", cmd_verify, "run identity checks", count=False)
    p.add_argument("identity", help="identity name, registry:<name>, or 'all'")
    p.add_argument("--horizon", type=positive, default=10_000)
    p = add("stats", cmd_stats, "statistics", count=False)
    p.add_argument("what", choices=["density"])
    p.add_argument("--segment", type=int, default=10)
    return parser


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"{parser.prog}: error: {exc}", file=sys.stderr)
        return 2
    except USAGE_ERRORS as exc:
        print(f"{parser.prog}: error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    except AronsonError as exc:
        print(f"{parser.prog}: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run())
