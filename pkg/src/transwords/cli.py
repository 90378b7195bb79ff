"""Command line front end.

Exit status: 0 success or true verdict, 1 false verdict, 2 usage error,
3 undecided or resource limit, 4 internal error.
"""

from __future__ import annotations

import argparse
import sys
from typing import Optional, Sequence

from .extendability import NotExtendable, Status, enumerate_words, left_extendable, right_extendable
from .gamma import GammaWitness, check_gamma
from .generators import relabel, theta_word, thue_morse
from .repetition import is_power_free, max_factor_exponent
from .transition import (
    Config,
    InternalError,
    StageError,
    TransitionBuilder,
    minimal_transition_oracle,
)
from .words import (
    PowerBound,
    ResourceLimit,
    Undecided,
    UnsupportedParameters,
    WordError,
    decode,
    encode,
)

EXIT_OK, EXIT_FALSE, EXIT_USAGE, EXIT_UNDECIDED, EXIT_INTERNAL = 0, 1, 2, 3, 4

GENERATORS = {"thue-morse": thue_morse, "theta": theta_word}


class UsageError(Exception):
    pass


def parse_power_bound(text: str) -> PowerBound:
    try:
        return PowerBound.parse(text)
    except WordError as exc:
        raise UsageError(str(exc)) from None


def parse_map(text: str) -> dict:
    out = {}
    try:
        for item in text.split(","):
            a, b = item.split(":")
            out[decode(a)[0]] = decode(b)[0]
    except (ValueError, IndexError, WordError):
        raise UsageError(f"malformed relabel map {text!r}; expected e.g. 0:1,1:2") from None
    return out


def _emit(out, quiet: bool, pairs: Sequence[tuple], bare: str) -> None:
    if quiet:
        print(bare, file=out)
    else:
        for key, val in pairs:
            print(f"{key}: {val}", file=out)


def _word(args, name: str):
    return decode(getattr(args, name), getattr(args, "k", None))


def cmd_check(args, out) -> int:
    bound = parse_power_bound(args.alpha)
    ok = is_power_free(_word(args, "word"), bound)
    verdict = "true" if ok else "false"
    _emit(out, args.quiet, [("power-free", verdict)], verdict)
    return EXIT_OK if ok else EXIT_FALSE


def cmd_maxexp(args, out) -> int:
    w = _word(args, "word")
    rep = max_factor_exponent(w)
    print(f"{rep.max_exponent} period={rep.witness_period}", file=out)
    if not args.quiet:
        s, e = rep.witness_span
        print(f"witness: {encode(rep.witness(w))}", file=out)
        print(f"span: {s} {e}", file=out)
    return EXIT_OK


def cmd_generate(args, out) -> int:
    t = GENERATORS[args.word]()
    if args.relabel:
        t = relabel(t, parse_map(args.relabel))
    print(encode(t.prefix(args.length)), file=out)
    return EXIT_OK


def cmd_enumerate(args, out) -> int:
    bound = parse_power_bound(args.alpha)
    words = enumerate_words(args.k, bound, args.length, jobs=args.jobs)
    if args.count_only or args.quiet:
        print(len(words) if args.quiet else f"count: {len(words)}", file=out)
    else:
        for w in words:
            print(encode(w), file=out)
        print(f"count: {len(words)}", file=out)
    return EXIT_OK


def cmd_extendable(args, out) -> int:
    bound = parse_power_bound(args.alpha)
    probe = right_extendable if args.side == "right" else left_extendable
    v = probe(_word(args, "word"), args.k, bound, args.depth)
    pairs = [("status", v.status.value), ("depth", v.depth)]
    if v.witness is not None:
        pairs.append(("witness", encode(v.witness)))
    _emit(out, args.quiet, pairs, v.status.value)
    return {Status.EXTENDABLE: EXIT_OK, Status.NOT_EXTENDABLE: EXIT_FALSE}.get(v.status, EXIT_UNDECIDED)


def cmd_gamma_check(args, out) -> int:
    bound = parse_power_bound(args.alpha)
    t = GENERATORS[args.t]()
    if args.relabel:
        t = relabel(t, parse_map(args.relabel))
    x = decode(args.x, args.k)
    if len(x) != 1:
        raise UsageError("--x must be a single letter")
    wit = GammaWitness(_word(args, "w1"), _word(args, "w2"), x[0], _word(args, "g"), t)
    report = check_gamma(wit, args.k, bound)
    for line in report.lines():
        print(line, file=out)
    if not args.quiet:
        print(f"y: {encode((report.y,))}", file=out)
        print(f"strict: {'true' if report.strict_count else 'false'}", file=out)
        print(f"valid: {'true' if report.valid else 'false'}", file=out)
    return EXIT_OK if report.valid else EXIT_FALSE


def cmd_transition(args, out) -> int:
    bound = parse_power_bound(args.alpha)
    config = Config(letter=decode(args.letter, args.k)[0] if args.letter else None,
                    probe_depth=args.depth)
    cert = TransitionBuilder(args.k, bound, config).build(_word(args, "u"), _word(args, "v"))
    text = cert.to_text()
    if args.emit_certificate:
        with open(args.emit_certificate, "w") as fh:
            fh.write(text)
    if args.quiet:
        print(encode(cert.w), file=out)
    else:
        out.write(text)
    return EXIT_OK


def cmd_oracle(args, out) -> int:
    bound = parse_power_bound(args.alpha)
    w = minimal_transition_oracle(_word(args, "u"), _word(args, "v"), args.k, bound, args.max_len)
    shown = "none" if w is None else encode(w)
    _emit(out, args.quiet, [("w", shown)], shown)
    return EXIT_FALSE if w is None else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="transwords", description="Power-free words and transition words.")
    p.add_argument("--quiet", action="store_true", help="print bare verdicts only")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("check", help="is the word power-free?")
    s.add_argument("--alpha", required=True)
    s.add_argument("--word", required=True)
    s.add_argument("--k", type=int)
    s.set_defaults(func=cmd_check)

    s = sub.add_parser("maxexp", help="largest factor exponent")
    s.add_argument("--word", required=True)
    s.set_defaults(func=cmd_maxexp)

    s = sub.add_parser("generate", help="prefix of a morphic word")
    s.add_argument("--word", choices=sorted(GENERATORS), required=True)
    s.add_argument("--length", type=int, required=True)
    s.add_argument("--relabel")
    s.set_defaults(func=cmd_generate)

    s = sub.add_parser("enumerate", help="all power-free words of a length")
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--alpha", required=True)
    s.add_argument("--length", type=int, required=True)
    s.add_argument("--count-only", action="store_true")
    s.add_argument("--jobs", type=int, default=1)
    s.set_defaults(func=cmd_enumerate)

    s = sub.add_parser("extendable", help="bounded-depth extendability probe")
    s.add_argument("--side", choices=("left", "right"), required=True)
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--alpha", required=True)
    s.add_argument("--word", required=True)
    s.add_argument("--depth", type=int, default=64)
    s.set_defaults(func=cmd_extendable)

    s = sub.add_parser("gamma-check", help="evaluate the eight splice-witness properties")
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--alpha", required=True)
    s.add_argument("--w1", default="")
    s.add_argument("--w2", default="")
    s.add_argument("--x", required=True)
    s.add_argument("--g", default="")
    s.add_argument("--t", choices=sorted(GENERATORS), required=True)
    s.add_argument("--relabel")
    s.set_defaults(func=cmd_gamma_check)

    s = sub.add_parser("transition", help="construct a transition word with certificate")
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--alpha", required=True)
    s.add_argument("--u", default="")
    s.add_argument("--v", default="")
    s.add_argument("--letter", help="shared letter x (default: largest letter)")
    s.add_argument("--depth", type=int, default=64, help="extendability probe depth")
    s.add_argument("--emit-certificate", metavar="PATH")
    s.set_defaults(func=cmd_transition)

    s = sub.add_parser("oracle", help="shortest transition word by brute force")
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--alpha", required=True)
    s.add_argument("--u", default="")
    s.add_argument("--v", default="")
    s.add_argument("--max-len", type=int, required=True)
    s.set_defaults(func=cmd_oracle)
    return p


def run(argv: Optional[Sequence[str]] = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args, out)
    except (UsageError, WordError, UnsupportedParameters) as exc:
        print(f"error: {exc}", file=err)
        return EXIT_USAGE
    except NotExtendable as exc:
        print(f"not extendable: {exc}", file=err)
        return EXIT_FALSE
    except (Undecided, ResourceLimit) as exc:
        print(f"undecided: {exc}", file=err)
        return EXIT_UNDECIDED
    except StageError as exc:
        print(f"error: {exc}", file=err)
        return EXIT_UNDECIDED if isinstance(exc.cause, Undecided) else EXIT_INTERNAL
    except InternalError as exc:
        print(f"internal error: {exc}", file=err)
        return EXIT_INTERNAL


def main() -> None:
    sys.exit(run())
