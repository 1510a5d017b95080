"""Command-line front end.

Exit codes: 0 success/PASS, 1 verification FAIL (or a witness found under
``--expect-none``), 2 usage or parse error.
"""
from __future__ import annotations

import argparse
import json
import logging
import sys
from fractions import Fraction

from . import _kernels
from .carpi import apply_f, carpi_params, f_image
from .kernel import SearchExhausted, generate_kernel_avoiding, scan_kernel_repetitions
from .pansiot import gamma
from .verify import TARGET_RANGE, legacy_exhaustive, verify_range, verify_stabilizer_freeness
from .words import BinaryWord, ParseError, Word, has_factor_exceeding, max_exponent_factor


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _read_word_arg(text: str) -> str:
    if text == "-":
        return sys.stdin.read().strip()
    return text


def _fraction(text: str) -> Fraction:
    try:
        value = Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"threshold must be >= 1: {text!r}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="dejean", description=__doc__.splitlines()[0])
    parser.add_argument("--json", action="store_true", help="machine-readable output")
    parser.add_argument("-v", "--verbose", action="store_true")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", dest="sub_json", help="machine-readable output")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, **kw):
        return sub.add_parser(name, parents=[common], **kw)

    p = add("verify", help="exhaustive short-stabilizer search for n in 27..29")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--n", type=int)
    group.add_argument("--all", action="store_true", help="run n = 27, 28, 29")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--legacy-exhaustive", action="store_true",
                   help="unreduced search (all lengths < (n-1)^2, all k) on one triple")
    p.add_argument("--triple", default="111", help="triple for --legacy-exhaustive")
    p.add_argument("--override-range", action="store_true")
    p.add_argument("--dedup", action="store_true", help="skip factors already seen")
    p.add_argument("--no-timing", action="store_true", help="omit elapsed time for byte-stable output")

    p = add("exponent", help="maximal exponent of a word's factors")
    p.add_argument("word")
    p.add_argument("--alphabet", help="'binary' or an alphabet size 1..9 (digits); default: any symbols")
    p.add_argument("--threshold", type=_fraction)
    p.add_argument("--expect-none", action="store_true")

    p = add("gamma", help="Pansiot coding of a binary word")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("bits")

    p = add("f-image", help="image of a letter or word under f")
    p.add_argument("--n", type=int, required=True)
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--letter", type=int)
    group.add_argument("--word")

    p = add("kernel-scan", help="list kernel repetitions in a word")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("word")

    p = add("kernel-generate", help="backtracking search for a kernel-repetition-free word")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--length", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)

    p = add("params", help="parameters of f for a given n")
    p.add_argument("--n", type=int, required=True)
    return parser


def _emit(obj, as_json: bool, text: str):
    print(json.dumps(obj) if as_json else text)


def _cmd_verify(args, as_json):
    if args.jobs < 1:
        raise UsageError("--jobs must be positive")
    if args.legacy_exhaustive:
        triple = Word.parse(args.triple).letters
        n = args.n if args.n is not None else TARGET_RANGE[0]
        hit = legacy_exhaustive(n, triple, args.override_range)
        payload = {"n": n, "triple": args.triple, "witness": list(hit) if hit else None,
                   "status": "FAIL" if hit else "PASS"}
        text = f"n={n} triple={args.triple} " + (
            f"witness start={hit[0]} length={hit[1]} k={hit[2]} status=FAIL" if hit else "status=PASS")
        _emit(payload, as_json, text)
        return 1 if hit else 0
    if args.all:
        reports = verify_range(*TARGET_RANGE, args.jobs, args.override_range)
    else:
        reports = [verify_stabilizer_freeness(args.n, args.jobs, args.override_range, args.dedup)]
    timing = not args.no_timing
    if as_json:
        dicts = [r.to_dict(timing) for r in reports]
        print(json.dumps(dicts if args.all else dicts[0], indent=2))
    else:
        for r in reports:
            if not timing:
                r.elapsed_seconds = None
            print(r.summary())
    return 0 if all(r.status == "PASS" for r in reports) else 1


def _parse_any(text: str, alphabet):
    if alphabet is None:
        return text
    if alphabet == "binary":
        return BinaryWord.parse(text)
    try:
        sigma = int(alphabet)
    except ValueError:
        raise UsageError(f"--alphabet must be 'binary' or 1..9, got {alphabet!r}") from None
    return Word.parse(text, sigma)


def _cmd_exponent(args, as_json):
    w = _parse_any(_read_word_arg(args.word), args.alphabet)
    if not len(w):
        raise UsageError("empty word")
    if args.threshold is None:
        exp, wit = max_exponent_factor(w)
        _emit({"exponent": str(exp), "start": wit.start, "length": wit.length, "period": wit.period},
              as_json, str(wit))
        return 0
    wit = has_factor_exceeding(w, args.threshold)
    if wit is None:
        _emit({"threshold": str(args.threshold), "witness": None}, as_json, "none")
        return 0
    _emit({"threshold": str(args.threshold),
           "witness": {"exponent": str(wit.exponent), "start": wit.start,
                       "length": wit.length, "period": wit.period}},
          as_json, str(wit))
    return 1 if args.expect_none else 0


def _cmd_gamma(args, as_json):
    word = gamma(BinaryWord.parse(_read_word_arg(args.bits)), args.n)
    _emit(list(word.letters), as_json, str(word))
    return 0


def _cmd_f_image(args, as_json):
    params = carpi_params(args.n)
    if args.letter is not None:
        bits = f_image(args.letter, params)
    else:
        bits = apply_f(Word.parse(_read_word_arg(args.word), params.m), params)
    _emit(str(bits), as_json, str(bits))
    return 0


def _cmd_kernel_scan(args, as_json):
    w = Word.parse(_read_word_arg(args.word), args.m)
    found = scan_kernel_repetitions(w, args.n, args.m)
    _emit([{"start": k.start, "length": k.length, "q": k.q} for k in found], as_json,
          "\n".join(map(str, found)) or "none")
    return 0


def _cmd_kernel_generate(args, as_json):
    try:
        w = generate_kernel_avoiding(args.m, args.n, args.length, args.seed)
    except SearchExhausted:
        _emit({"word": None, "status": "EXHAUSTED"}, as_json, "EXHAUSTED")
        return 1
    _emit({"word": str(w), "status": "OK"}, as_json, str(w))
    return 0


def _cmd_params(args, as_json):
    p = carpi_params(args.n)
    _emit({"n": p.n, "m": p.m, "p": p.p, "uniform_length": p.uniform_length,
           "y": str(p.y), "x": str(p.x)}, as_json, p.describe())
    return 0


COMMANDS = {
    "verify": _cmd_verify,
    "exponent": _cmd_exponent,
    "gamma": _cmd_gamma,
    "f-image": _cmd_f_image,
    "kernel-scan": _cmd_kernel_scan,
    "kernel-generate": _cmd_kernel_generate,
    "params": _cmd_params,
}


def run(argv) -> int:
    try:
        args = build_parser().parse_args(list(argv))
        logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                            stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s")
        if args.verbose:
            logging.getLogger(__name__).info("kernel backend: %s", _kernels.BACKEND)
        as_json = args.json or args.sub_json
        return COMMANDS[args.command](args, as_json)
    except (UsageError, ParseError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main():
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
