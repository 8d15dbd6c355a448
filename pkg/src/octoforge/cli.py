"""Command-line surface: gen, check, forge, fuzz.

Exit codes: 0 for success / a positive or out-of-scope classification,
2 when a hypothesis violation or property failure was found (with the
witness emitted), 1 for usage or I/O errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import analysis, forge as forge_mod, generators, io, suites
from .algebra import UnitAxiomError
from .fields import FieldSpec

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_VIOLATION = 2


class _Parser(argparse.ArgumentParser):
    # usage errors exit 1; code 2 is reserved for mathematical negatives
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _field_from_flag(text: str) -> FieldSpec:
    if text == "rational":
        return FieldSpec.rational()
    if text.startswith("prime:"):
        try:
            return FieldSpec.prime(int(text.split(":", 1)[1]))
        except ValueError as e:
            raise ValueError(f"bad field spec {text!r}: {e}") from e
    raise ValueError(f"bad field spec {text!r} (use 'rational' or 'prime:P')")


def build_parser() -> _Parser:
    parser = _Parser(prog="octoforge",
                     description="Exact frame discovery and hypothesis checking "
                                 "for finite-dimensional nonassociative algebras")
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="generate an algebra file")
    gen.add_argument("kind", choices=["quaternion", "octonion", "sedenion",
                                      "direct-sum", "disguise"])
    gen.add_argument("--alpha", default="-1", help="scalar string (default -1)")
    gen.add_argument("--beta", default="-1", help="scalar string (default -1)")
    gen.add_argument("--gamma", default="-1", help="scalar string (default -1)")
    gen.add_argument("--mu", default="-1",
                     help="fourth doubling parameter for sedenions (default -1)")
    gen.add_argument("--field", default="rational", metavar="rational|prime:P")
    gen.add_argument("--left", help="left summand file (direct-sum)")
    gen.add_argument("--right", help="right summand file (direct-sum)")
    gen.add_argument("--input", help="input algebra file (disguise)")
    gen.add_argument("--seed", type=int, default=0, help="disguise seed")
    gen.add_argument("--matrix-out", help="write the disguise change of basis here")
    gen.add_argument("-o", "--output", required=True, help="output path")

    check = sub.add_parser("check", help="analyze structure and hypotheses")
    check.add_argument("path")
    check.add_argument("--trials", type=int, default=200)
    check.add_argument("--seed", type=int, default=0)
    check.add_argument("--max-num", type=int, default=10)
    check.add_argument("--format", choices=["text", "json"], default="text")

    forge_p = sub.add_parser("forge", help="run the frame-forging pipeline")
    forge_p.add_argument("path")
    forge_p.add_argument("--seed", type=int, default=0)
    forge_p.add_argument("--trials", type=int, default=200)
    forge_p.add_argument("--max-num", type=int, default=10)
    forge_p.add_argument("--assume", choices=["associative", "alternative"],
                         help="assert the track to skip the exact scans "
                              "(re-verified on the constructed frames)")
    forge_p.add_argument("-o", "--output", help="also write the JSON result here")
    forge_p.add_argument("--format", choices=["text", "json"], default="text")

    fuzz = sub.add_parser("fuzz", help="run the property suites")
    fuzz.add_argument("path")
    fuzz.add_argument("--trials", type=int, default=200)
    fuzz.add_argument("--seed", type=int, default=0)
    fuzz.add_argument("--max-num", type=int, default=10)
    fuzz.add_argument("--format", choices=["text", "json"], default="text")
    return parser


def _cmd_gen(args) -> int:
    field = _field_from_flag(args.field)
    if args.kind == "quaternion":
        A = generators.quaternion_algebra(field, args.alpha, args.beta)
    elif args.kind == "octonion":
        A = generators.octonion_algebra(field, args.alpha, args.beta, args.gamma)
    elif args.kind == "sedenion":
        A = generators.sedenion_algebra(
            field, (args.alpha, args.beta, args.gamma, args.mu))
    elif args.kind == "direct-sum":
        if not args.left or not args.right:
            raise ValueError("direct-sum needs --left and --right input files")
        A = generators.direct_sum(io.load_algebra(args.left),
                                  io.load_algebra(args.right))
    else:  # disguise
        if not args.input:
            raise ValueError("disguise needs --input")
        A, T = generators.disguise(io.load_algebra(args.input), args.seed)
        if args.matrix_out:
            rows = [[A.field.render(c) for c in row] for row in T.entries]
            Path(args.matrix_out).write_text(
                json.dumps({"change_of_basis": rows}, indent=2) + "\n",
                encoding="utf-8")
    io.save_algebra(A, args.output)
    print(f"wrote {A.name} (dim {A.dim}) to {args.output}")
    return EXIT_OK


def _cmd_check(args) -> int:
    A = io.load_algebra(args.path)
    rep = analysis.analyze(A, trials=args.trials, seed=args.seed,
                           max_num=args.max_num)
    if args.format == "json":
        print(json.dumps(io.analysis_report_to_dict(A, rep), indent=2))
    else:
        sys.stdout.write(io.analysis_report_to_text(A, rep))
    violated = not rep.hypothesis_i.holds or not rep.hypothesis_iib.holds
    return EXIT_VIOLATION if violated else EXIT_OK


def _cmd_forge(args) -> int:
    A = io.load_algebra(args.path)
    result = forge_mod.forge(A, seed=args.seed, trials=args.trials,
                             max_num=args.max_num, assume=args.assume)
    if args.output:
        Path(args.output).write_text(io.forge_result_to_json(A, result),
                                     encoding="utf-8")
    if args.format == "json":
        sys.stdout.write(io.forge_result_to_json(A, result))
    else:
        sys.stdout.write(io.forge_result_to_text(A, result))
    if result.classification == forge_mod.HYPOTHESIS_VIOLATED:
        return EXIT_VIOLATION
    return EXIT_OK


def _cmd_fuzz(args) -> int:
    A = io.load_algebra(args.path)
    rep = suites.run_fuzz(A, trials=args.trials, seed=args.seed,
                          max_num=args.max_num)
    if args.format == "json":
        print(json.dumps(io.fuzz_report_to_dict(A, rep), indent=2))
    else:
        sys.stdout.write(io.fuzz_report_to_text(A, rep))
    return EXIT_VIOLATION if rep.violation_found else EXIT_OK


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    handlers = {"gen": _cmd_gen, "check": _cmd_check,
                "forge": _cmd_forge, "fuzz": _cmd_fuzz}
    try:
        return handlers[args.command](args)
    except (io.AlgebraFileError, UnitAxiomError, generators.GeneratorError,
            ValueError, OSError) as e:
        print(f"octoforge {args.command}: error: {e}", file=sys.stderr)
        return EXIT_USAGE


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
