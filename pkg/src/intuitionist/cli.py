"""Command-line front end.

    intuitionist pseudo eval <expr> [--dim N] [--twist P]
    intuitionist subject run --oracle S --stages K --seq {alpha,vesley,kripke}
    intuitionist subject probe --oracle S --fuel F
    intuitionist pastar check <file>
    intuitionist pastar eliminate <file> -o <file>

Exit codes: 0 success, 1 check failure or dimension mismatch, 2 parse failure.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction
from typing import Optional, Sequence, TextIO

from . import pastar
from .creals import const_rational, measurably_greater, measurably_smaller
from .expr import ExprSyntaxError, eval_text
from .pseudocontinuum import DimensionError, PseudoContinuum, TwistConfig
from .subject import archimedean_probe, brouwer_alpha, kripke_witness, parse_oracle, vesley_x

EXIT_OK, EXIT_FAIL, EXIT_PARSE = 0, 1, 2


def _rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational: {text!r}") from None


def _natural(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a natural number: {text!r}") from None
    if value < 0:
        raise argparse.ArgumentTypeError(f"not a natural number: {text!r}")
    return value


def cmd_pseudo_eval(args, out: TextIO, err: TextIO) -> int:
    if args.dim < 1 or args.twist <= 0:
        err.write("error: need --dim >= 1 and --twist > 0\n")
        return EXIT_PARSE
    space = PseudoContinuum(args.dim, TwistConfig(args.twist))
    try:
        point = eval_text(args.expr, space)
    except ExprSyntaxError as exc:
        err.write(f"parse error {exc}\n")
        return EXIT_PARSE
    except DimensionError as exc:
        err.write(f"dimension error: {exc}\n")
        return EXIT_FAIL
    out.write(f"{point}\n")
    return EXIT_OK


def cmd_subject_run(args, out: TextIO, err: TextIO) -> int:
    try:
        oracle = parse_oracle(args.oracle)
        if args.seq == "kripke":
            seq = kripke_witness(oracle)
            values = [str(b) for b in seq.trace(args.stages)]
        else:
            gen = brouwer_alpha(oracle) if args.seq == "alpha" else vesley_x(oracle)
            values = [str(q) for q in gen.trace(args.stages)]
    except ValueError as exc:
        err.write(f"error: {exc}\n")
        return EXIT_PARSE
    for v, value in enumerate(values):
        out.write(f"{v} {value}\n")
    return EXIT_OK


def cmd_subject_probe(args, out: TextIO, err: TextIO) -> int:
    try:
        x = vesley_x(parse_oracle(args.oracle))
    except ValueError as exc:
        err.write(f"error: {exc}\n")
        return EXIT_PARSE
    fuel = args.fuel
    found = archimedean_probe(x, fuel)
    if found is None:
        out.write(f"NO WITNESS (fuel={fuel})\n")
    else:
        n, cert = found
        out.write(f"ARCHIMEDEAN n={n}\n")
        out.write(f"  n*x >∘ 1 certificate: m={cert.m} n={cert.n}\n")
    zero = const_rational(0)
    out.write(f"x ∘> 0 {measurably_greater(x, zero, fuel)}\n")
    out.write(f"x <∘ 0 {measurably_smaller(x, zero, fuel)}\n")
    return EXIT_OK


def _lines(n: int) -> str:
    return f"{n} line" if n == 1 else f"{n} lines"


def _load_proof(path: str, err: TextIO) -> Optional[pastar.Proof]:
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        err.write(f"error: cannot read {path}: {exc.strerror}\n")
        return None
    try:
        return pastar.parse_proof(text)
    except pastar.ProofSyntaxError as exc:
        err.write(f"parse error: {path}: {exc}\n")
        return None


def cmd_pastar_check(args, out: TextIO, err: TextIO) -> int:
    proof = _load_proof(args.file, err)
    if proof is None:
        return EXIT_PARSE
    try:
        pastar.check(proof)
    except pastar.ProofError as exc:
        out.write(f"FAIL [{exc.kind}] {exc}\n")
        return EXIT_FAIL
    out.write(f"ok ({_lines(len(proof))})\n")
    return EXIT_OK


def cmd_pastar_eliminate(args, out: TextIO, err: TextIO) -> int:
    proof = _load_proof(args.file, err)
    if proof is None:
        return EXIT_PARSE
    try:
        report = pastar.omega_report(proof)
        result = pastar.eliminate_omega(proof)
    except pastar.ProofError as exc:
        out.write(f"FAIL [{exc.kind}] {exc}\n")
        return EXIT_FAIL
    with open(args.output, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(pastar.format_proof(result))
    instances = ",".join(str(n) for n in sorted(report.instances)) or "-"
    out.write(f"instances={instances} m={report.m}\n")
    out.write(f"ok ({_lines(len(result))}) -> {args.output}\n")
    return EXIT_OK


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_PARSE, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="intuitionist", description=__doc__.splitlines()[0])
    groups = parser.add_subparsers(dest="group", required=True, parser_class=_Parser)

    pseudo = groups.add_parser("pseudo", help="pseudo-continuum arithmetic")
    pseudo_cmds = pseudo.add_subparsers(dest="cmd", required=True, parser_class=_Parser)
    ev = pseudo_cmds.add_parser("eval", help="evaluate an expression and print it canonically")
    ev.add_argument("expr")
    ev.add_argument("--dim", type=int, default=2)
    ev.add_argument("--twist", type=_rational, default=Fraction(2))
    ev.set_defaults(func=cmd_pseudo_eval)

    subject = groups.add_parser("subject", help="Creating-Subject sequences and probes")
    subject_cmds = subject.add_subparsers(dest="cmd", required=True, parser_class=_Parser)
    run = subject_cmds.add_parser("run", help="print a choice-sequence trace")
    run.add_argument("--oracle", required=True)
    run.add_argument("--stages", type=_natural, required=True)
    run.add_argument("--seq", choices=["alpha", "vesley", "kripke"], required=True)
    run.set_defaults(func=cmd_subject_run)
    probe = subject_cmds.add_parser("probe", help="Archimedean probe and sign verdicts for vesley_x")
    probe.add_argument("--oracle", required=True)
    probe.add_argument("--fuel", type=_natural, default=64)
    probe.set_defaults(func=cmd_subject_probe)

    pa = groups.add_parser("pastar", help="PA* proof checking and w-elimination")
    pa_cmds = pa.add_subparsers(dest="cmd", required=True, parser_class=_Parser)
    chk = pa_cmds.add_parser("check", help="check a proof file")
    chk.add_argument("file")
    chk.set_defaults(func=cmd_pastar_check)
    elim = pa_cmds.add_parser("eliminate", help="replace w by a numeral and re-check")
    elim.add_argument("file")
    elim.add_argument("-o", "--output", required=True)
    elim.set_defaults(func=cmd_pastar_eliminate)
    return parser


def main(argv: Optional[Sequence[str]] = None, out: TextIO = None, err: TextIO = None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    args = build_parser().parse_args(argv)
    return args.func(args, out, err)


if __name__ == "__main__":
    sys.exit(main())
