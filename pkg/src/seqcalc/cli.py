"""Command-line interface.

Exit codes: 0 success, 1 verification failure, 2 parse/usage error,
3 domain error (length mismatch, zero entry, out-of-range index, ...).
All stdout is deterministic for identical invocations.
"""

from __future__ import annotations

import argparse
import sys

from . import seqio, verify
from .analysis import classify_convexity, classify_monotonicity
from .calculus import antiderivative, definite_integral, derivative
from .errors import DomainError, UsageError
from .lagrange import dm_via_determinant, lagrange_poly
from .parser import parse_operator_poly
from .sequences import FiniteSeq
from .seqio import parse_rational, render_json


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="seqcalc",
        description="Exact discrete calculus of finite sequences.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def seq_arg(p):
        p.add_argument(
            "--seq",
            required=True,
            help="sequence spec: inline:1,3/2,2 | csv:PATH | json:PATH | bfile:PATH",
        )

    p_apply = sub.add_parser("apply", help="apply an operator expression to a sequence")
    p_apply.add_argument("--op", required=True, help="operator expression, e.g. '(E - I)^2'")
    seq_arg(p_apply)

    p_simplify = sub.add_parser("simplify", help="canonicalize an operator expression")
    p_simplify.add_argument("--op", required=True)

    p_diff = sub.add_parser("diff", help="discrete derivative")
    seq_arg(p_diff)
    p_diff.add_argument("--order", type=int, default=1)

    p_int = sub.add_parser("integrate", help="antiderivative (cumulative sums)")
    seq_arg(p_int)
    p_int.add_argument("--constant", required=True, help="integration constant, e.g. 1 or 3/2")

    p_defint = sub.add_parser("defint", help="definite integral (inclusive sum)")
    seq_arg(p_defint)
    p_defint.add_argument("--from", dest="lower", type=int, required=True)
    p_defint.add_argument("--to", dest="upper", type=int, required=True)

    p_classify = sub.add_parser("classify", help="monotonicity and convexity flags")
    seq_arg(p_classify)

    p_lagrange = sub.add_parser("lagrange", help="interpolation through consecutive points")
    seq_arg(p_lagrange)
    p_lagrange.add_argument("--n0", type=int, required=True)
    p_lagrange.add_argument("--m", type=int, required=True)
    mode = p_lagrange.add_mutually_exclusive_group()
    mode.add_argument("--eval", dest="eval_at", help="evaluate the interpolant at a rational")
    mode.add_argument("--coeffs", action="store_true", help="print the polynomial (default)")
    mode.add_argument("--det", action="store_true", help="determinant route to D^m S(n0)")

    p_verify = sub.add_parser("verify", help="run identity checks")
    p_verify.add_argument("--check", required=True, help="check name or 'all'")
    p_verify.add_argument("--trials", type=int, default=200)
    p_verify.add_argument("--seed", type=int, default=0)
    p_verify.add_argument("--min-len", dest="min_len", type=int, default=2)
    p_verify.add_argument("--max-len", dest="max_len", type=int, default=12)

    return parser


def _load_seq(spec_text: str) -> FiniteSeq:
    return seqio.load_sequence(spec_text).values


def _run(args) -> int:
    if args.command == "apply":
        poly = parse_operator_poly(args.op)
        seq = _load_seq(args.seq)
        print(render_json(seqio.sequence_payload(poly.apply(seq))))
        return 0

    if args.command == "simplify":
        poly = parse_operator_poly(args.op)
        print(poly.render())
        print(render_json(seqio.operator_payload(poly)))
        return 0

    if args.command == "diff":
        seq = _load_seq(args.seq)
        print(render_json(seqio.sequence_payload(derivative(seq, args.order))))
        return 0

    if args.command == "integrate":
        seq = _load_seq(args.seq)
        constant = parse_rational(args.constant)
        print(render_json(seqio.sequence_payload(antiderivative(seq, constant))))
        return 0

    if args.command == "defint":
        seq = _load_seq(args.seq)
        value = definite_integral(seq, args.lower, args.upper)
        print(render_json(seqio.rational_payload(value)))
        return 0

    if args.command == "classify":
        seq = _load_seq(args.seq)
        monotonicity = classify_monotonicity(seq)
        convexity = classify_convexity(seq) if len(seq) >= 3 else None
        print(render_json(seqio.classification_payload(monotonicity, convexity)))
        return 0

    if args.command == "lagrange":
        seq = _load_seq(args.seq)
        if args.det:
            value = dm_via_determinant(seq, args.n0, args.m)
            print(render_json(seqio.rational_payload(value)))
        elif args.eval_at is not None:
            poly = lagrange_poly(seq, args.n0, args.m)
            value = poly.evaluate(parse_rational(args.eval_at))
            print(render_json(seqio.rational_payload(value)))
        else:
            poly = lagrange_poly(seq, args.n0, args.m)
            print(render_json(seqio.polynomial_payload(poly)))
        return 0

    if args.command == "verify":
        if args.check == "all":
            reports = verify.run_all(args.trials, args.seed, args.min_len, args.max_len)
        else:
            spec = verify.CheckSpec(
                args.check, args.trials, args.seed, args.min_len, args.max_len
            )
            reports = [verify.run_check(spec)]
        print(render_json(seqio.verification_payload(reports)))
        return 0 if all(r.passed for r in reports) else 1

    raise AssertionError(f"unhandled command {args.command!r}")


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return _run(args)
    except UsageError as exc:
        print(f"seqcalc: {exc}", file=sys.stderr)
        return 2
    except DomainError as exc:
        print(f"seqcalc: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
