"""Command-line front end: ``exactreal eval | derive | superclass | demo``.

Exit codes: 0 success or true, 1 false, 2 unknown at the given effort,
3 usage or parse error, 4 domain error (bad tolerance, unwitnessed division, ...).
"""

from __future__ import annotations

import argparse
import sys
from typing import List, Optional, Sequence

from . import superclass as sc
from .calculus import derivative_at, symbolic_derivative
from .errors import ExactRealError, ParseError
from .expr import compile_poly, eval_expr, format_eps, parse_expr, readout_digits
from .rational import ONE, Rat, parse_rational
from .reals import geometric_sum_real, raw_div, real_eq_test, real_from_rat
from .seqspec import parse_seq
from .sequences import CauchyStatus, alternating, check_cauchy_to_depth, harmonic
from .verdict import Status, Verdict

EXIT_OK = 0
EXIT_FALSE = 1
EXIT_UNKNOWN = 2
EXIT_USAGE = 3
EXIT_DOMAIN = 4

_VERDICT_EXIT = {Status.TRUE: EXIT_OK, Status.FALSE: EXIT_FALSE, Status.UNKNOWN: EXIT_UNKNOWN}


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on bad usage, which would read as "unknown"
    def error(self, message):
        raise _UsageError(f"{self.prog}: error: {message}")


def _rat(text: str) -> Rat:
    try:
        return parse_rational(text)
    except ExactRealError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _extended(text: str):
    lowered = text.strip().lower()
    if lowered in ("inf", "+inf", "infinity", "+infinity"):
        return sc.POS_INF
    if lowered in ("-inf", "-infinity"):
        return sc.NEG_INF
    return _rat(text)


def _show(value) -> str:
    if isinstance(value, (tuple, list)):
        return "(" + ", ".join(_show(v) for v in value) + ")"
    return str(value)


def _verdict_line(label: str, v: Verdict) -> str:
    if v.witness is None:
        return f"{label}: {v.status.value}"
    return f"{label}: {v.status.value}, witness {_show(v.witness)}"


def _decimal(value: Rat, eps: Rat) -> str:
    return value.to_decimal(readout_digits(eps) + 2)


# subcommands


def _cmd_eval(args, out) -> int:
    result = eval_expr(parse_expr(args.expr), args.eps)
    print(result, file=out)
    if args.exact:
        print(f"readout {result.value}", file=out)
    return EXIT_OK


def _cmd_derive(args, out) -> int:
    f = compile_poly(parse_expr(args.poly))
    dx = parse_seq(args.dx)
    result = derivative_at(f, args.at, dx, args.eps, args.depth)
    print(f"f(x) = {f}", file=out)
    print(f"quotient[{args.depth}] = {result.estimate}", file=out)
    print(f"estimate {_decimal(result.estimate, args.eps)}", file=out)
    cauchy = result.cauchy
    if cauchy.holds:
        print(
            f"cauchy: holds-to-depth (eps {format_eps(cauchy.epsilon)}, depth {cauchy.depth}, "
            f"settles at {cauchy.settle})",
            file=out,
        )
    else:
        m, n, gap = cauchy.witness
        print(f"cauchy: counterexample |q[{m}] - q[{n}]| = {gap} >= {format_eps(cauchy.epsilon)}", file=out)
    if args.symbolic:
        print(f"symbolic f'({args.at}) = {symbolic_derivative(f)(args.at)}", file=out)
    return EXIT_OK if cauchy.holds else EXIT_FALSE


def _cmd_superclass(args, out) -> int:
    s = sc.interval(args.a, args.b)
    v = sc.is_limit_point(s, args.member, args.eps, count=args.count, depth=args.depth)
    print(f"carrier {s.description}", file=out)
    print(_verdict_line(f"limit point {args.member}", v), file=out)
    return _VERDICT_EXIT[v.status]


def _pair_checks(family: str, points, args, out) -> List[Verdict]:
    ps = sc.family_endpoints(family)
    verdicts = []
    for p in points:
        v = sc.is_pair_limit_point(ps, p, args.eps, count=args.count, depth=args.depth)
        print(_verdict_line(f"{family} pair-limit-point ({p[0]}, {p[1]})", v), file=out)
        verdicts.append(v)
    return verdicts


def _combined_exit(verdicts: Sequence[Verdict]) -> int:
    if any(v.is_false for v in verdicts):
        return EXIT_FALSE
    if any(v.is_unknown for v in verdicts):
        return EXIT_UNKNOWN
    return EXIT_OK


def _demo_zeno(args, out) -> int:
    points = [(Rat(1, 2), Rat(3, 4)), (ONE, ONE)]
    verdicts = _pair_checks("zeno", points, args, out)
    # the eq test needs only a few dozen terms; cap it so huge --depth stays cheap
    total = real_eq_test(geometric_sum_real(), real_from_rat(1), args.eps, min(args.depth, 64))
    print(_verdict_line("sum(2^-k, k=1..n) =_R 1", total), file=out)
    return _combined_exit(verdicts + [total])


def _demo_nested(args, out) -> int:
    return _combined_exit(_pair_checks("nested", [(Rat(0), Rat(0))], args, out))


def _demo_segments(args, out) -> int:
    return _combined_exit(_pair_checks("segments", [(sc.NEG_INF, sc.POS_INF)], args, out))


def _demo_step(args, out) -> int:
    graph = sc.graph_step()
    verdicts = []
    for p in [(Rat(0), Rat(3, 2)), (Rat(-1), ONE), (Rat(-1), Rat(2))]:
        v = sc.is_pair_limit_point(graph, p, args.eps, count=args.count, depth=args.depth)
        print(_verdict_line(f"step graph contains ({p[0]}, {p[1]})", v), file=out)
        verdicts.append(v)
    return EXIT_OK if not any(v.is_unknown for v in verdicts) else EXIT_UNKNOWN


def zerodiv_cases():
    """The three raw quotients of zero-converging sequences shown by ``demo zerodiv``."""
    one_over = harmonic(1)
    return [
        ("<1/(n+1)> / <1/(n+1)>", raw_div(one_over, one_over)),
        ("<2/(n+1)> / <1/(n+1)>", raw_div(harmonic(2), one_over)),
        ("<(-1)^n/(n+1)> / <1/(n+1)>", raw_div(alternating(1) * one_over, one_over)),
    ]


def _demo_zerodiv(args, out) -> int:
    eps, depth = args.eps, args.depth
    for label, q in zerodiv_cases():
        verdict = check_cauchy_to_depth(q, eps, depth)
        head = ", ".join(str(v) for v in q.take(4))
        if verdict.status is CauchyStatus.HOLDS_TO_DEPTH:
            print(
                f"{label}: terms {head}, ... ; Cauchy to depth {depth}, value {q(depth)}",
                file=out,
            )
        else:
            m, n, gap = verdict.witness
            print(
                f"{label}: terms {head}, ... ; not Cauchy at eps {eps}: |q[{m}] - q[{n}]| = {gap}",
                file=out,
            )
    return EXIT_OK


_DEMOS = {
    "zeno": _demo_zeno,
    "nested": _demo_nested,
    "segments": _demo_segments,
    "step": _demo_step,
    "zerodiv": _demo_zerodiv,
}


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="exactreal", description="Exact real arithmetic over rational Cauchy sequences.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("eval", help="approximate an expression to within eps")
    p.add_argument("expr")
    p.add_argument("--eps", type=_rat, default=Rat(1, 10**6))
    p.add_argument("--exact", action="store_true", help="also print the exact rational readout")
    p.set_defaults(run=_cmd_eval)

    p = sub.add_parser("derive", help="slope of a polynomial as a quotient of zero sequences")
    p.add_argument("poly")
    p.add_argument("--at", type=_rat, required=True)
    p.add_argument("--dx", default="1/2^n", help="sequence spec for the increments, e.g. 1/2^n")
    p.add_argument("--eps", type=_rat, default=Rat(1, 10**6))
    p.add_argument("--depth", type=int, default=30)
    p.add_argument("--symbolic", action="store_true", help="also print the power-rule value")
    p.set_defaults(run=_cmd_derive)

    p = sub.add_parser("superclass", help="limit-point query on a closed interval")
    p.add_argument("kind", choices=["interval"])
    p.add_argument("a", type=_extended)
    p.add_argument("b", type=_extended)
    p.add_argument("--member", type=_extended, required=True)
    p.add_argument("--eps", type=_rat, default=Rat(1, 10**3))
    p.add_argument("--depth", type=int, default=sc.DEFAULT_DEPTH)
    p.add_argument("--count", type=int, default=sc.DEFAULT_COUNT)
    p.set_defaults(run=_cmd_superclass)

    p = sub.add_parser("demo", help="paradox demonstrations")
    p.add_argument("name", choices=sorted(_DEMOS))
    p.add_argument("--eps", type=_rat, default=None)
    p.add_argument("--depth", type=int, default=None)
    p.add_argument("--count", type=int, default=sc.DEFAULT_COUNT)
    p.set_defaults(run=None)
    return parser


def main(argv: Optional[Sequence[str]] = None, out=None) -> int:
    out = out if out is not None else sys.stdout
    err = sys.stderr if out is sys.stdout else out
    try:
        args = build_parser().parse_args(argv)
    except _UsageError as exc:
        print(exc, file=err)
        return EXIT_USAGE
    except SystemExit as exc:  # --help
        return EXIT_OK if not exc.code else EXIT_USAGE

    if args.command == "demo":
        zerodiv = args.name == "zerodiv"
        if args.eps is None:
            args.eps = Rat(1, 2) if zerodiv else Rat(1, 10**3)
        if args.depth is None:
            args.depth = 10 if zerodiv else sc.DEFAULT_DEPTH
        run = _DEMOS[args.name]
    else:
        run = args.run
    if getattr(args, "depth", 1) < 1:
        print(f"exactreal: error: depth must be at least 1, got {args.depth}", file=err)
        return EXIT_DOMAIN

    try:
        return run(args, out)
    except ParseError as exc:
        print(f"exactreal: parse error: {exc}", file=err)
        return EXIT_USAGE
    except (ExactRealError, ArithmeticError, ValueError) as exc:
        print(f"exactreal: {type(exc).__name__}: {exc}", file=err)
        return EXIT_DOMAIN


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
