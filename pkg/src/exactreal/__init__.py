"""Exact real arithmetic over pair-encoded rationals.

Reals are rational Cauchy sequences carrying an explicit convergence
modulus; comparisons answer true, false or unknown-at-effort; closed sets
of reals are the limit-point sets of rational sequences.
"""

from .calculus import Poly, derivative_at, integrate, symbolic_derivative
from .errors import (
    DivisionByZero,
    DomainError,
    EmptyQuotient,
    ExactRealError,
    FreeVariable,
    InvalidApartness,
    InvalidInterval,
    InvalidRational,
    InvalidTolerance,
    ParseError,
)
from .expr import eval_expr, parse_expr, render
from .rational import ONE, ZERO, Int, Order, Rat, parse_rational, rat_arith, rat_compare, rat_normalize
from .reals import (
    ApartnessWitness,
    Real,
    approx,
    const_e,
    const_pi,
    const_sqrt,
    find_apartness,
    geometric_sum_real,
    raw_div,
    real_arith,
    real_div,
    real_eq_test,
    real_from_rat,
    real_lt_test,
    real_sqrt,
    verify_apartness,
)
from .seqspec import parse_seq
from .sequences import CauchyStatus, CauchyVerdict, RatSeq, check_cauchy_to_depth, seq_combine, seq_eval
from .superclass import (
    NEG_INF,
    POS_INF,
    PairSeq,
    SuperClass,
    family_endpoints,
    graph_step,
    interval,
    is_limit_point,
    is_pair_limit_point,
    map_range,
    point,
    rationals,
    real_line,
    superclass_eq,
    union,
)
from .verdict import Status, Verdict

__version__ = "0.1.0"

__all__ = [
    "Poly",
    "derivative_at",
    "integrate",
    "symbolic_derivative",
    "DivisionByZero",
    "DomainError",
    "EmptyQuotient",
    "ExactRealError",
    "FreeVariable",
    "InvalidApartness",
    "InvalidInterval",
    "InvalidRational",
    "InvalidTolerance",
    "ParseError",
    "eval_expr",
    "parse_expr",
    "render",
    "ONE",
    "ZERO",
    "Int",
    "Order",
    "Rat",
    "parse_rational",
    "rat_arith",
    "rat_compare",
    "rat_normalize",
    "ApartnessWitness",
    "Real",
    "approx",
    "const_e",
    "const_pi",
    "const_sqrt",
    "find_apartness",
    "geometric_sum_real",
    "raw_div",
    "real_arith",
    "real_div",
    "real_eq_test",
    "real_from_rat",
    "real_lt_test",
    "real_sqrt",
    "verify_apartness",
    "parse_seq",
    "CauchyStatus",
    "CauchyVerdict",
    "RatSeq",
    "check_cauchy_to_depth",
    "seq_combine",
    "seq_eval",
    "NEG_INF",
    "POS_INF",
    "PairSeq",
    "SuperClass",
    "family_endpoints",
    "graph_step",
    "interval",
    "is_limit_point",
    "is_pair_limit_point",
    "map_range",
    "point",
    "rationals",
    "real_line",
    "superclass_eq",
    "union",
    "Status",
    "Verdict",
]
