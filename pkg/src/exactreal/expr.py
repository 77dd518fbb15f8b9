"""Arithmetic expressions over reals: tokenizer, recursive-descent parser, evaluator.

Grammar (left-associative, usual precedence)::

    expr    := term (('+' | '-') term)*
    term    := factor (('*' | '/') factor)*
    factor  := literal | 'pi' | 'e' | 'sqrt' '(' expr ')' | 'x'
             | '(' expr ')' | '-' factor
    literal := integer | integer '/' positive-integer | decimal

``integer '/' positive-integer`` written directly is one rational literal, so
``1/2 + 1/3`` adds two literals.  Decimals are exact fractions.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import List, Tuple, Union

from .calculus import Poly
from .errors import DomainError, FreeVariable, InvalidApartness, ParseError
from .rational import ZERO, Rat, parse_rational
from .reals import (
    Real,
    approx,
    const_e,
    const_pi,
    const_sqrt,
    find_apartness,
    real_arith,
    real_div,
    real_from_rat,
    real_sqrt,
)

__all__ = [
    "Lit",
    "Const",
    "Var",
    "Sqrt",
    "Neg",
    "BinOp",
    "Expr",
    "parse_expr",
    "render",
    "compile_real",
    "compile_poly",
    "eval_expr",
    "EvalResult",
    "format_readout",
]


@dataclass(frozen=True)
class Lit:
    value: Rat


@dataclass(frozen=True)
class Const:
    name: str  # "pi" or "e"


@dataclass(frozen=True)
class Var:
    name: str = "x"


@dataclass(frozen=True)
class Sqrt:
    arg: "Expr"


@dataclass(frozen=True)
class Neg:
    arg: "Expr"


@dataclass(frozen=True)
class BinOp:
    op: str  # one of + - * /
    left: "Expr"
    right: "Expr"
    span: Tuple[int, int] = field(default=(0, 0), compare=False)


Expr = Union[Lit, Const, Var, Sqrt, Neg, BinOp]

_FACTOR_START = ("number", "pi", "e", "sqrt", "x", "(", "-")

_TOKEN = re.compile(
    r"""
    (?P<ws>\s+)
  | (?P<decimal>\d+\.\d*|\.\d+)
  | (?P<integer>\d+)
  | (?P<name>[A-Za-z_]\w*)
  | (?P<op>[-+*/()])
    """,
    re.VERBOSE,
)


@dataclass(frozen=True)
class _Token:
    kind: str  # integer, decimal, name, op, end
    text: str
    offset: int  # byte offset into the UTF-8 source


def _tokenize(text: str) -> List[_Token]:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        offset = len(text[:pos].encode())
        if m is None:
            raise ParseError(f"unexpected character {text[pos]!r}", offset, _FACTOR_START)
        kind = m.lastgroup
        if kind != "ws":
            tokens.append(_Token(kind, m.group(), offset))
        pos = m.end()
    tokens.append(_Token("end", "", len(text.encode())))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.i = 0

    @property
    def tok(self) -> _Token:
        return self.tokens[self.i]

    def peek(self, ahead=1) -> _Token:
        return self.tokens[min(self.i + ahead, len(self.tokens) - 1)]

    def advance(self) -> _Token:
        tok = self.tok
        self.i += 1
        return tok

    def expect_op(self, op: str):
        if self.tok.kind == "op" and self.tok.text == op:
            return self.advance()
        raise ParseError(f"unexpected {self.tok.text or 'end of input'!r}", self.tok.offset, (op,))

    def parse(self) -> Expr:
        node = self.expr()
        if self.tok.kind != "end":
            raise ParseError(
                f"unexpected {self.tok.text!r}", self.tok.offset, ("+", "-", "*", "/", "end of input")
            )
        return node

    def expr(self) -> Expr:
        node = self.term()
        while self.tok.kind == "op" and self.tok.text in "+-":
            start = self.advance()
            right = self.term()
            node = BinOp(start.text, node, right, (start.offset, self.tok.offset))
        return node

    def term(self) -> Expr:
        node = self.factor()
        while self.tok.kind == "op" and self.tok.text in "*/":
            start = self.advance()
            right = self.factor()
            node = BinOp(start.text, node, right, (start.offset, self.tok.offset))
        return node

    def factor(self) -> Expr:
        tok = self.tok
        if tok.kind == "integer":
            self.advance()
            slash, den = self.tok, self.peek()
            if slash.kind == "op" and slash.text == "/" and den.kind == "integer" and int(den.text) > 0:
                self.advance()
                self.advance()
                return Lit(Rat(int(tok.text), int(den.text)))
            return Lit(Rat(int(tok.text)))
        if tok.kind == "decimal":
            self.advance()
            return Lit(parse_rational(tok.text))
        if tok.kind == "name":
            if tok.text in ("pi", "e"):
                self.advance()
                return Const(tok.text)
            if tok.text == "x":
                self.advance()
                return Var("x")
            if tok.text == "sqrt":
                self.advance()
                self.expect_op("(")
                arg = self.expr()
                self.expect_op(")")
                return Sqrt(arg)
            raise ParseError(f"unknown name {tok.text!r}", tok.offset, _FACTOR_START)
        if tok.kind == "op" and tok.text == "(":
            self.advance()
            node = self.expr()
            self.expect_op(")")
            return node
        if tok.kind == "op" and tok.text == "-":
            self.advance()
            return Neg(self.factor())
        found = tok.text or "end of input"
        raise ParseError(f"unexpected {found!r}", tok.offset, _FACTOR_START)


def parse_expr(text: str) -> Expr:
    """Parse ``text`` into an expression tree.

    >>> parse_expr("pi / sqrt(2)")
    BinOp(op='/', left=Const(name='pi'), right=Sqrt(arg=Lit(value=Rat(2, 1))), span=(3, 12))
    """
    return _Parser(text).parse()


def render(e: Expr) -> str:
    """Fully parenthesised source text that parses back to the same tree."""
    if isinstance(e, Lit):
        text = str(e.value)
        return f"({text})" if e.value.sign() < 0 else text
    if isinstance(e, Const):
        return e.name
    if isinstance(e, Var):
        return e.name
    if isinstance(e, Sqrt):
        return f"sqrt({render(e.arg)})"
    if isinstance(e, Neg):
        return f"(-{render(e.arg)})"
    right = render(e.right)
    if e.op == "/" and isinstance(e.right, Lit):
        # keep "a / (b)" from re-lexing as the literal a/b
        right = f"({right})"
    return f"({render(e.left)} {e.op} {right})"


# evaluation


def _fold(e: Expr):
    """Exact rational value of a literal-only subtree, else ``None``."""
    if isinstance(e, Lit):
        return e.value
    if isinstance(e, Neg):
        v = _fold(e.arg)
        return None if v is None else -v
    if isinstance(e, BinOp):
        left, right = _fold(e.left), _fold(e.right)
        if left is None or right is None:
            return None
        if e.op == "+":
            return left + right
        if e.op == "-":
            return left - right
        if e.op == "*":
            return left * right
        if right.is_zero():
            raise InvalidApartness(f"denominator at offset {e.span[0]} is exactly zero")
        return left / right
    return None


def compile_real(e: Expr) -> Real:
    """Build the :class:`Real` an expression denotes, with machine-found apartness witnesses."""
    folded = _fold(e)
    if folded is not None:
        return real_from_rat(folded)
    if isinstance(e, Const):
        return const_pi() if e.name == "pi" else const_e()
    if isinstance(e, Var):
        raise FreeVariable(f"free variable {e.name!r} in an expression to be evaluated")
    if isinstance(e, Sqrt):
        radicand = _fold(e.arg)
        if radicand is not None:
            return const_sqrt(radicand)
        return real_sqrt(compile_real(e.arg))
    if isinstance(e, Neg):
        return real_arith("neg", compile_real(e.arg))
    left, right = compile_real(e.left), compile_real(e.right)
    if e.op == "/":
        try:
            witness = find_apartness(right)
        except InvalidApartness as exc:
            raise InvalidApartness(f"denominator at offset {e.span[0]}: {exc}") from None
        return real_div(left, right, witness)
    return real_arith({"+": "add", "-": "sub", "*": "mul"}[e.op], left, right)


def compile_poly(e: Expr) -> Poly:
    """Polynomial in ``x`` denoted by ``e``; division only by non-zero rational constants."""
    folded = _fold(e)
    if folded is not None:
        return Poly([folded])
    if isinstance(e, Var):
        return Poly([0, 1])
    if isinstance(e, Neg):
        return -compile_poly(e.arg)
    if isinstance(e, BinOp):
        if e.op == "/":
            divisor = _fold(e.right)
            if divisor is None:
                raise DomainError(f"division by a non-constant at offset {e.span[0]} is not polynomial")
            return compile_poly(e.left) * Poly([1 / divisor])
        left, right = compile_poly(e.left), compile_poly(e.right)
        if e.op == "+":
            return left + right
        if e.op == "-":
            return left - right
        return left * right
    raise DomainError(f"{render(e)} is not a polynomial with rational coefficients")


@dataclass(frozen=True)
class EvalResult:
    value: Rat
    eps: Rat
    real: Real
    exact: bool = False  # the expression folded to a rational, so value is its exact value

    def __str__(self):
        if self.exact:
            return f"{self.value} exactly"
        return format_readout(self.value, self.eps)


def eval_expr(e: Union[Expr, str], eps) -> EvalResult:
    """Approximate an expression to within ``eps``.

    The readout is taken at ``eps / 2`` so that printing it truncated to
    :func:`readout_digits` places still stays within ``eps``.
    """
    if isinstance(e, str):
        e = parse_expr(e)
    eps = Rat.coerce(eps)
    if eps <= ZERO:
        raise DomainError(f"epsilon must be positive, got {eps}")
    folded = _fold(e)
    if folded is not None:
        return EvalResult(folded, eps, real_from_rat(folded), exact=True)
    real = compile_real(e)
    return EvalResult(approx(real, eps / 2), eps, real)


def readout_digits(eps: Rat) -> int:
    """Fewest decimal places ``d`` with ``10^-d <= eps / 2``."""
    d = 0
    while Rat(1, 10**d) > eps / 2:
        d += 1
    return d


def format_eps(eps: Rat) -> str:
    n, d = eps.numerator, eps.denominator
    if n == 1 and d > 1 and str(d).rstrip("0") == "1":
        return f"1e-{len(str(d)) - 1}"
    return str(eps)


def format_readout(value: Rat, eps: Rat) -> str:
    """``"<decimal> ± <eps>"``, the decimal truncated to the guaranteed places."""
    return f"{value.to_decimal(readout_digits(eps))} ± {format_eps(eps)}"
