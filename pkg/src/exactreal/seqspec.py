"""Small language for rational sequences indexed by ``n``.

Examples: ``1/2^n``, ``1/3^n``, ``2^-n``, ``(-1)^n/(n+1)``, ``sum(1/2^k, k=1..n)``.

::

    seq     := sum_ (('+' | '-') sum_)*
    sum_    := unary (('*' | '/') unary)*
    unary   := '-' unary | power
    power   := atom ('^' unary)?
    atom    := number | name | '(' seq ')' | 'sum' '(' seq ',' name '=' seq '..' seq ')'

Exponents must evaluate to integers.  ``n`` is the sequence index; other
names are only bound inside ``sum``.
"""

from __future__ import annotations

import re
from typing import Callable, Dict, List, Tuple

from .errors import DomainError, ParseError
from .rational import ZERO, Rat, parse_rational
from .sequences import RatSeq

__all__ = ["parse_seq"]

_TOKEN = re.compile(
    r"(?P<ws>\s+)|(?P<range>\.\.)|(?P<number>\d+(?:\.\d+)?)|(?P<name>[A-Za-z_]\w*)|(?P<op>[-+*/^(),=])"
)

Env = Dict[str, Rat]
Node = Callable[[Env], Rat]

_ATOM_START = ("number", "name", "(", "-", "sum")


def _tokenize(text: str) -> List[Tuple[str, str, int]]:
    out, pos = [], 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            raise ParseError(f"unexpected character {text[pos]!r}", len(text[:pos].encode()), _ATOM_START)
        if m.lastgroup != "ws":
            out.append((m.lastgroup, m.group(), len(text[:pos].encode())))
        pos = m.end()
    out.append(("end", "", len(text.encode())))
    return out


def _power(base: Rat, exponent: Rat) -> Rat:
    if exponent.denominator != 1:
        raise DomainError(f"exponent {exponent} is not an integer")
    return base ** exponent.numerator


class _Parser:
    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.i = 0
        self.bound = {"n"}

    def at(self, text: str) -> bool:
        kind, tok, _ = self.tokens[self.i]
        return kind in ("op", "range") and tok == text

    def take(self, text: str):
        if not self.at(text):
            kind, tok, offset = self.tokens[self.i]
            raise ParseError(f"unexpected {tok or 'end of input'!r}", offset, (text,))
        self.i += 1

    def parse(self) -> Node:
        node = self.seq()
        kind, tok, offset = self.tokens[self.i]
        if kind != "end":
            raise ParseError(f"unexpected {tok!r}", offset, ("+", "-", "*", "/", "^", "end of input"))
        return node

    def seq(self) -> Node:
        node = self.product()
        while self.at("+") or self.at("-"):
            op = self.tokens[self.i][1]
            self.i += 1
            right = self.product()
            node = _bin(op, node, right)
        return node

    def product(self) -> Node:
        node = self.unary()
        while self.at("*") or self.at("/"):
            op = self.tokens[self.i][1]
            self.i += 1
            right = self.unary()
            node = _bin(op, node, right)
        return node

    def unary(self) -> Node:
        if self.at("-"):
            self.i += 1
            inner = self.unary()
            return lambda env: -inner(env)
        return self.power()

    def power(self) -> Node:
        base = self.atom()
        if self.at("^"):
            self.i += 1
            exponent = self.unary()
            return lambda env: _power(base(env), exponent(env))
        return base

    def atom(self) -> Node:
        kind, tok, offset = self.tokens[self.i]
        if kind == "number":
            self.i += 1
            value = parse_rational(tok)
            return lambda env: value
        if kind == "name" and tok == "sum":
            self.i += 1
            return self.summation()
        if kind == "name":
            if tok not in self.bound:
                raise ParseError(f"unbound name {tok!r}", offset, tuple(sorted(self.bound)))
            self.i += 1
            return lambda env: env[tok]
        if self.at("("):
            self.i += 1
            node = self.seq()
            self.take(")")
            return node
        raise ParseError(f"unexpected {tok or 'end of input'!r}", offset, _ATOM_START)

    def summation(self) -> Node:
        self.take("(")
        # the bound variable is named after the body, so look ahead for it
        depth, j = 0, self.i
        while j < len(self.tokens) and not (depth == 0 and self.tokens[j][1] == ","):
            depth += {"(": 1, ")": -1}.get(self.tokens[j][1], 0)
            if self.tokens[j][0] == "end":
                break
            j += 1
        if j + 1 >= len(self.tokens) or self.tokens[j + 1][0] != "name":
            kind, tok, offset = self.tokens[min(j + 1, len(self.tokens) - 1)]
            raise ParseError("sum needs 'term, var=lo..hi'", offset, ("name",))
        var = self.tokens[j + 1][1]
        outer = set(self.bound)
        self.bound.add(var)
        body = self.seq()
        self.bound = outer
        self.take(",")
        self.i += 1  # the variable name, already read
        self.take("=")
        lo = self.seq()
        self.take("..")
        hi = self.seq()
        self.take(")")

        def total(env: Env) -> Rat:
            first, last = lo(env), hi(env)
            if first.denominator != 1 or last.denominator != 1:
                raise DomainError("summation bounds must be integers")
            acc = ZERO
            inner = dict(env)
            for k in range(first.numerator, last.numerator + 1):
                inner[var] = Rat(k)
                acc = acc + body(inner)
            return acc

        return total


def _bin(op: str, left: Node, right: Node) -> Node:
    if op == "+":
        return lambda env: left(env) + right(env)
    if op == "-":
        return lambda env: left(env) - right(env)
    if op == "*":
        return lambda env: left(env) * right(env)
    return lambda env: left(env) / right(env)


def parse_seq(text: str) -> RatSeq:
    """Compile a sequence description into a lazy :class:`RatSeq`.

    >>> parse_seq("1/2^n").take(4)
    [Rat(1, 1), Rat(1, 2), Rat(1, 4), Rat(1, 8)]
    """
    node = _Parser(text).parse()
    return RatSeq(lambda n: node({"n": Rat(n)}), text.strip())
