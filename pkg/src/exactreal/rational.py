"""Pair-encoded integers and rationals over arbitrary-precision naturals.

An integer is a pair of naturals ``(m, n)`` standing for ``m - n``; a rational
is a pair of integers ``(a, b)`` with ``b > 0`` standing for ``a / b``.  Every
operation is carried out with the pair laws below, on naturals only::

    (m, n) = (i, j)      <=>  m + j == n + i
    (m, n) + (i, j)       =   (m + i, n + j)
    -(m, n)               =   (n, m)
    (m, n) * (i, j)       =   (m*i + n*j, m*j + n*i)
    (m, n) < (i, j)      <=>  m + j < n + i

    (a, b) = (c, d)      <=>  a*d == b*c
    (a, b) + (c, d)       =   (a*d + b*c, b*d)
    (a, b) * (c, d)       =   (a*c, b*d)
    (a, b) / (c, d)       =   (a*d, b*c)          c != 0
    (a, b) < (c, d)      <=>  a*d < b*c

Results are reduced to canonical form after each operation.  Equality is the
pair relation above, never component-wise comparison.
"""

from __future__ import annotations

import enum
import re
from typing import Optional, Union

from .errors import DivisionByZero, InvalidRational

__all__ = [
    "Order",
    "Int",
    "Rat",
    "gcd",
    "int_arith",
    "int_compare",
    "rat_normalize",
    "rat_arith",
    "rat_compare",
    "parse_rational",
    "ZERO",
    "ONE",
]

# Naturals are plain non-negative Python ints; this alias documents intent.
Nat = int


class Order(enum.IntEnum):
    LT = -1
    EQ = 0
    GT = 1


def _check_nat(value):
    if not isinstance(value, int) or isinstance(value, bool) or value < 0:
        raise InvalidRational(f"not a natural number: {value!r}")
    return value


def gcd(a: Nat, b: Nat) -> Nat:
    """Greatest common divisor of two naturals by Euclid's algorithm."""
    while b:
        a, b = b, a % b
    return a


def _cmp_nat(x: Nat, y: Nat) -> Order:
    if x < y:
        return Order.LT
    if x > y:
        return Order.GT
    return Order.EQ


class Int:
    """An integer as a pair of naturals ``(pos, neg)`` denoting ``pos - neg``.

    The constructor reduces to canonical form (one component zero) unless
    ``canonical=False`` is passed, in which case the pair is kept verbatim.
    """

    __slots__ = ("pos", "neg")

    def __init__(self, pos: Nat = 0, neg: Nat = 0, *, canonical: bool = True):
        _check_nat(pos)
        _check_nat(neg)
        if canonical:
            low = min(pos, neg)
            pos -= low
            neg -= low
        object.__setattr__(self, "pos", pos)
        object.__setattr__(self, "neg", neg)

    def __setattr__(self, name, value):
        raise AttributeError("Int is immutable")

    @classmethod
    def _make(cls, pos: Nat, neg: Nat) -> "Int":
        # internal: pos, neg already known to be naturals
        self = object.__new__(cls)
        low = pos if pos < neg else neg
        object.__setattr__(self, "pos", pos - low)
        object.__setattr__(self, "neg", neg - low)
        return self

    @classmethod
    def of(cls, value: int) -> "Int":
        """The canonical pair for a signed Python int."""
        return cls(value, 0) if value >= 0 else cls(0, -value)

    def canonical(self) -> "Int":
        return Int(self.pos, self.neg)

    def is_canonical(self) -> bool:
        return self.pos == 0 or self.neg == 0

    def magnitude(self) -> Nat:
        pos, neg = self.pos, self.neg
        return pos - neg if pos >= neg else neg - pos

    def sign(self) -> int:
        return int(_cmp_nat(self.pos, self.neg))

    def __int__(self) -> int:
        return self.pos - self.neg

    # pair laws
    def __add__(self, other: "Int") -> "Int":
        return Int._make(self.pos + other.pos, self.neg + other.neg)

    def __neg__(self) -> "Int":
        return Int._make(self.neg, self.pos)

    def __sub__(self, other: "Int") -> "Int":
        return self + (-other)

    def __mul__(self, other: "Int") -> "Int":
        m, n, i, j = self.pos, self.neg, other.pos, other.neg
        return Int._make(m * i + n * j, m * j + n * i)

    def compare(self, other: "Int") -> Order:
        return _cmp_nat(self.pos + other.neg, self.neg + other.pos)

    def __eq__(self, other):
        if not isinstance(other, Int):
            return NotImplemented
        return self.pos + other.neg == self.neg + other.pos

    def __lt__(self, other: "Int") -> bool:
        return self.compare(other) is Order.LT

    def __le__(self, other: "Int") -> bool:
        return self.compare(other) is not Order.GT

    def __gt__(self, other: "Int") -> bool:
        return self.compare(other) is Order.GT

    def __ge__(self, other: "Int") -> bool:
        return self.compare(other) is not Order.LT

    def __hash__(self):
        return hash(("Int", self.pos - self.neg))

    def __repr__(self):
        return f"Int({self.pos}, {self.neg})"

    def __str__(self):
        return str(self.pos - self.neg)


INT_ZERO = Int(0, 0)
INT_ONE = Int(1, 0)


def int_arith(op: str, a: Int, b: Optional[Int] = None) -> Int:
    """Apply ``add``, ``neg`` or ``mul`` to pair-encoded integers."""
    if op == "neg":
        return -a
    if b is None:
        raise TypeError(f"int_arith({op!r}) needs two operands")
    if op == "add":
        return a + b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown integer operation: {op!r}")


def int_compare(a: Int, b: Int) -> Order:
    return a.compare(b)


def _exact_div_int(a: Int, g: Nat) -> Int:
    # a is canonical, so only one component is non-zero
    return Int._make(a.pos // g, a.neg // g)


RatLike = Union["Rat", int]


class Rat:
    """A rational as a pair of integers ``(num, den)`` with ``den > 0``.

    ``Rat(3, 6)`` builds the canonical ``1/2``; components may be Python
    ints or :class:`Int` pairs.  ``normalize=False`` keeps the pair as
    given (still requiring a positive denominator).

    >>> Rat(2, 4)
    Rat(1, 2)
    >>> Rat(1, 2) + Rat(1, 3)
    Rat(5, 6)
    """

    __slots__ = ("num", "den")

    def __init__(self, num: Union[int, Int] = 0, den: Union[int, Int] = 1, *, normalize: bool = True):
        if type(num) is int and type(den) is int:
            if den <= 0:
                raise InvalidRational(f"denominator must be positive, got {den}")
            if normalize:
                g = gcd(abs(num), den)
                if g > 1:
                    num, den = num // g, den // g
            object.__setattr__(self, "num", Int._make(num, 0) if num >= 0 else Int._make(0, -num))
            object.__setattr__(self, "den", Int._make(den, 0))
            return
        if isinstance(num, bool) or isinstance(den, bool):
            raise InvalidRational("booleans are not integers")
        if isinstance(num, int):
            num = Int.of(num)
        if isinstance(den, int):
            den = Int.of(den)
        if not isinstance(num, Int) or not isinstance(den, Int):
            raise InvalidRational(f"rational components must be integers, got {num!r}, {den!r}")
        if den.compare(INT_ZERO) is not Order.GT:
            raise InvalidRational(f"denominator must be positive, got {den}")
        if normalize:
            num, den = _reduce(num.canonical(), den.canonical())
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    @classmethod
    def _trusted(cls, num: Int, den: Int) -> "Rat":
        # num, den canonical with den > 0; reduce without re-validating
        self = object.__new__(cls)
        num, den = _reduce(num, den)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)
        return self

    def __setattr__(self, name, value):
        raise AttributeError("Rat is immutable")

    @classmethod
    def coerce(cls, value: "RatLike") -> "Rat":
        if isinstance(value, Rat):
            return value
        if isinstance(value, int) and not isinstance(value, bool):
            return cls(value)
        if isinstance(value, str):
            return parse_rational(value)
        raise TypeError(f"cannot interpret {value!r} as a rational")

    # views
    @property
    def numerator(self) -> int:
        return int(rat_normalize(self).num)

    @property
    def denominator(self) -> int:
        return int(rat_normalize(self).den)

    def is_canonical(self) -> bool:
        return (
            self.num.is_canonical()
            and self.den.is_canonical()
            and gcd(self.num.magnitude(), self.den.magnitude()) == 1
        )

    def sign(self) -> int:
        return self.num.sign()

    def is_zero(self) -> bool:
        return self.num == INT_ZERO

    # arithmetic
    def __add__(self, other):
        other = _coerce_or_none(other)
        if other is None:
            return NotImplemented
        a, b, c, d = self.num, self.den, other.num, other.den
        return Rat._trusted(a * d + b * c, b * d)

    __radd__ = __add__

    def __neg__(self):
        return Rat._trusted(-self.num, self.den)

    def __pos__(self):
        return self

    def __sub__(self, other):
        other = _coerce_or_none(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce_or_none(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = _coerce_or_none(other)
        if other is None:
            return NotImplemented
        return Rat._trusted(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _coerce_or_none(other)
        if other is None:
            return NotImplemented
        a, b, c, d = self.num, self.den, other.num, other.den
        if c == INT_ZERO:
            raise DivisionByZero(f"division of {self} by zero")
        num, den = a * d, b * c
        if den.sign() < 0:
            # b*c carries the sign of c; move it to the numerator
            num, den = -num, -den
        return Rat._trusted(num, den)

    def __rtruediv__(self, other):
        other = _coerce_or_none(other)
        if other is None:
            return NotImplemented
        return other / self

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            return ONE / (self ** -exponent)
        result, base = ONE, self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __abs__(self):
        return -self if self.sign() < 0 else self

    # order
    def compare(self, other: "Rat") -> Order:
        # a*d <_Z b*c, with both products and the order law expanded in place
        a, b, c, d = self.num, self.den, other.num, other.den
        left_pos = a.pos * d.pos + a.neg * d.neg
        left_neg = a.pos * d.neg + a.neg * d.pos
        right_pos = b.pos * c.pos + b.neg * c.neg
        right_neg = b.pos * c.neg + b.neg * c.pos
        return _cmp_nat(left_pos + right_neg, left_neg + right_pos)

    def __eq__(self, other):
        other = _coerce_or_none(other)
        if other is None:
            return NotImplemented
        return self.num * other.den == self.den * other.num

    def __lt__(self, other):
        if type(other) is not Rat:
            other = Rat.coerce(other)
        return self.compare(other) is Order.LT

    def __le__(self, other):
        return self.compare(Rat.coerce(other)) is not Order.GT

    def __gt__(self, other):
        return self.compare(Rat.coerce(other)) is Order.GT

    def __ge__(self, other):
        return self.compare(Rat.coerce(other)) is not Order.LT

    def __hash__(self):
        r = rat_normalize(self)
        return hash(("Rat", int(r.num), int(r.den)))

    # rounding helpers on the canonical pair
    def floor(self) -> int:
        return int(self.num) // int(self.den)

    def ceil(self) -> int:
        return -((-int(self.num)) // int(self.den))

    def to_decimal(self, digits: int) -> str:
        """Decimal expansion with ``digits`` places, truncated toward zero."""
        n, d = int(self.num), int(self.den)
        sign = "-" if n < 0 else ""
        scaled = abs(n) * 10**digits // d
        if digits == 0:
            body = str(scaled)
        else:
            text = str(scaled).rjust(digits + 1, "0")
            body = f"{text[:-digits]}.{text[-digits:]}"
        if sign and set(body) <= {"0", "."}:
            sign = ""
        return sign + body

    def __repr__(self):
        return f"Rat({self.num}, {self.den})"

    def __str__(self):
        if self.den == INT_ONE:
            return str(self.num)
        return f"{self.num}/{self.den}"


def _coerce_or_none(value):
    if isinstance(value, Rat):
        return value
    if isinstance(value, int) and not isinstance(value, bool):
        return Rat(value)
    return None


def _reduce(num: Int, den: Int):
    g = gcd(num.magnitude(), den.magnitude())
    if g > 1:
        return _exact_div_int(num, g), _exact_div_int(den, g)
    return num, den


ZERO = Rat(0)
ONE = Rat(1)


def rat_normalize(r: Rat) -> Rat:
    """Canonical representative of ``r``: denominator positive, lowest terms."""
    if r.den.compare(INT_ZERO) is not Order.GT:
        raise InvalidRational(f"denominator must be positive, got {r.den}")
    if r.is_canonical():
        return r
    return Rat(r.num.canonical(), r.den.canonical())


def rat_arith(op: str, a: Rat, b: Optional[Rat] = None) -> Rat:
    """Apply ``add``, ``neg``, ``mul`` or ``div`` to rationals."""
    if op == "neg":
        return -a
    if b is None:
        raise TypeError(f"rat_arith({op!r}) needs two operands")
    if op == "add":
        return a + b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown rational operation: {op!r}")


def rat_compare(a: Rat, b: Rat) -> Order:
    return a.compare(b)


_LITERAL = re.compile(
    r"""
    \A\s*
    (?P<sign>[-+]?)
    (?:
        (?P<int>\d+)\s*/\s*(?P<den>\d+)
      |
        (?P<whole>\d*)(?:\.(?P<frac>\d*))?(?:[eE](?P<exp>[-+]?\d+))?
    )
    \s*\Z
    """,
    re.VERBOSE,
)


def parse_rational(text: str) -> Rat:
    """Parse ``a/b``, a decimal ``d.ddd`` or ``d.ddde-k`` into an exact rational.

    >>> parse_rational("0.125")
    Rat(1, 8)
    >>> parse_rational("1e-6")
    Rat(1, 1000000)
    """
    m = _LITERAL.match(text)
    if m is None:
        raise InvalidRational(f"invalid rational literal: {text!r}")
    negative = m.group("sign") == "-"
    if m.group("int") is not None:
        den = int(m.group("den"))
        if den == 0:
            raise InvalidRational(f"zero denominator in literal: {text!r}")
        value = Rat(int(m.group("int")), den)
    else:
        whole, frac = m.group("whole"), m.group("frac") or ""
        if not whole and not frac:
            raise InvalidRational(f"invalid rational literal: {text!r}")
        value = Rat(int(whole or "0") * 10 ** len(frac) + int(frac or "0"), 10 ** len(frac))
        if m.group("exp"):
            value = value * Rat(10) ** int(m.group("exp"))
    return -value if negative else value
