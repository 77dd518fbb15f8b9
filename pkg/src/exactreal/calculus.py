"""Derivatives as a specified 0/0 and integrals as a 0 x infinity limit, on rational polynomials."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from .errors import InvalidInterval
from .rational import ZERO, Rat
from .reals import raw_div
from .sequences import CauchyVerdict, RatSeq, check_cauchy_to_depth

__all__ = [
    "Poly",
    "DerivativeResult",
    "derivative_at",
    "symbolic_derivative",
    "difference_quotient_poly",
    "integrate",
]


class Poly:
    """Polynomial with rational coefficients, lowest degree first.

    >>> Poly([0, 0, 1])(3)
    Rat(9, 1)
    """

    __slots__ = ("coefficients",)

    def __init__(self, coefficients: Sequence = ()):
        coeffs = [Rat.coerce(c) for c in coefficients]
        while coeffs and coeffs[-1].is_zero():
            coeffs.pop()
        object.__setattr__(self, "coefficients", tuple(coeffs))

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    @classmethod
    def monomial(cls, degree: int, coefficient=1) -> "Poly":
        return cls([0] * degree + [coefficient])

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coefficients) - 1

    def __call__(self, x) -> Rat:
        x = Rat.coerce(x)
        acc = ZERO
        for c in reversed(self.coefficients):
            acc = acc * x + c
        return acc

    def __add__(self, other: "Poly") -> "Poly":
        other = _as_poly(other)
        size = max(len(self.coefficients), len(other.coefficients))
        a = self.coefficients + (ZERO,) * (size - len(self.coefficients))
        b = other.coefficients + (ZERO,) * (size - len(other.coefficients))
        return Poly([p + q for p, q in zip(a, b)])

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly([-c for c in self.coefficients])

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-_as_poly(other))

    def __rsub__(self, other) -> "Poly":
        return _as_poly(other) - self

    def __mul__(self, other: "Poly") -> "Poly":
        other = _as_poly(other)
        if not self.coefficients or not other.coefficients:
            return Poly()
        out = [ZERO] * (len(self.coefficients) + len(other.coefficients) - 1)
        for i, a in enumerate(self.coefficients):
            for j, b in enumerate(other.coefficients):
                out[i + j] = out[i + j] + a * b
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "Poly":
        result = Poly([1])
        for _ in range(exponent):
            result = result * self
        return result

    def compose_shift(self, x) -> "Poly":
        """``h -> f(x + h)`` as a polynomial in ``h`` (Taylor shift)."""
        x = Rat.coerce(x)
        n = len(self.coefficients)
        out = [ZERO] * n
        for i, c in enumerate(self.coefficients):
            # c (x + h)^i = sum_j C(i, j) x^(i-j) h^j
            for j in range(i + 1):
                out[j] = out[j] + c * math.comb(i, j) * x ** (i - j)
        return Poly(out)

    def __eq__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        return self.coefficients == other.coefficients

    def __hash__(self):
        return hash(self.coefficients)

    def __repr__(self):
        return f"Poly([{', '.join(str(c) for c in self.coefficients)}])"

    def __str__(self):
        if not self.coefficients:
            return "0"
        parts = []
        for i, c in enumerate(self.coefficients):
            if c.is_zero():
                continue
            if i == 0:
                parts.append(f"{c}")
            elif i == 1:
                parts.append(f"{c}*x")
            else:
                parts.append(f"{c}*x^{i}")
        return " + ".join(parts)


def _as_poly(value) -> Poly:
    if isinstance(value, Poly):
        return value
    return Poly([Rat.coerce(value)])


def symbolic_derivative(f: Poly) -> Poly:
    """Power rule: ``sum c_i x^i -> sum i c_i x^(i-1)``."""
    return Poly([c * i for i, c in enumerate(f.coefficients)][1:])


def difference_quotient_poly(f: Poly, x) -> Poly:
    """``(f(x + h) - f(x)) / h`` with ``h`` cancelled symbolically, as a polynomial in ``h``."""
    shifted = f.compose_shift(x)
    return Poly(shifted.coefficients[1:])


@dataclass(frozen=True)
class DerivativeResult:
    quotient: RatSeq
    cauchy: CauchyVerdict
    estimate: Rat


def derivative_at(f: Poly, x, dx: RatSeq, eps, depth: int) -> DerivativeResult:
    """Slope of ``f`` at ``x`` as the quotient of two zero-converging sequences.

    ``dy(n) = f(x + dx(n)) - f(x)`` and the quotient is the raw termwise
    ``dy / dx`` (indices where ``dx`` vanishes are skipped).  The Cauchy scan
    is reported alongside the estimate; a counterexample does not suppress it.
    """
    x = Rat.coerce(x)
    fx = f(x)
    dy = RatSeq(lambda n: f(x + dx(n)) - fx, f"f({x} + {dx.description}) - f({x})")
    quotient = raw_div(dy, dx)
    cauchy = check_cauchy_to_depth(quotient, eps, depth)
    return DerivativeResult(quotient, cauchy, quotient(depth))


def integrate(f: Poly, a, b) -> RatSeq:
    """Midpoint sums over ``2^n`` equal cells of ``[a, b]``, one per index ``n``.

    Cell width shrinks to 0 while the cell count grows without bound; the
    integral is the value this sequence converges to.
    """
    a, b = Rat.coerce(a), Rat.coerce(b)
    if a > b:
        raise InvalidInterval(f"integration bounds out of order: {a} > {b}")
    width = b - a

    def term(n):
        cells = 2**n
        h = width / cells
        first = a + h / 2
        total = ZERO
        for i in range(cells):
            total = total + f(first + h * i)
        return total * h

    return RatSeq(term, f"midpoint sums of {f} over [{a}, {b}]")

