"""Reals as Cauchy sequences of rationals carrying an explicit convergence modulus.

A :class:`Real` is a :class:`~exactreal.sequences.RatSeq` ``q`` together with a
modulus ``N`` such that ``|q_m - q_n| < eps`` whenever ``m, n > N(eps)``.  The
modulus is what turns readout into a total operation: ``approx(x, eps)`` is
``q[N(eps) + 1]`` and lies within ``eps`` of the limit.

Arithmetic is termwise on the sequences; each operation derives the modulus
of its result from the moduli of its operands.  Comparisons are
semi-decidable and return a three-valued :class:`~exactreal.verdict.Verdict`.
"""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass
from typing import Callable, Optional

from . import verdict
from .errors import (
    DomainError,
    EmptyQuotient,
    InvalidApartness,
    InvalidTolerance,
)
from .rational import ONE, ZERO, Rat
from .sequences import RatSeq, constant, geometric_partial_sums, partial_sums
from .verdict import Verdict

__all__ = [
    "Real",
    "ApartnessWitness",
    "real_from_rat",
    "real_arith",
    "real_div",
    "find_apartness",
    "raw_div",
    "real_eq_test",
    "real_lt_test",
    "approx",
    "const_pi",
    "const_e",
    "const_sqrt",
    "real_sqrt",
    "geometric_sum_real",
    "DEFAULT_APARTNESS_SCAN",
]

DEFAULT_APARTNESS_SCAN = 64
RAW_DIV_SCAN_BOUND = 10_000

Modulus = Callable[[Rat], int]


def _positive(eps, what="epsilon") -> Rat:
    eps = Rat.coerce(eps)
    if eps <= ZERO:
        raise InvalidTolerance(f"{what} must be positive, got {eps}")
    return eps


def dyadic_index(eps: Rat, shift: int = 0) -> int:
    """Smallest ``N >= 0`` with ``2**-(N + shift) <= eps``."""
    n, d = eps.numerator, eps.denominator
    ceiling = -(-d // n)
    return max(0, (ceiling - 1).bit_length() - shift)


def first_index_below(bound: Callable[[int], Rat], eps: Rat, strict: bool = False) -> int:
    """Smallest ``N >= 0`` with ``bound(N) <= eps`` (``<`` if strict), for decreasing ``bound``."""

    def ok(k):
        b = bound(k)
        return b < eps if strict else b <= eps

    if ok(0):
        return 0
    lo, hi = 0, 1
    while not ok(hi):
        lo, hi = hi, hi * 2
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if ok(mid):
            hi = mid
        else:
            lo = mid
    return hi


class Real:
    """A rational Cauchy sequence with a convergence modulus.

    Python operators build the termwise combinations; ``x / y`` searches for
    an apartness witness for ``y`` and fails with
    :class:`~exactreal.errors.InvalidApartness` if none is found.
    """

    def __init__(self, seq: RatSeq, modulus: Modulus, description: Optional[str] = None):
        self.seq = seq
        self._modulus = modulus
        self.description = description or seq.description
        self._moduli = {}
        self._bound = None
        self._lock = threading.Lock()

    def modulus(self, eps) -> int:
        eps = _positive(eps)
        try:
            return self._moduli[eps]
        except KeyError:
            pass
        value = int(self._modulus(eps))
        if value < 0:
            raise ValueError(f"modulus of {self.description} returned a negative index")
        self._moduli[eps] = value
        return value

    def approx(self, eps) -> Rat:
        return approx(self, eps)

    def bound(self) -> Rat:
        """A rational ``B > 0`` with ``|q_n| < B`` for every index ``n``."""
        with self._lock:
            if self._bound is None:
                settle = self.modulus(ONE)
                largest = max(abs(self.seq(i)) for i in range(settle + 2))
                self._bound = largest + ONE
            return self._bound

    def __add__(self, other):
        return real_arith("add", self, _as_real(other))

    def __radd__(self, other):
        return real_arith("add", _as_real(other), self)

    def __sub__(self, other):
        return real_arith("sub", self, _as_real(other))

    def __rsub__(self, other):
        return real_arith("sub", _as_real(other), self)

    def __mul__(self, other):
        return real_arith("mul", self, _as_real(other))

    def __rmul__(self, other):
        return real_arith("mul", _as_real(other), self)

    def __neg__(self):
        return real_arith("neg", self)

    def __truediv__(self, other):
        other = _as_real(other)
        return real_div(self, other, find_apartness(other))

    def __rtruediv__(self, other):
        return _as_real(other) / self

    def __repr__(self):
        return f"Real({self.description})"


def _as_real(value) -> Real:
    if isinstance(value, Real):
        return value
    return real_from_rat(Rat.coerce(value))


def real_from_rat(q) -> Real:
    """The constant sequence ``<q>``; every tail is exact, so the modulus is 0."""
    q = Rat.coerce(q)
    return Real(constant(q), lambda eps: 0, str(q))


def real_arith(op: str, x: Real, y: Optional[Real] = None) -> Real:
    """Termwise ``add``, ``sub``, ``mul`` or ``neg`` with a derived modulus."""
    if op == "neg":
        return Real(-x.seq, x.modulus, f"-({x.description})")
    if y is None:
        raise TypeError(f"real_arith({op!r}) needs two operands")
    if op == "add":
        return Real(
            x.seq + y.seq,
            lambda eps: max(x.modulus(eps / 2), y.modulus(eps / 2)),
            f"({x.description} + {y.description})",
        )
    if op == "sub":
        if x is y:
            # q_n - q_n is exactly 0 at every index
            return Real(constant(ZERO), lambda eps: 0, f"({x.description} - itself)")
        return Real(
            x.seq - y.seq,
            lambda eps: max(x.modulus(eps / 2), y.modulus(eps / 2)),
            f"({x.description} - {y.description})",
        )
    if op == "mul":
        # |x_m y_m - x_n y_n| <= B_x |y_m - y_n| + B_y |x_m - x_n|
        def modulus(eps):
            bx, by = x.bound(), y.bound()
            return max(x.modulus(eps / (2 * by)), y.modulus(eps / (2 * bx)))

        return Real(x.seq * y.seq, modulus, f"({x.description} * {y.description})")
    raise ValueError(f"unknown real operation: {op!r}")


@dataclass(frozen=True)
class ApartnessWitness:
    """Claim that ``|q'_n| >= delta`` for every ``n > k``."""

    delta: Rat
    k: int


def verify_apartness(y: Real, w: ApartnessWitness, scan: int = DEFAULT_APARTNESS_SCAN) -> None:
    """Check ``w`` against ``y`` or raise :class:`InvalidApartness`.

    Requires ``N_y(delta/2) <= k`` and ``|q'_n| >= delta`` on ``k+1 .. k+scan``.
    Together these give ``|q'_n| > delta/2`` for every ``n > k``.
    """
    delta = Rat.coerce(w.delta)
    if delta <= ZERO:
        raise InvalidApartness(f"apartness bound must be positive, got {delta}")
    if w.k < 0:
        raise InvalidApartness(f"apartness index must be non-negative, got {w.k}")
    settle = y.modulus(delta / 2)
    if settle > w.k:
        raise InvalidApartness(
            f"{y.description} has not settled to within {delta / 2} by index {w.k} "
            f"(modulus gives {settle})"
        )
    for n in range(w.k + 1, w.k + scan + 1):
        if abs(y.seq(n)) < delta:
            raise InvalidApartness(f"|term {n}| = {abs(y.seq(n))} < {delta} for {y.description}")


def find_apartness(y: Real, effort: int = 64, scan: int = DEFAULT_APARTNESS_SCAN) -> ApartnessWitness:
    """Search the dyadic schedule ``delta = 1/2, 1/4, ...`` for a witness that ``y`` is apart from 0."""
    for j in range(1, effort + 1):
        delta = Rat(1, 2**j)
        k = y.modulus(delta / 2)
        # every later term is within delta/2 of this one
        if abs(y.seq(k + 1)) >= delta * Rat(3, 2):
            w = ApartnessWitness(delta, k)
            verify_apartness(y, w, scan)
            return w
    raise InvalidApartness(f"{y.description} is not provably apart from 0 (tried delta down to 2^-{effort})")


def real_div(x: Real, y: Real, w: ApartnessWitness, scan: int = DEFAULT_APARTNESS_SCAN) -> Real:
    """Termwise quotient ``x_n / y_n`` past the witnessed index ``k``.

    Indices ``n <= k`` repeat the term at ``k + 1``.  The proven lower bound on
    the denominator is ``delta/2`` (see :func:`verify_apartness`), so the
    modulus is ``max(k, N_x(eps*d/2), N_y(eps*d**2/(2*B_x)))`` with ``d = delta/2``.
    """
    verify_apartness(y, w, scan)
    k = w.k
    low = Rat.coerce(w.delta) / 2

    def term(n):
        j = max(n, k + 1)
        return x.seq(j) / y.seq(j)

    def modulus(eps):
        bx = x.bound()
        return max(k, x.modulus(eps * low / 2), y.modulus(eps * low * low / (2 * bx)))

    return Real(RatSeq(term, f"({x.seq.description}) / ({y.seq.description})"), modulus,
                f"({x.description} / {y.description})")


def raw_div(x: RatSeq, y: RatSeq, scan_bound: int = RAW_DIV_SCAN_BOUND) -> RatSeq:
    """Unguarded termwise quotient; indices where ``y`` vanishes are skipped.

    Term ``j`` of the result is ``x(i_j) / y(i_j)`` where ``i_j`` is the ``j``-th
    index with ``y(i) != 0``.  No modulus is attached: whether the quotient
    converges, and to what, depends on the chosen representations.
    """
    indices = []
    lock = threading.Lock()

    def nonzero_index(j):
        with lock:
            while len(indices) <= j:
                start = indices[-1] + 1 if indices else 0
                for i in range(start, start + scan_bound):
                    if not y(i).is_zero():
                        indices.append(i)
                        break
                else:
                    raise EmptyQuotient(
                        f"{y.description} is zero at every index in [{start}, {start + scan_bound})"
                    )
            return indices[j]

    nonzero_index(0)

    def term(j):
        i = nonzero_index(j)
        return x(i) / y(i)

    return RatSeq(term, f"raw({x.description}) / ({y.description})")


def approx(x: Real, eps) -> Rat:
    """``q[N(eps) + 1]``: any two readouts at ``e1``, ``e2`` differ by less than ``max(e1, e2)``."""
    eps = _positive(eps)
    return x.seq(x.modulus(eps) + 1)


def real_eq_test(x: Real, y: Real, eps, depth: int) -> Verdict:
    """Decide ``|x - y| < eps`` (TRUE) or ``|x - y| >= eps`` (FALSE) within ``depth`` terms.

    Tolerances ``t = eps/2, eps/4, ...`` are tried while ``N(t) + 1 <= depth``.
    The witness is ``(t, N)``: beyond index ``N`` the difference is within ``t``
    of the term read at ``N + 1``.  This is eps-closeness, not equality.
    """
    eps = _positive(eps)
    diff = real_arith("sub", x, y)
    t = eps / 2
    for _ in range(max(depth, 1)):
        settle = diff.modulus(t)
        if settle + 1 > depth:
            break
        gap = abs(diff.seq(settle + 1))
        if gap + t < eps:
            return verdict.true((t, settle))
        if gap - t >= eps:
            return verdict.false((t, settle))
        t = t / 2
    return verdict.UNKNOWN


def real_lt_test(x: Real, y: Real, depth: int) -> Verdict:
    """Look for a witness ``(eps, m)`` with ``x_n + eps < y_n`` for all ``n > m``.

    ``eps`` runs over ``1/2, 1/4, ...``; ``m`` is the modulus of ``y - x`` at
    ``eps``, so the tail condition is proven rather than sampled.  Absence of
    a witness is reported as unknown, never as a disproof.
    """
    if depth < 1:
        raise InvalidTolerance(f"depth must be at least 1, got {depth}")
    diff = real_arith("sub", y, x)
    for j in range(1, depth + 1):
        t = Rat(1, 2**j)
        settle = diff.modulus(t)
        if settle + 1 > depth:
            break
        # for n > settle: diff_n > diff_{settle+1} - t >= t
        if diff.seq(settle + 1) >= 2 * t:
            return verdict.true((t, settle))
    return verdict.UNKNOWN


# constants, each with its construction and a proven modulus


def geometric_sum_real() -> Real:
    """``<sum(2^-k, k=1..n)> = <1 - 2^-n>``, converging to 1.

    For ``m, n > N``: ``|2^-m - 2^-n| < 2^-(N+1)``.
    """
    return Real(geometric_partial_sums(2), lambda eps: dyadic_index(eps, 1), "sum(2^-k)")


def _arctan_inv_term(x: int):
    def term(k):
        value = Rat(1, (2 * k + 1) * x ** (2 * k + 1))
        return value if k % 2 == 0 else -value

    return term


def const_pi() -> Real:
    """Machin's formula ``pi = 16 atan(1/5) - 4 atan(1/239)``, partial sums to ``k = n``.

    Both series alternate with decreasing terms, so partial sums past index
    ``N`` stay within one term ``a_{N+2}`` of each other.  Hence
    ``|q_m - q_n| <= 16/((2N+5) 5^(2N+5)) + 4/((2N+5) 239^(2N+5))``.
    """
    a5, a239 = _arctan_inv_term(5), _arctan_inv_term(239)
    seq = partial_sums(lambda k: 16 * a5(k) - 4 * a239(k), "pi")

    def tail(n):
        e = 2 * n + 5
        return Rat(16, e * 5**e) + Rat(4, e * 239**e)

    return Real(seq, lambda eps: first_index_below(tail, eps, strict=True), "pi")


def const_e() -> Real:
    """``sum(1/k!, k=0..n)``.  For ``m > n > N`` the gap is below ``2/(N+2)!``."""
    seq = partial_sums(lambda k: Rat(1, math.factorial(k)), "e")
    return Real(seq, lambda eps: first_index_below(lambda n: Rat(2, math.factorial(n + 2)), eps), "e")


def _exact_sqrt(q: Rat) -> Optional[Rat]:
    a, b = q.numerator, q.denominator
    ra, rb = math.isqrt(a), math.isqrt(b)
    if ra * ra == a and rb * rb == b:
        return Rat(ra, rb)
    return None


def const_sqrt(q) -> Real:
    """Square root of a non-negative rational by Newton's iteration.

    Term ``n`` runs ``x <- (x + q/x)/2`` from the seed ``max(1, q)``, rounding
    each iterate up to the grid ``2^-(n+4)``; rounding up keeps every iterate
    ``>= sqrt(q)``, so ``sqrt(q)`` lies in ``[q/x, x]``.  Iteration stops once
    ``x - q/x < 2^-(n+1)``, giving ``0 <= q_n - sqrt(q) < 2^-(n+1)`` and
    ``|q_m - q_n| < 2^-(N+2)`` for ``m, n > N``.

    Exact squares return the constant real.
    """
    q = Rat.coerce(q)
    if q < ZERO:
        raise DomainError(f"sqrt of negative rational {q}")
    root = _exact_sqrt(q)
    if root is not None:
        r = real_from_rat(root)
        r.description = f"sqrt({q})"
        return r
    seed = max(ONE, q)

    def term(n):
        scale = 2 ** (n + 4)
        target = Rat(1, 2 ** (n + 1))
        x = seed
        while x - q / x >= target:
            x = _ceil_grid((x + q / x) / 2, scale)
        return x

    return Real(RatSeq(term, f"sqrt({q})"), lambda eps: dyadic_index(eps, 2), f"sqrt({q})")


def _ceil_grid(value: Rat, scale: int) -> Rat:
    return Rat((value * scale).ceil(), scale)


def real_sqrt(x: Real, depth: int = 64) -> Real:
    """Square root of a non-negative real.

    Term ``n`` reads ``a = approx(x, 4^-(n+2))`` and returns
    ``isqrt(floor(a 4^(n+2))) / 2^(n+2)``.  Since ``|sqrt a - sqrt x| <= sqrt|a - x|``
    each term is within ``2^-(n+1)`` of ``sqrt x``.  A readout proving
    ``x < 0`` raises :class:`DomainError`.
    """
    if real_lt_test(x, real_from_rat(ZERO), depth).is_true:
        raise DomainError(f"sqrt of negative real {x.description}")

    def term(n):
        scale = 4 ** (n + 2)
        tol = Rat(1, scale)
        a = approx(x, tol)
        if a < -tol:
            raise DomainError(f"sqrt of negative real {x.description}")
        if a < ZERO:
            a = ZERO
        return Rat(math.isqrt((a * scale).floor()), 2 ** (n + 2))

    return Real(RatSeq(term, f"sqrt({x.seq.description})"), lambda eps: dyadic_index(eps, 1),
                f"sqrt({x.description})")
