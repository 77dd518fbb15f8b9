"""Lazy, deterministic sequences of rationals indexed from 0.

A :class:`RatSeq` wraps a pure ``index -> Rat`` function.  Evaluated terms are
memoized behind a lock; the cache never changes what a term evaluates to.
"""

from __future__ import annotations

import enum
import threading
from dataclasses import dataclass
from typing import Callable, Optional, Tuple

from .errors import InvalidTolerance
from .rational import ONE, ZERO, Rat

__all__ = [
    "RatSeq",
    "CauchyStatus",
    "CauchyVerdict",
    "seq_eval",
    "seq_combine",
    "check_cauchy_to_depth",
    "constant",
    "harmonic",
    "inverse_powers",
    "geometric_partial_sums",
    "alternating",
    "partial_sums",
]


class RatSeq:
    """A total map from indices ``0, 1, 2, ...`` to rationals."""

    def __init__(self, generator: Callable[[int], Rat], description: str = "<sequence>"):
        self._generator = generator
        self.description = description
        self._cache = {}
        self._lock = threading.Lock()

    def __call__(self, n: int) -> Rat:
        if n < 0:
            raise IndexError(f"sequence index must be non-negative, got {n}")
        try:
            return self._cache[n]
        except KeyError:
            pass
        value = Rat.coerce(self._generator(n))
        with self._lock:
            # first writer wins, so racing readers all see one object
            return self._cache.setdefault(n, value)

    def take(self, count: int, start: int = 0):
        return [self(i) for i in range(start, start + count)]

    def map(self, fn: Callable[[Rat], Rat], description: Optional[str] = None) -> "RatSeq":
        return RatSeq(lambda n: fn(self(n)), description or f"map({self.description})")

    def __add__(self, other):
        return seq_combine("add", self, _as_seq(other))

    def __sub__(self, other):
        return seq_combine("sub", self, _as_seq(other))

    def __mul__(self, other):
        return seq_combine("mul", self, _as_seq(other))

    __radd__ = __add__
    __rmul__ = __mul__

    def __neg__(self):
        return RatSeq(lambda n: -self(n), f"-({self.description})")

    def __repr__(self):
        return f"RatSeq({self.description})"


def _as_seq(value) -> RatSeq:
    if isinstance(value, RatSeq):
        return value
    return constant(Rat.coerce(value))


def seq_eval(s: RatSeq, n: int) -> Rat:
    return s(n)


def seq_combine(op: str, s1: RatSeq, s2: RatSeq) -> RatSeq:
    """Termwise ``add``/``sub``/``mul``, or ``interleave`` (s1(0), s2(0), s1(1), ...)."""
    if op == "add":
        return RatSeq(lambda n: s1(n) + s2(n), f"({s1.description}) + ({s2.description})")
    if op == "sub":
        return RatSeq(lambda n: s1(n) - s2(n), f"({s1.description}) - ({s2.description})")
    if op == "mul":
        return RatSeq(lambda n: s1(n) * s2(n), f"({s1.description}) * ({s2.description})")
    if op == "interleave":
        return RatSeq(
            lambda n: s1(n // 2) if n % 2 == 0 else s2(n // 2),
            f"interleave({s1.description}, {s2.description})",
        )
    raise ValueError(f"unknown sequence operation: {op!r}")


# generators


def constant(q) -> RatSeq:
    q = Rat.coerce(q)
    return RatSeq(lambda n: q, f"<{q}>")


def harmonic(scale=1) -> RatSeq:
    """``scale / (n + 1)``; a zero-converging sequence with no zero terms."""
    scale = Rat.coerce(scale)
    return RatSeq(lambda n: scale / (n + 1), f"{scale}/(n+1)")


def inverse_powers(base: int, scale=1) -> RatSeq:
    """``scale * base**-n``."""
    scale = Rat.coerce(scale)
    b = Rat(base)
    return RatSeq(lambda n: scale / b**n, f"{scale}/{base}^n")


def geometric_partial_sums(base: int = 2) -> RatSeq:
    """``sum(base**-k, k=1..n)``; term 0 is the empty sum."""
    ratio = Rat(1, base)

    def term(n):
        # closed form of the finite geometric sum
        return ratio * (ONE - ratio**n) / (ONE - ratio)

    return RatSeq(term, f"sum(1/{base}^k, k=1..n)")


def alternating(scale=1) -> RatSeq:
    """``(-1)**n * scale``."""
    scale = Rat.coerce(scale)
    return RatSeq(lambda n: scale if n % 2 == 0 else -scale, f"(-1)^n*{scale}")


def partial_sums(term: Callable[[int], Rat], description: str = "<series>", start: int = 0) -> RatSeq:
    """``sum(term(k), k=start..start+n)`` as a sequence in ``n``.

    Sums are accumulated incrementally in a shared prefix table, so a scan
    to depth ``d`` costs ``d`` term evaluations rather than ``d**2``.
    """
    prefix = []
    lock = threading.Lock()

    def generator(n):
        with lock:
            while len(prefix) <= n:
                k = len(prefix)
                previous = prefix[-1] if prefix else ZERO
                prefix.append(previous + Rat.coerce(term(start + k)))
            return prefix[n]

    return RatSeq(generator, description)


# finite-depth Cauchy checking


class CauchyStatus(enum.Enum):
    HOLDS_TO_DEPTH = "holds-to-depth"
    COUNTEREXAMPLE = "counterexample"


@dataclass(frozen=True)
class CauchyVerdict:
    """Outcome of a finite Cauchy scan.

    ``settle`` is the index ``m`` whose tail up to ``depth`` stayed within
    epsilon of ``q_m`` (holds-to-depth only).  ``witness`` is a violating
    ``(m, n, gap)`` with ``m < n <= depth`` and ``gap >= epsilon``.
    """

    status: CauchyStatus
    epsilon: Rat
    depth: int
    settle: Optional[int] = None
    witness: Optional[Tuple[int, int, Rat]] = None

    @property
    def holds(self) -> bool:
        return self.status is CauchyStatus.HOLDS_TO_DEPTH


def check_cauchy_to_depth(s: RatSeq, epsilon, depth: int) -> CauchyVerdict:
    """Look for an ``m < depth`` with ``|q_m - q_n| < epsilon`` for every ``m < n <= depth``.

    The smallest such ``m`` is reported as the settling index.  When no index
    settles, the first violating pair in (n, m) order is the counterexample.
    A holds-to-depth verdict is evidence, not a proof.
    """
    epsilon = Rat.coerce(epsilon)
    if epsilon <= ZERO:
        raise InvalidTolerance(f"epsilon must be positive, got {epsilon}")
    if depth < 1:
        raise InvalidTolerance(f"depth must be at least 1, got {depth}")
    terms = [s(i) for i in range(depth + 1)]

    # m settles iff every later term lies in the open epsilon-ball around q_m;
    # scan backwards tracking the suffix min and max
    settle = None
    lo = hi = terms[depth]
    for m in range(depth - 1, -1, -1):
        q = terms[m]
        if hi - q < epsilon and q - lo < epsilon:
            settle = m
        if q < lo:
            lo = q
        if q > hi:
            hi = q
    if settle is not None:
        return CauchyVerdict(CauchyStatus.HOLDS_TO_DEPTH, epsilon, depth, settle=settle)

    lo = hi = terms[0]
    for n in range(1, depth + 1):
        q = terms[n]
        if q - lo >= epsilon or hi - q >= epsilon:
            for m in range(n):
                gap = abs(terms[m] - q)
                if gap >= epsilon:
                    return CauchyVerdict(
                        CauchyStatus.COUNTEREXAMPLE, epsilon, depth, witness=(m, n, gap)
                    )
        if q < lo:
            lo = q
        if q > hi:
            hi = q
    raise AssertionError("unreachable: an unsettled scan always has a violating pair")
