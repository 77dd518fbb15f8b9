"""Closed collections of reals encoded as the limit points of a rational sequence.

A :class:`SuperClass` never exposes its carrier as a membership set: the
collection it stands for is the set of limit points of the carrier, which is
closed by construction.  All builders here produce closed sets; there is no
way to ask for an open or half-open interval.

Limit-point queries run at a finite resolution ``eps`` and effort ``depth``
and return a three-valued :class:`~exactreal.verdict.Verdict`:

* finite point ``p``: TRUE once ``count`` carrier terms lie within ``eps`` of
  ``approx(p, eps/2)``;
* ``+inf`` / ``-inf``: TRUE once ``count`` terms lie beyond ``+1/eps`` / ``-1/eps``;
* FALSE only when the builder supplied a proven enclosure of the limit set
  that is far from ``p``; sampling alone never refutes.
"""

from __future__ import annotations

import bisect
import enum
import functools
import threading
from dataclasses import dataclass
from typing import Callable, Optional, Tuple, Union

from . import verdict
from .calculus import Poly
from .errors import InvalidInterval, InvalidTolerance
from .rational import ONE, ZERO, Rat
from .reals import Real, approx
from .sequences import RatSeq, seq_combine
from .verdict import Verdict

__all__ = [
    "Inf",
    "POS_INF",
    "NEG_INF",
    "Span",
    "SuperClass",
    "PairSeq",
    "interval",
    "point",
    "real_line",
    "rationals",
    "union",
    "map_range",
    "is_limit_point",
    "superclass_eq",
    "family_endpoints",
    "is_pair_limit_point",
    "graph_step",
    "DEFAULT_COUNT",
    "DEFAULT_DEPTH",
]

DEFAULT_COUNT = 3
DEFAULT_DEPTH = 10_000


class Inf(enum.Enum):
    POS = "+inf"
    NEG = "-inf"

    def __str__(self):
        return self.value


POS_INF = Inf.POS
NEG_INF = Inf.NEG

# finite(Real or Rat), +inf or -inf
ExtendedPoint = Union[Real, Rat, int, Inf]


@dataclass(frozen=True)
class Span:
    """Closed interval with optional infinite ends (``None``)."""

    lo: Optional[Rat]
    hi: Optional[Rat]

    def distance(self, c: Rat) -> Rat:
        if self.lo is not None and c < self.lo:
            return self.lo - c
        if self.hi is not None and c > self.hi:
            return c - self.hi
        return ZERO

    def reaches(self, end: Inf) -> bool:
        return (self.hi is None) if end is POS_INF else (self.lo is None)

    def __str__(self):
        lo = "-inf" if self.lo is None else str(self.lo)
        hi = "+inf" if self.hi is None else str(self.hi)
        return f"[{lo}, {hi}]"


@dataclass(frozen=True)
class SuperClass:
    """The set of limit points of ``carrier``.

    ``enclosure`` is an optional proven superset of that set, as a union of
    closed spans; ``terms_are_limit_points`` records that every carrier term
    is itself a limit point.  Both are supplied by the canonical builders and
    are what allow definitive FALSE verdicts.
    """

    carrier: RatSeq
    description: str
    enclosure: Optional[Tuple[Span, ...]] = None
    terms_are_limit_points: bool = False

    def __repr__(self):
        return f"SuperClass({self.description})"


# coordinate helpers


def _center(p, eps: Rat) -> Rat:
    if isinstance(p, Real):
        return approx(p, eps / 2)
    return Rat.coerce(p)


def _near(value: Rat, target, eps: Rat, bound: Rat) -> bool:
    # target is a Rat centre or an Inf tag; bound is 1/eps
    if target is POS_INF:
        return value > bound
    if target is NEG_INF:
        return value < -bound
    return abs(value - target) < eps


def _positive(eps) -> Rat:
    eps = Rat.coerce(eps)
    if eps <= ZERO:
        raise InvalidTolerance(f"epsilon must be positive, got {eps}")
    return eps


# builders


def _endpoint(value, default: Inf):
    if isinstance(value, Inf):
        if value is not default:
            raise InvalidInterval(f"{value} cannot be the {'lower' if default is NEG_INF else 'upper'} end")
        return None
    return Rat.coerce(value)


def _locate(n: int, size: Callable[[int], int]) -> Tuple[int, int]:
    """Split index ``n`` into (block, offset) for blocks of the given sizes."""
    block = 0
    while n >= size(block):
        n -= size(block)
        block += 1
    return block, n


def _grid_position(offset: int, cells: int) -> int:
    # both window ends first, then the interior left to right
    if offset == 0:
        return 0
    if offset == 1:
        return cells
    return offset - 1


def _sweep(lo: Optional[Rat], hi: Optional[Rat], base: int = 2) -> Callable[[int], Rat]:
    """Level-by-level grid of ``[lo, hi]`` with spacing ``<= base^-L`` at level ``L``.

    An infinite end is handled by windowing: level ``L`` covers the interval
    clipped to ``[-(L+1), L+1]``, and odd indices carry escape probes at
    ``-2^j``, ``+2^j`` (clipped to the interval) so the infinite end is
    approached exponentially fast.
    """
    if lo is not None and hi is not None:
        width = hi - lo

        def size(level):
            return base**level + 1

        def term(n):
            level, offset = _locate(n, size)
            cells = base**level
            return lo + width * _grid_position(offset, cells) / cells

        return term

    def window(level):
        reach = Rat(level + 1)
        if lo is None and hi is None:
            return -reach, reach
        if lo is None:
            return min(-reach, hi), hi
        return lo, max(reach, lo)

    @functools.lru_cache(maxsize=None)
    def cells(level):
        a, b = window(level)
        return base**level * max(1, (b - a).ceil())

    def window_size(level):
        return cells(level) + 1

    def probe(j):
        far = Rat(2 ** (j // 2))
        value = -far if j % 2 == 0 else far
        if lo is not None and value < lo:
            return lo
        if hi is not None and value > hi:
            return hi
        return value

    def term(n):
        if n % 2 == 1:
            return probe(n // 2)
        level, offset = _locate(n // 2, window_size)
        a, b = window(level)
        count = cells(level)
        return a + (b - a) * _grid_position(offset, count) / count

    return term


def interval(a, b, base: int = 2) -> SuperClass:
    """The closed interval ``[a, b]``; either end may be infinite.

    The carrier sweeps level ``L`` as ``a + k (b - a) / base^L`` for
    ``0 <= k <= base^L``, ends first.  With an infinite end, level ``L``
    sweeps the window ``[-(L+1), L+1]`` clipped to the interval at the same
    spacing, interleaved with probes at ``-2^j``, ``+2^j``.  Every real in
    the interval, and each infinite end, is a limit point; nothing else is.
    """
    lo, hi = _endpoint(a, NEG_INF), _endpoint(b, POS_INF)
    if lo is not None and hi is not None and lo > hi:
        raise InvalidInterval(f"interval endpoints out of order: {lo} > {hi}")
    if base < 2:
        raise InvalidInterval(f"sweep base must be at least 2, got {base}")
    span = Span(lo, hi)
    suffix = "" if base == 2 else f" base {base}"
    carrier = RatSeq(_sweep(lo, hi, base), f"sweep{span}{suffix}")
    return SuperClass(carrier, f"{span}{suffix}", (span,), True)


def point(q) -> SuperClass:
    q = Rat.coerce(q)
    return SuperClass(RatSeq(lambda n: q, f"<{q}>"), f"{{{q}}}", (Span(q, q),), True)


def real_line() -> SuperClass:
    """``[-inf, +inf]``: every real, plus both infinities as limit points."""
    return interval(NEG_INF, POS_INF)


def rationals() -> SuperClass:
    """An enumeration of every rational; its limit points are the whole extended line.

    Level ``L`` lists ``p/q`` for ``1 <= q <= L`` and ``|p| <= L q``.
    """

    @functools.lru_cache(maxsize=None)
    def size(level):
        level += 1
        return sum(2 * level * q + 1 for q in range(1, level + 1))

    def term(n):
        level, k = _locate(n, size)
        level += 1
        for q in range(1, level + 1):
            row = 2 * level * q + 1
            if k < row:
                return Rat(k - level * q, q)
            k -= row
        raise AssertionError("offset past end of level")

    carrier = RatSeq(term, "all p/q by height")
    return SuperClass(carrier, "enumerated rationals", (Span(None, None),), True)


def union(s1: SuperClass, s2: SuperClass) -> SuperClass:
    """Interleaved carriers; the limit set is the union of the two."""
    enclosure = None
    if s1.enclosure is not None and s2.enclosure is not None:
        enclosure = s1.enclosure + s2.enclosure
    return SuperClass(
        seq_combine("interleave", s1.carrier, s2.carrier),
        f"{s1.description} u {s2.description}",
        enclosure,
        s1.terms_are_limit_points and s2.terms_are_limit_points,
    )


def _power_span(lo: Rat, hi: Rat, k: int) -> Tuple[Rat, Rat]:
    if k == 0:
        return ONE, ONE
    a, b = lo**k, hi**k
    if k % 2 == 1:
        return a, b
    if lo >= ZERO:
        return a, b
    if hi <= ZERO:
        return b, a
    return ZERO, max(a, b)


def _poly_span(f: Poly, span: Span) -> Optional[Span]:
    if not f.coefficients:
        return Span(ZERO, ZERO)
    if f.degree == 0:
        c = f.coefficients[0]
        return Span(c, c)
    if span.lo is None or span.hi is None:
        return None
    lo_total = hi_total = ZERO
    for k, c in enumerate(f.coefficients):
        if c.is_zero():
            continue
        a, b = _power_span(span.lo, span.hi, k)
        a, b = (c * a, c * b) if c > ZERO else (c * b, c * a)
        lo_total, hi_total = lo_total + a, hi_total + b
    return Span(lo_total, hi_total)


def map_range(s: SuperClass, f: Poly) -> SuperClass:
    """Apply a polynomial to every carrier term: the range of ``f`` over ``s``.

    By continuity the limit points of the image are the images of the limit
    points.  The enclosure is a naive interval-arithmetic bound (monomial
    by monomial), so it may be wider than the true range.
    """
    enclosure = None
    if s.enclosure is not None:
        spans = [_poly_span(f, span) for span in s.enclosure]
        if all(sp is not None for sp in spans):
            enclosure = tuple(spans)
    return SuperClass(
        s.carrier.map(f, f"({f})({s.carrier.description})"),
        f"({f})({s.description})",
        enclosure,
        s.terms_are_limit_points,
    )


# queries


def _enclosure_gap(enclosure, c) -> Optional[Rat]:
    """Distance from ``c`` (a Rat or Inf) to the enclosure; ``None`` if infinite."""
    if isinstance(c, Inf):
        return ZERO if any(span.reaches(c) for span in enclosure) else None
    return min(span.distance(c) for span in enclosure)


def is_limit_point(
    s: SuperClass, p: ExtendedPoint, eps, count: int = DEFAULT_COUNT, depth: int = DEFAULT_DEPTH
) -> Verdict:
    """Limit-point test at resolution ``eps``.

    TRUE witness: ``(eps, indices)`` of the ``count`` carrier terms found.
    FALSE witness: ``(eps, gap)`` where ``gap`` bounds the distance from ``p``
    to the builder's enclosure (``None`` meaning an infinity it cannot reach).
    """
    eps = _positive(eps)
    if count < 2:
        raise InvalidTolerance(f"count must be at least 2, got {count}")
    target = p if isinstance(p, Inf) else _center(p, eps)
    if s.enclosure is not None:
        gap = _enclosure_gap(s.enclosure, target)
        # the true point is within eps/2 of the centre
        if gap is None or gap >= eps * Rat(3, 2):
            return verdict.false((eps, gap))
    bound = ONE / eps
    hits = []
    for n in range(depth + 1):
        if _near(s.carrier(n), target, eps, bound):
            hits.append(n)
            if len(hits) >= count:
                return verdict.true((eps, tuple(hits)))
    return verdict.UNKNOWN


def _unmatched(late, pool, eps: Rat, bound: Rat):
    """First term of ``late`` with nothing in ``pool`` within ``eps`` (beyond ``bound`` compares by sign)."""
    finite = sorted(v for v in pool if -bound <= v <= bound)
    has_pos = any(v > bound for v in pool)
    has_neg = any(v < -bound for v in pool)
    for w in late:
        if w > bound:
            if has_pos:
                continue
            return w
        if w < -bound:
            if has_neg:
                continue
            return w
        i = bisect.bisect_left(finite, w)
        near = [finite[j] for j in (i - 1, i) if 0 <= j < len(finite)]
        if any(abs(v - w) < eps for v in near):
            continue
        # a term just past the clip bound can still sit within eps of w
        if (w + eps > bound and has_pos) or (w - eps < -bound and has_neg):
            continue
        return w
    return None


def superclass_eq(s1: SuperClass, s2: SuperClass, eps, depth: int = DEFAULT_DEPTH,
                  settle: Optional[int] = None) -> Verdict:
    """Mutual eps-density of late carrier terms, up to ``depth``.

    Every term of one carrier with index in ``[settle, depth]`` (default
    ``depth // 2``) must have a term of the other carrier, index ``<= depth``,
    within ``eps``.  Magnitudes beyond ``1/eps`` stand for the infinity of
    their sign.  FALSE needs an unmatched term that is provably a limit point
    of its own side and provably ``eps`` away from the other side's enclosure.
    """
    eps = _positive(eps)
    if s1 is s2:
        return verdict.true((eps, depth))
    settle = depth // 2 if settle is None else settle
    bound = ONE / eps
    terms1 = [s1.carrier(n) for n in range(depth + 1)]
    terms2 = [s2.carrier(n) for n in range(depth + 1)]
    for own, other, late, pool in ((s1, s2, terms1[settle:], terms2), (s2, s1, terms2[settle:], terms1)):
        w = _unmatched(late, pool, eps, bound)
        if w is None:
            continue
        if own.terms_are_limit_points and other.enclosure is not None:
            gap = _enclosure_gap(other.enclosure, w)
            if gap >= eps:
                return verdict.false((w, gap))
        return verdict.UNKNOWN
    return verdict.true((eps, depth))


# pair sequences: interval families and graphs


Box = Tuple[Span, Span]


class PairSeq:
    """A total map from indices to ordered pairs of rationals."""

    def __init__(self, generator: Callable[[int], Tuple[Rat, Rat]], description: str = "<pairs>",
                 enclosure: Optional[Tuple[Box, ...]] = None):
        self._generator = generator
        self.description = description
        self.enclosure = enclosure
        self._cache = {}
        self._lock = threading.Lock()

    def __call__(self, n: int) -> Tuple[Rat, Rat]:
        if n < 0:
            raise IndexError(f"sequence index must be non-negative, got {n}")
        try:
            return self._cache[n]
        except KeyError:
            pass
        x, y = self._generator(n)
        value = (Rat.coerce(x), Rat.coerce(y))
        with self._lock:
            return self._cache.setdefault(n, value)

    def __repr__(self):
        return f"PairSeq({self.description})"


def _triangular(n: int) -> int:
    # block j lists k = 0..j, so every k recurs in all later blocks
    _, k = _locate(n, lambda block: block + 1)
    return k


def _segments_k(n: int) -> int:
    # block j lists k = 1..j+1, then one far probe k = 2^(j+1)
    block, offset = _locate(n, lambda block: block + 2)
    return offset + 1 if offset <= block else 2 ** (block + 1)


def family_endpoints(kind: str) -> PairSeq:
    """Endpoint pairs of a family of closed intervals.

    ``zeno``: ``[1 - 2^-k, 1 - 2^-(k+1)]``, limit pair ``(1, 1)``.
    ``nested``: ``[-2^-k, 2^-k]``, limit pair ``(0, 0)``.
    ``segments``: ``[-k, k]``, limit pair ``(-inf, +inf)``.
    Each pair recurs infinitely often, so every member is a pair-limit-point.
    """
    if kind == "zeno":
        def gen(n):
            k = _triangular(n)
            return ONE - Rat(1, 2**k), ONE - Rat(1, 2 ** (k + 1))

        box = (Span(ZERO, ONE), Span(Rat(1, 2), ONE))
    elif kind == "nested":
        def gen(n):
            k = _triangular(n)
            return -Rat(1, 2**k), Rat(1, 2**k)

        box = (Span(-ONE, ZERO), Span(ZERO, ONE))
    elif kind == "segments":
        def gen(n):
            k = _segments_k(n)
            return Rat(-k), Rat(k)

        box = (Span(None, -ONE), Span(ONE, None))
    else:
        raise ValueError(f"unknown interval family: {kind!r}")
    return PairSeq(gen, f"{kind} endpoints", (box,))


def is_pair_limit_point(
    ps: PairSeq, p, eps, count: int = DEFAULT_COUNT, depth: int = DEFAULT_DEPTH
) -> Verdict:
    """Joint limit-point test: both coordinates within ``eps`` (or beyond ``1/eps`` for infinities)."""
    eps = _positive(eps)
    if count < 2:
        raise InvalidTolerance(f"count must be at least 2, got {count}")
    px, py = p
    tx = px if isinstance(px, Inf) else _center(px, eps)
    ty = py if isinstance(py, Inf) else _center(py, eps)
    if ps.enclosure is not None:
        gaps = []
        for bx, by in ps.enclosure:
            gx, gy = _enclosure_gap((bx,), tx), _enclosure_gap((by,), ty)
            gaps.append(None if gx is None or gy is None else max(gx, gy))
        finite = [g for g in gaps if g is not None]
        if not finite or min(finite) >= eps * Rat(3, 2):
            return verdict.false((eps, min(finite) if finite else None))
    bound = ONE / eps
    hits = []
    for n in range(depth + 1):
        x, y = ps(n)
        if _near(x, tx, eps, bound) and _near(y, ty, eps, bound):
            hits.append(n)
            if len(hits) >= count:
                return verdict.true((eps, tuple(hits)))
    return verdict.UNKNOWN


def graph_step() -> PairSeq:
    """Graph of the step function: ``y = 1`` for ``x <= 0``, ``y = 2`` for ``x >= 0``, and ``[1, 2]`` at ``x = 0``.

    Three interleaved sweeps: the left ray at height 1, the right ray at
    height 2, and the vertical segment joining them at ``x = 0``.
    """
    left = _sweep(None, ZERO)
    right = _sweep(ZERO, None)
    riser = _sweep(ONE, Rat(2))
    two = Rat(2)

    def gen(n):
        part, i = n % 3, n // 3
        if part == 0:
            return left(i), ONE
        if part == 1:
            return right(i), two
        return ZERO, riser(i)

    boxes = (
        (Span(None, ZERO), Span(ONE, ONE)),
        (Span(ZERO, None), Span(two, two)),
        (Span(ZERO, ZERO), Span(ONE, two)),
    )
    return PairSeq(gen, "step function graph", boxes)
