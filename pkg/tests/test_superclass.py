import pytest

from exactreal.calculus import Poly
from exactreal.errors import InvalidInterval, InvalidTolerance
from exactreal.rational import ONE, Rat, ZERO
from exactreal.reals import const_pi, const_sqrt
from exactreal.superclass import (
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

X2 = Poly([0, 0, 1])


def test_interval_dyadic_levels():
    s = interval(0, 1)
    first = set(s.carrier.take(2 + 1 + 2))  # levels 0..2 contribute 2, 1, 2 new points
    assert {ZERO, ONE, Rat(1, 2)} <= first
    terms = set(s.carrier.take(2000))
    assert all(ZERO <= t <= ONE for t in terms)
    assert {Rat(k, 8) for k in range(9)} <= terms


def test_interval_examples():
    s = interval(0, 1)
    assert is_limit_point(s, Rat(1, 3), Rat(1, 1000)).is_true
    v = is_limit_point(s, 2, Rat(1, 4))
    assert v.is_false
    assert is_limit_point(s, Rat(1, 2), Rat(1, 10)).is_true
    for end in (0, 1):
        assert is_limit_point(s, end, Rat(1, 10**4), depth=10**5).is_true


def test_interval_rejects_bad_bounds():
    with pytest.raises(InvalidInterval):
        interval(1, 0)
    with pytest.raises(InvalidInterval):
        interval(POS_INF, 3)


def test_limit_point_rejects_bad_eps():
    with pytest.raises(InvalidTolerance):
        is_limit_point(interval(0, 1), 0, ZERO)
    with pytest.raises(InvalidTolerance):
        is_pair_limit_point(family_endpoints("zeno"), (1, 1), Rat(-1))


def test_real_points_are_read_at_half_eps():
    s = interval(3, 4)
    assert is_limit_point(s, const_pi(), Rat(1, 10**4)).is_true
    assert is_limit_point(s, const_sqrt(2), Rat(1, 4)).is_false


def test_outside_point_without_enclosure_is_unknown():
    bare = SuperClass(interval(0, 1).carrier, "no enclosure")
    assert is_limit_point(bare, 2, Rat(1, 4), depth=500).is_unknown


def test_infinite_ends():
    line = real_line()
    assert is_limit_point(line, POS_INF, Rat(1, 1000)).is_true
    assert is_limit_point(line, NEG_INF, Rat(1, 1000)).is_true
    ray = interval(0, POS_INF)
    assert is_limit_point(ray, POS_INF, Rat(1, 100)).is_true
    assert is_limit_point(ray, NEG_INF, Rat(1, 100)).is_false
    assert is_limit_point(ray, Rat(7, 3), Rat(1, 100)).is_true
    assert is_limit_point(ray, -1, Rat(1, 4)).is_false


def test_union_examples():
    gap = union(interval(0, 1), interval(2, 3))
    assert is_limit_point(gap, Rat(3, 2), Rat(1, 4)).is_false
    joined = union(interval(0, 1), interval(1, 2))
    assert superclass_eq(joined, interval(0, 2), Rat(1, 100), 10**4).is_true
    pair = union(point(0), point(1))
    eps = Rat(1, 4)
    assert is_limit_point(pair, 0, eps).is_true
    assert is_limit_point(pair, 1, eps).is_true
    for other in (Rat(1, 2), Rat(-1, 2), Rat(3, 2)):
        assert is_limit_point(pair, other, eps).is_false


def test_superclass_eq_examples():
    s = interval(0, 1)
    assert superclass_eq(s, s, Rat(1, 10)).is_true
    assert superclass_eq(interval(0, 1), interval(0, 2), Rat(1, 4), 2000).is_false
    halves = union(interval(0, Rat(1, 2)), interval(Rat(1, 2), 1))
    assert superclass_eq(interval(0, 1), halves, Rat(1, 100), 10**4).is_true
    assert superclass_eq(interval(0, 1), interval(0, 1, base=3), Rat(1, 100), 10**4).is_true


def test_rationals_fill_the_line():
    q = rationals()
    assert is_limit_point(q, Rat(22, 7), Rat(1, 100)).is_true
    assert is_limit_point(q, POS_INF, Rat(1, 10)).is_true
    assert superclass_eq(q, real_line(), Rat(1, 4), 3000).is_true


def test_map_range_examples():
    squares = map_range(interval(0, 1), X2)
    assert is_limit_point(squares, Rat(1, 4), Rat(1, 100)).is_true
    assert superclass_eq(map_range(point(2), X2), point(4), Rat(1, 100), 50).is_true
    sym = map_range(interval(-1, 1), X2)
    assert is_limit_point(sym, Rat(-1, 2), Rat(1, 4)).is_false
    assert is_limit_point(sym, 1, Rat(1, 100)).is_true


def test_families():
    zeno = family_endpoints("zeno")
    assert zeno(0) == (ZERO, Rat(1, 2))
    assert is_pair_limit_point(zeno, (1, 1), Rat(1, 1000)).is_true
    assert is_pair_limit_point(zeno, (Rat(1, 2), Rat(3, 4)), Rat(1, 1000)).is_true
    assert is_pair_limit_point(zeno, (0, 1), Rat(1, 1000), depth=2000).is_unknown
    nested = family_endpoints("nested")
    assert is_pair_limit_point(nested, (0, 0), Rat(1, 1000)).is_true
    assert is_pair_limit_point(nested, (-1, 1), Rat(1, 1000)).is_true
    segments = family_endpoints("segments")
    assert is_pair_limit_point(segments, (NEG_INF, POS_INF), Rat(1, 1000), depth=10**4).is_true
    assert is_pair_limit_point(segments, (-3, 3), Rat(1, 1000)).is_true
    assert is_pair_limit_point(segments, (POS_INF, POS_INF), Rat(1, 1000)).is_false
    with pytest.raises(ValueError):
        family_endpoints("spiral")


def test_every_family_pair_recurs():
    zeno = family_endpoints("zeno")
    pairs = [zeno(n) for n in range(500)]
    for k in range(5):
        target = (ONE - Rat(1, 2**k), ONE - Rat(1, 2 ** (k + 1)))
        assert pairs.count(target) >= 10


def test_constant_pair_sequence():
    const = PairSeq(lambda n: (ONE, Rat(2)))
    assert is_pair_limit_point(const, (1, 2), Rat(1, 10)).is_true


def test_step_graph():
    g = graph_step()
    eps = Rat(1, 8)
    assert is_pair_limit_point(g, (-1, 1), eps).is_true
    assert is_pair_limit_point(g, (0, Rat(3, 2)), eps).is_true
    assert is_pair_limit_point(g, (-1, 2), eps).is_false
    assert is_pair_limit_point(g, (5, 2), eps).is_true
    assert is_pair_limit_point(g, (0, 1), eps).is_true
    assert is_pair_limit_point(g, (1, 1), eps).is_false
