# %% [markdown]
# Closed collections of reals as limit points
#
# An interval is represented by a sequence that keeps revisiting every part of
# it.  Membership means "limit point of that sequence", so endpoints are
# always included and open intervals cannot be written down.

# %%
from exactreal import Rat, interval, is_limit_point, union, superclass_eq, real_line
from exactreal import POS_INF, map_range, Poly

unit = interval(0, 1)
print(unit.carrier.take(9))
for p in (0, Rat(1, 3), 1, 2):
    print(p, is_limit_point(unit, p, Rat(1, 1000)))

# %%
print(is_limit_point(real_line(), POS_INF, Rat(1, 1000)))
print(superclass_eq(union(interval(0, 1), interval(1, 2)), interval(0, 2), Rat(1, 100), 10**4))

squares = map_range(interval(-1, 1), Poly([0, 0, 1]))
print(is_limit_point(squares, Rat(1, 4), Rat(1, 100)), is_limit_point(squares, Rat(-1, 2), Rat(1, 4)))

# %% [markdown]
# Families of intervals as pair sequences
#
# Halving toward 1 gives [0,1/2], [1/2,3/4], ... and the degenerate [1,1]
# shows up as a limit pair.  Shrinking [-1/2^k, 1/2^k] leaves [0,0], and
# growing [-k, k] reaches (-inf, +inf).

# %%
from exactreal import NEG_INF, family_endpoints, graph_step, is_pair_limit_point

eps = Rat(1, 1000)
print(is_pair_limit_point(family_endpoints("zeno"), (1, 1), eps))
print(is_pair_limit_point(family_endpoints("nested"), (0, 0), eps))
print(is_pair_limit_point(family_endpoints("segments"), (NEG_INF, POS_INF), eps))

step = graph_step()
for p in [(-1, 1), (0, Rat(3, 2)), (-1, 2)]:
    print(p, is_pair_limit_point(step, p, Rat(1, 8)))
