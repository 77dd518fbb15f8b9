# %% [markdown]
# Reals as rational sequences with a modulus
#
# A real here is a lazy sequence of exact fractions plus a function that says
# how far out you must go before the terms stop moving by more than eps.

# %%
from exactreal import Rat, approx, const_pi, const_sqrt, const_e, real_arith
from exactreal import find_apartness, real_div, real_eq_test, real_lt_test, real_from_rat
from exactreal import geometric_sum_real

pi = const_pi()
print(pi.seq.take(4))
for k in (2, 6, 12):
    eps = Rat(1, 10**k)
    n = pi.modulus(eps)
    print(f"eps=1e-{k}: modulus {n}, readout {approx(pi, eps).to_decimal(k + 1)}")

# %%
# Arithmetic is termwise; the modulus of the result is derived from the inputs.
root2 = const_sqrt(2)
ratio = real_div(pi, root2, find_apartness(root2))
print(approx(ratio, Rat(1, 10**10)).to_decimal(10))

square = real_arith("mul", root2, root2)
print(approx(square, Rat(1, 10**12)).to_decimal(12))

# %%
# Comparisons are three-valued.  Closeness can be proven; exact equality cannot.
half_sums = geometric_sum_real()
one = real_from_rat(1)
print(real_eq_test(half_sums, one, Rat(1, 10**8), 64))
print(real_lt_test(half_sums, one, 100))       # equal, so no witness exists
print(real_lt_test(const_e(), pi, 64))         # e < pi, witnessed
