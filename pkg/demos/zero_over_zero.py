# %% [markdown]
# Dividing sequences that both go to zero
#
# The termwise quotient of two zero-converging sequences has no fixed value:
# it depends on which sequences you picked.

# %%
from exactreal import Rat, check_cauchy_to_depth, raw_div
from exactreal.sequences import alternating, harmonic

dx = harmonic(1)                      # 1, 1/2, 1/3, ...
for name, top in [("1/(n+1)", harmonic(1)), ("2/(n+1)", harmonic(2)),
                  ("(-1)^n/(n+1)", alternating(1) * harmonic(1))]:
    q = raw_div(top, dx)
    verdict = check_cauchy_to_depth(q, Rat(1, 2), 20)
    print(f"{name:>14} / 1/(n+1): {[str(v) for v in q.take(5)]}  {verdict.status.value}")

# %%
# A derivative is the same kind of quotient, with dy built from dx.
from exactreal import Poly, derivative_at, symbolic_derivative
from exactreal.sequences import inverse_powers

f = Poly([0, 0, 1])                   # x^2
result = derivative_at(f, 3, inverse_powers(2), Rat(1, 10**6), 30)
print(result.quotient.take(4))        # 2x + dx at x = 3
print(result.estimate.to_decimal(9), result.cauchy.status.value)
print(symbolic_derivative(f)(3))

# %%
# Integrals: cell width to 0 while the number of cells grows.
from exactreal import integrate

sums = integrate(f, 0, 1)
for n in (0, 2, 4, 8):
    print(n, sums(n), sums(n).to_decimal(8))
