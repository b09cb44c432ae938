# Compositional inversion, three ways.
#
# The K umbra of a pair (g, u) has moments E[g (g - n.u)^(n-1)].  The
# same numbers arise from series reversion: its generating function is
# f_g evaluated at the compositional inverse of z f_u(z).  This script
# shows the two routes agreeing, plus the classical coefficient form.

from fractions import Fraction

from umbral import gf, k_umbra, k_umbra_series, singleton, ubar
from umbral.series import TruncatedSeries, compose, multiply, power, revert

N = 8

# Reversion alone: the compositional inverse of z - z^2 has the Catalan
# numbers as coefficients, a classic sanity check.
shifted_square = TruncatedSeries((0, 1, -1) + (0,) * (N - 2))
catalan = revert(shifted_square)
print("revert(z - z^2):", [str(c) for c in catalan.coeffs])
print("round-trip gives z:", [str(c) for c in compose(shifted_square, catalan).coeffs[:4]])
print()

# The K umbra of (singleton, singleton): moments by the combinatorial
# expansion, and independently by reverting z(1+z).
g = singleton(N)
moment_route = k_umbra(g, g)
series_route = k_umbra_series(g, g)
print("K(singleton, singleton) by moments  :", [str(m) for m in moment_route.moments])
print("K(singleton, singleton) by reversion:", [str(m) for m in series_route.moments])
print("equal:", moment_route == series_route)
print()

# The coefficient form: n [z^n] f_g((z f_u)^(-1)) = [z^(n-1)] f_g' / f_u^n.
u = ubar(N)
K = k_umbra(g, u)
fg, fu = gf(g), gf(u)
fg_prime = fg.derivative()
print("coefficient form of the inversion formula, n = 1..%d:" % N)
for n in range(1, N + 1):
    lhs = n * gf(K)[n]
    rhs = multiply(fg_prime, power(fu, -n).truncate(N - 1))[n - 1]
    print(f"  n={n}: {lhs} == {rhs}  ->  {lhs == rhs}")
