# Moment sequences and the dot-operation algebra.
#
# An umbra is a finite moment sequence m_0..m_N with m_0 = 1, tied to a
# truncated generating function f by m_n = n! [z^n] f(z).  This script
# walks through the named umbrae and the operations that combine them.

from fractions import Fraction

from umbral import (
    add,
    augmentation,
    bell,
    derivative_umbra,
    dot,
    dot_scalar,
    from_series,
    gf,
    scalar_umbra,
    singleton,
    ubar,
)
from umbral.series import TruncatedSeries

N = 6

# The four named umbrae.  augmentation is the umbra of the constant
# series 1, singleton the umbra of 1 + z, bell the umbra of exp(e^z - 1)
# (its moments are the Bell numbers), ubar the umbra of 1/(1-z) with
# moments n!.
for name, u in [
    ("augmentation", augmentation(N)),
    ("singleton", singleton(N)),
    ("bell", bell(N)),
    ("ubar", ubar(N)),
]:
    print(f"{name:13s} moments: {[str(m) for m in u.moments]}")

print()

# The generating-function bijection is exact both ways.
geometric = TruncatedSeries([1] * (N + 1))
print("umbra of 1/(1-z) equals ubar:", from_series(geometric) == ubar(N))
print("gf(bell) coefficients:", [str(c) for c in gf(bell(N)).coeffs])
print()

# Adding umbrae multiplies generating functions; the moment rule is the
# binomial convolution.  Summands are always treated as distinct copies.
two_singletons = add(singleton(N), singleton(N))
print("singleton + singleton:", [str(m) for m in two_singletons.moments])
print("which is the umbra of (1+z)^2:", [str(c) for c in gf(two_singletons).coeffs[:3]])
print()

# dot_scalar(a, u) raises the generating function to the power a.  For a
# positive integer it is an iterated sum of distinct copies; rational and
# negative values work just as well.
print("2.singleton == singleton + singleton:", dot_scalar(2, singleton(N)) == two_singletons)
print("(-1).ubar moments:", [str(m) for m in dot_scalar(-1, ubar(N)).moments])
print("(1/2).ubar moments:", [str(m) for m in dot_scalar(Fraction(1, 2), ubar(N)).moments])
print()

# dot(g, u) composes generating functions through a logarithm.  The
# singleton and the bell umbra are mutually inverse under it; composing
# them in either order gives the unity umbra, whose moments are all 1.
print("singleton . bell:", [str(m) for m in dot(singleton(N), bell(N)).moments])
print("bell . singleton:", [str(m) for m in dot(bell(N), singleton(N)).moments])
print("unity           :", [str(m) for m in scalar_umbra(1, N).moments])
print()

# The derivative umbra shifts moments (m_n becomes n * m_{n-1}), which on
# the series side is f -> 1 + z f(z).
print("derivative of ubar:", [str(m) for m in derivative_umbra(ubar(N)).moments])
print("derivative of augmentation is the singleton:",
      derivative_umbra(augmentation(N)) == singleton(N))
