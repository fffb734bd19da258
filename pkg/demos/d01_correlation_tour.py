"""
A tour of the correlation functions
===================================

This script walks through the basic objects of the library: exact truncated
q-series, the brute-force Fock-space trace oracles, and the closed-form
expressions for one- and two-point functions.  Every comparison is exact
(rational coefficients, no floating point).
"""

from fractions import Fraction as F

from qfock.qseries import Param, beta_scalar, first_difference, pochhammer_inf
from qfock import closedform, fock

# ----------------------------------------------------------------------
# 1. Exact q-series
# ----------------------------------------------------------------------
# Series are sparse Laurent polynomials in q (half-integral exponents are
# allowed) truncated at a stated order.  The Euler product 1/(q;q)_inf is a
# one-liner:

N = 8
euler = pochhammer_inf(Param(F(1), 1), N).invert()
print("1/(q;q)_inf up to q^%d:" % N)
print("   ", euler)
print()

# ----------------------------------------------------------------------
# 2. One-point function: oracle vs closed form
# ----------------------------------------------------------------------
# A "point" is a Param: the value s^2 q^d.  Here t = (2/3)^2 q^0.

t = Param(F(2, 3))
points = (t,)

oracle = fock.a_sector_trace(0, points, N)
closed = closedform.one_point_minus1(t, N)

print("one-point function at t = 4/9, charge-zero sector, up to q^%d" % N)
print("  oracle (Fock trace):", oracle)
print("  closed form:        ", closed)
print("  first difference:   ", first_difference(oracle, closed))
print()

# The constant term is the elementary rational function
#   beta(t) = t^(1/2) / (1 - t),
# and the q^1 coefficient is beta(t) - 1/beta(t).
b = beta_scalar(t)
print("  q^0 coefficient should be beta(t) = %s" % b)
print("  q^1 coefficient should be beta - 1/beta = %s" % (b - 1 / b))
print()

# ----------------------------------------------------------------------
# 3. Generalized two-point function
# ----------------------------------------------------------------------
# The generalized trace carries two extra boundary parameters x and y.  The
# closed form combines Omega kernels in both orderings of the arguments.

x = Param(F(2, 5))
y = Param(F(3, 7))
t1 = Param(F(2, 3))
t2 = Param(F(3, 5))
M = 6

oracle2 = fock.a_generalized_trace(x, y, (t1, t2), M)
closed2 = closedform.generalized_two_point(x, y, t1, t2, M)

print("generalized two-point function at (4/9, 9/25) up to q^%d" % M)
print("  oracle matches closed form:", first_difference(oracle2, closed2) is None)
print()

# ----------------------------------------------------------------------
# 4. q-shifted points and per-mode resummation
# ----------------------------------------------------------------------
# Points may carry a genuine power of q.  State enumeration cannot truncate
# such a trace, but the per-mode resummation module can.  At a plain scalar
# point both strategies agree; at a q-shifted point only the resummation
# applies.

from qfock import modesum

scalar = Param(F(2, 3))
resummed = modesum.a_generalized_trace(x, y, (scalar,), M)
brute = fock.a_generalized_trace(x, y, (scalar,), M)
print("scalar point, resummed vs brute force:",
      first_difference(resummed, brute) is None)

shifted_pt = Param(F(2, 3), 1)       # value (4/9) q
shifted = modesum.a_generalized_trace(x, y, (shifted_pt,), M)
print("one-point function at the q-shifted point (4/9) q:")
print("   ", shifted)
