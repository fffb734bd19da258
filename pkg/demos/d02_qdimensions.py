"""
q-dimensions and duality reduction
==================================

The library computes graded dimensions (q-dimensions) of highest-weight
modules for three infinite-rank families, both as Weyl-type signed sums over
charge-slice series and as product formulas, and cross-checks them against a
multi-variable trace extraction.
"""

from fractions import Fraction as F

from qfock.qseries import first_difference
from qfock import closedform

N = 10

# ----------------------------------------------------------------------
# 1. Rank-one q-dimensions for each family
# ----------------------------------------------------------------------
# Labels are integer tuples (one entry per rank).  At rank one every family
# starts 1 + O(q):

print("rank-one q-dimensions up to q^%d" % N)
for algebra, level in (("a", "-1"), ("c", "-1"), ("c", "-3/2"),
                       ("d", "-1"), ("d", "-1/2")):
    s = closedform.qdim_closed(algebra, level, (0,), N)
    print("  %s at level %-4s : %s" % (algebra, level, s))
print()

# ----------------------------------------------------------------------
# 2. Weyl-sum form vs product form
# ----------------------------------------------------------------------
# For the positive half-integral levels of the c family both a signed Weyl
# sum and an infinite-product expression are available; they agree exactly.

lam = (2, 1)
w = closedform.qdim_closed("c", "3/2", lam, N, form="weyl")
p = closedform.qdim_closed("c", "3/2", lam, N, form="product")
print("c family, level 3/2, label %s:" % (lam,))
print("  weyl sum = product form:", first_difference(w, p) is None)
print()

# ----------------------------------------------------------------------
# 3. Independent check: extraction from a multi-variable trace
# ----------------------------------------------------------------------
# Each q-dimension also falls out of a Fock-space trace carrying one charge
# variable per rank, by reading off a dominant monomial.  This never touches
# the closed formulas, so agreement is a genuine cross-check.

inst = closedform.duality_instance("c", "-l", 2)
for lam in ((0, 0), (1, 0), (2, 1)):
    lhs = closedform.qdim_closed("c", "-2", lam, N)
    rhs = closedform.extract_dominant(inst, lam, (), N)
    print("c at level -2, label %s: closed = extracted: %s"
          % (lam, first_difference(lhs, rhs) is None))
print()

# ----------------------------------------------------------------------
# 4. Duality reduction of correlation functions
# ----------------------------------------------------------------------
# An n-point function of the infinite-rank algebra decomposes as a sum over
# assignments of the points to the rank-many charged factors.

from qfock.qseries import Param

pts = (Param(F(2, 3)),)
lhs = closedform.extract_dominant(inst, (1, 0), pts, 8)
rhs = closedform.duality_reduce(inst, (1, 0), pts, 8, mode="assignment")
print("one-point function at label (1, 0): extraction = assignment sum:",
      first_difference(lhs, rhs) is None)
