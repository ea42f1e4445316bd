"""
Interval sets and their reduction
=================================

Walk through the nested/apart interval sets for a small D: list them,
see why a candidate fails, reduce, and grow back along a fibre.
"""

from almost_special import IntervalSet, enumerate_sets, reduce_set, validate
from almost_special.basis_sets import fibre, growth_set, saturate

D = 6

# every admissible set for D = 6; there are 35 of them
sets = enumerate_sets(D)
print(len(sets), "sets for D =", D)
for B in sets[:8]:
    print("  ", B.render())

# a set that is not admissible, and the witness the validator returns
print(validate(IntervalSet(D, ((2, 4),))))
print(validate(IntervalSet(D, ((1, 3), (3, 5)))))

# reduction drops the outermost even-ended members
B = IntervalSet(D, ((3, 3), (2, 4), (6, 6)))
print(B.render(), "->", reduce_set(B).render())

# each reduced set owns a fibre of 2**|Z| sets, Z being its growth set
R = IntervalSet(D, ((1, 1), (5, 5)))
print("growth set of", R.render(), "=", [I.digits() for I in growth_set(R)])
for S in fibre(R):
    print("   fibre member", S.render())
print("saturated:", saturate(R).render())
