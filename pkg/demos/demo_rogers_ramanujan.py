"""
Counting partitions against a product
=====================================

Partitions of n with no repeated and no consecutive parts are as many as
partitions of n into parts congruent to 1 or 4 mod 5.  Both sides are
computed exactly here and compared coefficient by coefficient.
"""

from qgordon import ConstraintSet, GordonParams, Variant, dp_counts, product_rhs, residue_genfun
from qgordon.partitions import iter_partitions

N = 30

# f_i + f_{i+1} < 2 and f_1 < 2
conditions = ConstraintSet(2, 2)
counted = dp_counts(conditions, N)
print("counted:", counted.coefficient_list(0, 12))

# the same numbers from parts in the classes 1 and 4 mod 5
residues = residue_genfun([1, 4], 5, N)
print("residues:", residues.coefficient_list(0, 12))

# and from the general family at d = 1, k = 1, e = 1, a = 1, f = 1
general = product_rhs(GordonParams(1, 1, 1, 1, 1), Variant.EVEN, N)
print("all three agree to q^%d:" % N, counted == residues == general)

# the six-part check by hand
admitted = [p.as_parts() for p in iter_partitions(6) if conditions.admits(p)]
print("partitions of 6 that qualify:", admitted)
