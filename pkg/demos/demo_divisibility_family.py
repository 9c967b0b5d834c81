"""
A family with divisibility conditions
=====================================

For each d the counted partitions satisfy f_i + f_{i+1} < dk + e and
f_1 < da + f, and every even part appears a multiple of d times.  We sweep
the valid parameters and then try pair bounds the identities do not cover.
"""

from qgordon import GordonParams, Variant, valid_params
from qgordon.verify import check_theorem, constraint_set, negative_control

N = 40

grid = valid_params(3, 3)
reports = [check_theorem(p, v, N) for p in grid for v in Variant]
print(f"{len(reports)} comparisons to q^{N}, all exact:", all(r.ok for r in reports))

# one instance in detail
p = GordonParams(2, 3, 2, 3, 2)
c = constraint_set(p, Variant.EVEN)
print(p, "-> pair bound", c.pair_bound, "initial bound", c.initial_bound, "modulus", p.modulus)

###############################################################################
# Outside the valid range of e the product no longer counts the partitions.
# The first disagreement is reported as (exponent, counted, product).

for d, e in ((3, 1), (3, 2), (4, 3)):
    r = negative_control(d, d, e, 1, 1, 60)
    m = r.first_mismatch
    print(f"d={d} e={e}: {r.status} at q^{m.q_exp}: {m.lhs} != {m.rhs}")

print("d=3 e=3:", negative_control(3, 3, 3, 1, 1, 60).status)
