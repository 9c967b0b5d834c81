"""
Tracking the number of parts
============================

Keeping x for the number of parts turns the counts into a two-variable
series.  The closed-form sums reproduce it, satisfy a pair of functional
equations, and fix which way one bracket in the terms has to be read.
"""

import numpy as np

from qgordon import GordonParams, Variant, dp_genfun, series_C
from qgordon.verify import bracket_outcomes, check_functional_eqs, constraint_set

M = N = 12
p = GordonParams(3, 3, 3, 1, 1)

counted = dp_genfun(constraint_set(p, Variant.EVEN), N, M)
summed = series_C(p, M, N)
print("counts and sums agree:", counted.first_mismatch(summed, M, N) is None)

# rows are numbers of parts, columns are weights
table = np.array([[counted[(m, n)] for n in range(N + 1)] for m in range(6)], dtype=object)
print(table)

###############################################################################
# The functional equations and the zero boundary, term by term.

print(check_functional_eqs(p, M, N, 3).status)

###############################################################################
# Only one reading of the bracket survives.

for candidate, rec in bracket_outcomes(p, M, N, 2).items():
    print(candidate, "survives" if rec.mismatch is None else f"breaks: {rec.notes[0]}")
