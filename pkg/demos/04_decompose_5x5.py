"""
Decomposing a 5x5 panstochastic matrix
======================================

Every 5x5 panstochastic matrix is a convex combination of the ten
permutation matrices of x -> 2x + c and x -> 3x + d.
"""

from panstochastic import decompose5, fixture, solve_eq1
from panstochastic.decomp import span_rank_check

A = fixture("magic60")

# coordinates before the kernel shift; some may be negative
c = solve_eq1(A)
print("alpha:", [str(x) for x in c.alpha])
print("beta: ", [str(x) for x in c.beta])

res = decompose5(A)
for pi, coeff in res.terms:
    print(f"{str(coeff):>6}  {pi.images}")
print("sum of coefficients:", res.total(), " exact:", res.matrix() == A)

# the ten vertices span all panmagic 5x5 matrices
print("rank, dimension:", span_rank_check())
