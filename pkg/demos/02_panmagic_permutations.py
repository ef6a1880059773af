"""
Panmagic permutations
=====================

A permutation is panmagic when both j -> pi(j) - j and j -> pi(j) + j are
bijections mod n: a solution of the toroidal n-queens problem.
"""

from math import gcd

from panstochastic import enumerate_affine_panmagic, enumerate_panmagic, is_affine, nonaffine_piecewise
from panstochastic.perms import is_panmagic_perm

for n in range(1, 14):
    count = len(enumerate_panmagic(n))
    print(f"n = {n:2d}  gcd(n, 6) = {gcd(n, 6)}  panmagic = {count:5d}  affine = {len(enumerate_affine_panmagic(n))}")

# from 13 on there are non-affine solutions
extra = [p for p in enumerate_panmagic(13) if is_affine(p) is None]
print(len(extra), "non-affine permutations of degree 13, e.g.", extra[0].images)

# a piecewise construction gives non-affine ones whenever p^2 divides n
pi = nonaffine_piecewise(25, 5)
print(pi.images, bool(is_panmagic_perm(pi)), is_affine(pi))
