"""
Wreath and Kronecker products
=============================

"""

from panstochastic import check_panmagic, fixture, kronecker, wreath_matrices, wreath_perms
from panstochastic.perms import AffineSpec, affine_perm, is_panmagic_perm
from panstochastic.products import factor_through_support

A = fixture("magic60")
P = fixture("perm2x_5")

# Kronecker of two panstochastic matrices is panstochastic
K = kronecker(A, P)
print(K.n, check_panmagic(K).describe())

# the wreath product lets every block differ
blocks = [A, P, fixture("uniform5"), P, A]
print(check_panmagic(wreath_matrices(blocks, P)).describe())

# for permutations, the product is panmagic only if every factor is
two = affine_perm(AffineSpec(2, 0), 5)
three = affine_perm(AffineSpec(3, 1), 5)
pi = wreath_perms([two, three, two, two, three], two)
print("panmagic of degree 25:", bool(is_panmagic_perm(pi)))

from panstochastic import Permutation
bad = wreath_perms([Permutation.identity(5)] + [two] * 4, two)
print("with one identity block:", bool(is_panmagic_perm(bad)))

# and a permutation fitting inside A (x) P_rho splits back into block factors
support = fixture("perm2x_5") + A
print([lam.images for lam in factor_through_support(pi, support, two)])
