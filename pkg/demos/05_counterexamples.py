"""
Panstochastic matrices with no panmagic decomposition
=====================================================

"""

from math import gcd

from panstochastic import counterexample, enumerate_panmagic, fixture, membership, non_decomp_certificate, perm_matrix
from panstochastic.gallery import counterexample_recipe

# the 7x7 matrix: LP membership against all 28 vertices and the combinatorial certificate agree
A = fixture("lemma41_7")
verts = [perm_matrix(p) for p in enumerate_panmagic(7)]
print("feasible:", bool(membership(A, verts)))
cert = non_decomp_certificate(A)
print("certificate entry:", cert.entry, "nodes:", cert.search_exhausted)

# the 25x25 matrix; the trace shows the forced placements leading to a clash
cert = non_decomp_certificate(fixture("thm12_25"))
for step in cert.trace:
    print(f"  {step.action:8} pi({step.column}) = {step.row} {step.detail}")

for n in range(2, 50):
    if n == 5:
        continue
    B = counterexample(n)
    found = non_decomp_certificate(B) if gcd(n, 6) == 1 else None
    print(f"{n:2d}  {counterexample_recipe(n):50}  {found.entry if found else '-'}")
