"""
Line sums, panmagic and panstochastic matrices
==============================================

"""

from panstochastic import check_panmagic, check_panstochastic, fixture, line_sums
from panstochastic.core import LINE_KINDS
from panstochastic.formats import format_matrix_text

# the 1/60-scaled 5x5 magic square; every row, column and broken diagonal sums to 1
A = fixture("magic60")
print(format_matrix_text(A))
print(check_panmagic(A).describe())

for kind, sums in zip(LINE_KINDS, line_sums(A)):
    print(f"{kind:>14}: {' '.join(str(s) for s in sums)}")

# scaling keeps the matrix panmagic but moves mu away from 1
print(check_panstochastic(A.scale(2)).reason)

# the identity fails on a broken diagonal
from panstochastic import SquareMatrix
print(check_panmagic(SquareMatrix.identity(5)).describe())
