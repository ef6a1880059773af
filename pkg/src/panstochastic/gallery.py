"""Concrete panstochastic matrices and the counterexample family.

Named fixtures:

``uniform5``  every entry 1/5
``perm2x_5``  the permutation matrix of ``x -> 2x`` on 0..4
``magic60``   a pandiagonal magic square on 0..24, scaled by 1/60
``lemma41_7`` a 7x7 half-integer matrix no panmagic decomposition reaches
``thm12_25``  a 25x25 half-integer matrix with the same property
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

from .core import SquareMatrix, as_matrix, check_panmagic, check_panstochastic, perm_matrix
from .perms import AffineSpec, affine_perm
from .products import kronecker

HALF = Fraction(1, 2)

_MAGIC60 = (
    (1, 13, 20, 7, 19),
    (22, 9, 16, 3, 10),
    (18, 0, 12, 24, 6),
    (14, 21, 8, 15, 2),
    (5, 17, 4, 11, 23),
)

_LEMMA41_7 = (
    (0, 0, 0, 0, 1, 1, 0),
    (1, 0, 1, 0, 0, 0, 0),
    (1, 0, 0, 0, 0, 1, 0),
    (0, 0, 0, 2, 0, 0, 0),
    (0, 1, 0, 0, 0, 0, 1),
    (0, 0, 0, 0, 1, 0, 1),
    (0, 1, 1, 0, 0, 0, 0),
)

# columns holding a 1/2 in each row of the 25x25 matrix
_THM12_25_ROWS = (
    (1, 12), (3, 11), (0, 13), (2, 17), (14, 21),
    (2, 16), (5, 15), (3, 19), (15, 16), (4, 7),
    (17, 23), (5, 8), (6, 18), (6, 9), (18, 19),
    (7, 24), (20, 22), (0, 8), (13, 21), (9, 10),
    (20, 22), (10, 14), (12, 23), (1, 11), (4, 24),
)

# zero-magic correction supported on rows/columns 0..3
_CORRECTION = (
    (0, 1, -1, 0),
    (-1, 0, 0, 1),
    (1, 0, 0, -1),
    (0, -1, 1, 0),
)

FIXTURE_NAMES = ("uniform5", "perm2x_5", "magic60", "lemma41_7", "thm12_25")


def _thm12_25() -> SquareMatrix:
    rows = [[0] * 25 for _ in range(25)]
    for i, cols in enumerate(_THM12_25_ROWS):
        for j in cols:
            rows[i][j] = HALF
    return SquareMatrix(rows)


def fixture(name: str) -> SquareMatrix:
    if name == "uniform5":
        return uniform(5)
    if name == "perm2x_5":
        return perm_matrix(affine_perm(AffineSpec(2, 0), 5))
    if name == "magic60":
        return as_matrix(_MAGIC60, Fraction(1, 60))
    if name == "lemma41_7":
        return as_matrix(_LEMMA41_7, HALF)
    if name == "thm12_25":
        return _thm12_25()
    raise KeyError(f"unknown fixture {name!r}; choose from {', '.join(FIXTURE_NAMES)}")


def uniform(n: int) -> SquareMatrix:
    if n < 1:
        raise ValueError("n must be >= 1")
    return SquareMatrix.constant(n, Fraction(1, n))


def correction_matrix(n: int) -> SquareMatrix:
    """The ``n x n`` zero-magic matrix with the +-1/2 block in the top-left corner."""
    rows = [[0] * n for _ in range(n)]
    for i in range(4):
        for j in range(4):
            rows[i][j] = HALF * _CORRECTION[i][j]
    return SquareMatrix(rows)


def lemma41_matrix(n: int) -> SquareMatrix:
    """Panstochastic ``n x n`` matrix, ``gcd(n, 30) == 1``, with no panmagic decomposition.

    For ``n >= 11`` it is ``(P_{2x+1} + P_{2x-4}) / 2`` plus
    :func:`correction_matrix`, which moves the weight in the top-left 4x4
    block while keeping every line sum.
    """
    if n < 7 or gcd(n, 30) != 1:
        raise ValueError(f"need n >= 7 with gcd(n, 30) = 1, got n = {n}")
    if n == 7:
        return fixture("lemma41_7")
    base = HALF * (
        perm_matrix(affine_perm(AffineSpec(2, 1), n)) + perm_matrix(affine_perm(AffineSpec(2, -4 % n), n))
    )
    fix = correction_matrix(n)
    report = check_panmagic(fix)
    if not report or report.mu != 0:
        raise RuntimeError(f"correction block is not zero-magic for n = {n}")
    A = base + fix
    verdict = check_panstochastic(A)
    if not verdict:
        raise RuntimeError(f"constructed matrix for n = {n} is not panstochastic: {verdict.reason}")
    return A


def lift(A: SquareMatrix, n: int) -> SquareMatrix:
    """``A (x) P_{2x}`` with ``P_{2x}`` of order ``n``; needs ``gcd(n, 6) == 1``."""
    if n < 1 or gcd(n, 6) != 1:
        raise ValueError(f"need gcd(n, 6) = 1, got n = {n}")
    return kronecker(A, perm_matrix(affine_perm(AffineSpec(2, 0), n)))


def counterexample(n: int) -> SquareMatrix:
    """A panstochastic ``n x n`` matrix that is no convex combination of
    panmagic permutation matrices, for any ``n > 1`` other than 5."""
    if n <= 1 or n == 5:
        raise ValueError(f"no counterexample exists for n = {n}")
    if gcd(n, 6) != 1:
        return uniform(n)
    if gcd(n, 30) == 1:
        return lemma41_matrix(n)
    q = n // 5
    if q % 5 == 0:
        if n == 25:
            return fixture("thm12_25")
        return lift(fixture("thm12_25"), n // 25)
    return lift(lemma41_matrix(q), 5)


def counterexample_recipe(n: int) -> str:
    """Human-readable description of what :func:`counterexample` builds."""
    if n <= 1 or n == 5:
        raise ValueError(f"no counterexample exists for n = {n}")
    if gcd(n, 6) != 1:
        return f"uniform({n})"
    if gcd(n, 30) == 1:
        return f"lemma41_matrix({n})"
    q = n // 5
    if q % 5 == 0:
        return "thm12_25" if n == 25 else f"lift(thm12_25, {n // 25})"
    return f"lift(lemma41_matrix({q}), 5)"
