"""Wreath and Kronecker products of matrices and permutations.

Block index packing is shared by every function here: inner index ``j`` in
``0..m-1`` and outer index ``s`` in ``0..n-1`` combine to ``j*n + s``.
"""

from __future__ import annotations

from typing import Sequence

from .core import OrderMismatchError, Permutation, SquareMatrix


class SupportError(ValueError):
    """A permutation does not fit the block support it was asked to factor through."""

    def __init__(self, message: str, index: int):
        self.index = index
        super().__init__(message)


def pack(j: int, s: int, n: int) -> int:
    return j * n + s


def unpack(x: int, n: int) -> tuple[int, int]:
    return divmod(x, n)


def wreath_matrices(blocks: Sequence[SquareMatrix], B: SquareMatrix) -> SquareMatrix:
    """Entry ``(i*n + r, j*n + s)`` is ``blocks[s][i, j] * B[r, s]``."""
    n = B.n
    if len(blocks) != n:
        raise ValueError(f"need {n} blocks for an outer matrix of order {n}, got {len(blocks)}")
    m = blocks[0].n
    for s, A in enumerate(blocks):
        if A.n != m:
            raise OrderMismatchError(f"block {s} has order {A.n}, block 0 has order {m}")
    N = m * n
    rows = [[0] * N for _ in range(N)]
    for s, A in enumerate(blocks):
        for r in range(n):
            b = B.rows[r][s]
            if not b:
                continue
            for i in range(m):
                out = rows[pack(i, r, n)]
                Ai = A.rows[i]
                for j in range(m):
                    out[pack(j, s, n)] = Ai[j] * b
    return SquareMatrix(rows)


def kronecker(A: SquareMatrix, B: SquareMatrix) -> SquareMatrix:
    return wreath_matrices([A] * B.n, B)


def wreath_perms(lambdas: Sequence[Permutation], rho: Permutation) -> Permutation:
    """``pi(j*n + s) = lambdas[s](j)*n + rho(s)``."""
    n = rho.n
    if len(lambdas) != n:
        raise ValueError(f"need {n} inner permutations, got {len(lambdas)}")
    m = lambdas[0].n
    for s, lam in enumerate(lambdas):
        if lam.n != m:
            raise OrderMismatchError(f"inner permutation {s} has degree {lam.n}, expected {m}")
    images = [0] * (m * n)
    for s, lam in enumerate(lambdas):
        rs = rho(s)
        for j in range(m):
            images[pack(j, s, n)] = pack(lam(j), rs, n)
    return Permutation(images)


def kronecker_perms(lam: Permutation, rho: Permutation) -> Permutation:
    return wreath_perms([lam] * rho.n, rho)


def factor_through_support(pi: Permutation, A: SquareMatrix, rho: Permutation) -> list[Permutation]:
    """Recover the inner permutations of ``pi`` relative to ``A (x) P_rho``.

    Requires the support of ``P_pi`` to lie inside the support of
    ``kronecker(A, perm_matrix(rho))``; the whole precondition is checked
    before anything is returned, and the first offending column of ``pi``
    is reported otherwise.
    """
    m, n = A.n, rho.n
    if pi.n != m * n:
        raise OrderMismatchError(f"pi has degree {pi.n}, expected {m}*{n}")
    maps = [[0] * m for _ in range(n)]
    for x, y in enumerate(pi.images):
        j, s = unpack(x, n)
        i, r = unpack(y, n)
        if r != rho(s):
            raise SupportError(f"pi({x}) = {y} lies outside the block of rho({s}) = {rho(s)}", x)
        if A.rows[i][j] == 0:
            raise SupportError(f"pi({x}) = {y} hits a zero of A at ({i}, {j})", x)
        maps[s][j] = i
    # injectivity of pi forces each inner map to be a bijection
    return [Permutation(mp) for mp in maps]
