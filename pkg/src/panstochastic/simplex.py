"""Exact phase-1 simplex for ``{x >= 0 : E x = b}`` using Bland's rule."""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence


def find_feasible(E: Sequence[Sequence], b: Sequence) -> list[Fraction] | None:
    """A basic feasible solution of ``E x = b, x >= 0`` or None if there is none.

    One artificial variable per row; the sum of artificials is driven to its
    minimum with Bland's smallest-index rule, which cannot cycle.
    """
    m = len(E)
    k = len(E[0]) if m else 0
    rows: list[list[Fraction]] = []
    for i in range(m):
        coeffs = [Fraction(x) for x in E[i]]
        rhs = Fraction(b[i])
        if rhs < 0:
            coeffs = [-x for x in coeffs]
            rhs = -rhs
        art = [Fraction(0)] * m
        art[i] = Fraction(1)
        rows.append(coeffs + art + [rhs])
    width = k + m
    basis = list(range(k, k + m))
    # reduced costs of the phase-1 objective sum(artificials), last slot is -objective
    cost = [Fraction(0)] * (width + 1)
    for row in rows:
        for c in range(k):
            cost[c] -= row[c]
        cost[width] -= row[width]

    while True:
        enter = next((c for c in range(width) if cost[c] < 0), None)
        if enter is None:
            break
        leave = None
        best = None
        for r, row in enumerate(rows):
            a = row[enter]
            if a > 0:
                ratio = row[width] / a
                if best is None or ratio < best or (ratio == best and basis[r] < basis[leave]):
                    best, leave = ratio, r
        if leave is None:
            # phase-1 objective is bounded below by 0
            raise RuntimeError("unbounded phase-1 problem")
        _pivot(rows, cost, leave, enter)
        basis[leave] = enter

    if cost[width] != 0:
        return None
    x = [Fraction(0)] * k
    for r, var in enumerate(basis):
        if var < k:
            x[var] = rows[r][width]
    return x


def _pivot(rows: list[list[Fraction]], cost: list[Fraction], r: int, c: int) -> None:
    prow = rows[r]
    inv = 1 / prow[c]
    if inv != 1:
        prow = [x * inv for x in prow]
        rows[r] = prow
    nz = [idx for idx, x in enumerate(prow) if x]
    for k, row in enumerate(rows):
        if k != r and row[c]:
            f = row[c]
            for idx in nz:
                row[idx] -= f * prow[idx]
    if cost[c]:
        f = cost[c]
        for idx in nz:
            cost[idx] -= f * prow[idx]
