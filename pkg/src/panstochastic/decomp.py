"""Convex decompositions into panmagic permutation matrices.

* :func:`decompose5` writes any panstochastic 5x5 matrix as a convex
  combination of the ten matrices ``P_{2x+c}``, ``P_{3x+d}``.
* :func:`membership` decides convex-hull membership exactly for an explicit
  vertex list.
* :func:`non_decomp_certificate` looks for a positive entry that no
  panmagic permutation inside the support can cover, which rules out any
  convex decomposition.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence, Union

from . import linalg
from .core import (
    OrderMismatchError,
    Permutation,
    SquareMatrix,
    Violation,
    check_panmagic,
    check_panstochastic,
    column_supports,
    linear_combination,
    perm_matrix,
)
from .perms import AffineSpec, affine_perm


@dataclass(frozen=True)
class Eq1Coordinates:
    """``A == sum(alpha[c] * P_{2x+c}) + sum(beta[d] * P_{3x+d})``."""

    alpha: tuple[Fraction, ...]
    beta: tuple[Fraction, ...]

    def shifted(self, t) -> "Eq1Coordinates":
        """Move along the kernel: both families sum to the all-ones matrix."""
        t = Fraction(t)
        return Eq1Coordinates(tuple(a - t for a in self.alpha), tuple(b + t for b in self.beta))

    def terms(self) -> list[tuple[Permutation, Fraction]]:
        return [(pi_2x(c), a) for c, a in enumerate(self.alpha)] + [
            (pi_3x(d), b) for d, b in enumerate(self.beta)
        ]

    def matrix(self) -> SquareMatrix:
        return linear_combination(((c, perm_matrix(p)) for p, c in self.terms()), 5)


@dataclass(frozen=True)
class DecompositionResult:
    terms: tuple[tuple[Permutation, Fraction], ...]

    def matrix(self) -> SquareMatrix:
        n = self.terms[0][0].n
        return linear_combination(((c, perm_matrix(p)) for p, c in self.terms), n)

    def total(self) -> Fraction:
        return sum((c for _, c in self.terms), Fraction(0))


@dataclass(frozen=True)
class Feasible:
    coefficients: tuple[Fraction, ...]

    def __bool__(self) -> bool:
        return True


@dataclass(frozen=True)
class Infeasible:
    def __bool__(self) -> bool:
        return False


MembershipResult = Union[Feasible, Infeasible]


@dataclass(frozen=True)
class SearchStep:
    """One event of the restricted search.

    ``action`` is ``"root"``, ``"force"`` (only one row/column left by
    support), ``"branch"``, ``"conflict"`` (a forced placement repeats a
    diagonal), or ``"dead"`` (a row or column has no admissible choice).
    """

    action: str
    column: int
    row: int
    detail: str = ""


@dataclass(frozen=True)
class NonDecompCertificate:
    entry: tuple[int, int]
    search_exhausted: int
    trace: tuple[SearchStep, ...] = field(default=(), repr=False, compare=False)

    def to_json_obj(self) -> dict:
        return {"entry": list(self.entry), "nodes": self.search_exhausted}


def pi_2x(c: int) -> Permutation:
    return affine_perm(AffineSpec(2, c % 5), 5)


def pi_3x(d: int) -> Permutation:
    return affine_perm(AffineSpec(3, d % 5), 5)


def panmagic_vertices5() -> list[Permutation]:
    """``pi_{2x+c}`` for c = 0..4 followed by ``pi_{3x+d}`` for d = 0..4."""
    return [pi_2x(c) for c in range(5)] + [pi_3x(d) for d in range(5)]


def solve_eq1(A: SquareMatrix) -> Eq1Coordinates:
    """Coordinates of a panmagic 5x5 matrix with the pivot ``beta[0] == 0``.

    Entry ``(i, j)`` equals ``alpha[(i - 2j) % 5] + beta[(i - 3j) % 5]``, so
    the entries at ``(3c, c)`` give ``alpha`` directly and those at
    ``(-2d, -d)`` give ``beta``.
    """
    if A.n != 5:
        raise OrderMismatchError(f"expected a 5x5 matrix, got order {A.n}")
    report = check_panmagic(A)
    if isinstance(report, Violation):
        raise ValueError(f"matrix is {report.describe()}")
    alpha = tuple(A[3 * c, c] for c in range(5))
    beta = tuple(A[-2 * d, -d] - alpha[0] for d in range(5))
    coords = Eq1Coordinates(alpha, beta)
    for i in range(5):
        for j in range(5):
            if alpha[(i - 2 * j) % 5] + beta[(i - 3 * j) % 5] != A[i, j]:
                raise RuntimeError(f"nonzero residual at ({i}, {j})")
    return coords


def decompose5(A: SquareMatrix) -> DecompositionResult:
    """Convex combination of panmagic permutation matrices equal to ``A``.

    The raw coordinates are shifted along the kernel by ``t`` with
    ``t = -min(beta)`` if that minimum is negative, else ``t = min(alpha)``
    if that one is negative, else ``t = 0``.  Every pair ``(c, d)`` occurs as
    exactly one entry, so ``min(alpha) + min(beta) >= 0`` and both families
    end up nonnegative.
    """
    verdict = check_panstochastic(A)
    if not verdict:
        raise ValueError(f"matrix is not panstochastic: {verdict.reason}")
    coords = solve_eq1(A)
    min_a, min_b = min(coords.alpha), min(coords.beta)
    if min_b < 0:
        t = -min_b
    elif min_a < 0:
        t = min_a
    else:
        t = Fraction(0)
    coords = coords.shifted(t)
    terms = tuple((p, c) for p, c in coords.terms() if c != 0)
    if any(c < 0 for _, c in terms):
        raise RuntimeError("negative coefficient after normalization")
    return DecompositionResult(terms)


def membership(A: SquareMatrix, vertices: Sequence[SquareMatrix]) -> MembershipResult:
    """Exact test of whether ``A`` is a convex combination of ``vertices``."""
    from .simplex import find_feasible

    if not vertices:
        raise ValueError("vertex list is empty")
    n = A.n
    for k, V in enumerate(vertices):
        if V.n != n:
            raise OrderMismatchError(f"vertex {k} has order {V.n}, expected {n}")
    E = [[V.rows[i][j] for V in vertices] for i in range(n) for j in range(n)]
    b = [A.rows[i][j] for i in range(n) for j in range(n)]
    E.append([Fraction(1)] * len(vertices))
    b.append(Fraction(1))
    x = find_feasible(E, b)
    if x is None:
        return Infeasible()
    return Feasible(tuple(x))


class _Search:
    """Backtracking for a panmagic permutation inside a fixed support."""

    def __init__(self, A: SquareMatrix):
        self.n = A.n
        self.colsup = column_supports(A)
        self.rowsup = [[j for j in range(self.n) if A.rows[i][j] != 0] for i in range(self.n)]
        self.nodes = 0
        self.trace: list[SearchStep] = []

    def run(self, i0: int, j0: int) -> Optional[list[int]]:
        n = self.n
        assign = [-1] * n
        used, diffs, sums = set(), set(), set()
        self._place(assign, used, diffs, sums, j0, i0)
        self.trace.append(SearchStep("root", j0, i0))
        return self._solve(assign, used, diffs, sums, (j0, i0))

    def _place(self, assign, used, diffs, sums, j, i) -> None:
        n = self.n
        assign[j] = i
        used.add(i)
        diffs.add((i - j) % n)
        sums.add((i + j) % n)
        self.nodes += 1

    def _clash(self, diffs, sums, j, i) -> str:
        n = self.n
        if (i - j) % n in diffs:
            return f"difference {(i - j) % n} repeated"
        if (i + j) % n in sums:
            return f"sum {(i + j) % n} repeated"
        return ""

    def _free_rows(self, assign, used, j):
        return [i for i in self.colsup[j] if i not in used]

    def _free_cols(self, assign, used, i):
        return [j for j in self.rowsup[i] if assign[j] < 0]

    def _consequences(self, assign, used, j, i):
        """Columns that lost row ``i`` and rows that lost column ``j``."""
        cols = [("col", c) for c in self.rowsup[i] if assign[c] < 0]
        rows = [("row", r) for r in self.colsup[j] if r not in used]
        return cols + rows

    def _solve(self, assign, used, diffs, sums, last=None) -> Optional[list[int]]:
        """Propagate forced placements, then branch on the tightest column.

        A placement is forced when a column has one free supported row or a
        row has one free supported column.  Forced moves are processed
        first-in first-out from the placement that triggered them, and a
        forced move that repeats a diagonal ends the branch.
        """
        n = self.n
        queue = deque(self._consequences(assign, used, *last) if last else ())
        while True:
            while queue:
                kind, k = queue.popleft()
                if kind == "col":
                    if assign[k] >= 0:
                        continue
                    rows = self._free_rows(assign, used, k)
                    if not rows:
                        self.trace.append(SearchStep("dead", k, -1, "column has no free row"))
                        return None
                    if len(rows) > 1:
                        continue
                    j, i = k, rows[0]
                else:
                    if k in used:
                        continue
                    cols = self._free_cols(assign, used, k)
                    if not cols:
                        self.trace.append(SearchStep("dead", -1, k, "row has no free column"))
                        return None
                    if len(cols) > 1:
                        continue
                    j, i = cols[0], k
                clash = self._clash(diffs, sums, j, i)
                if clash:
                    self.trace.append(SearchStep("conflict", j, i, clash))
                    return None
                self._place(assign, used, diffs, sums, j, i)
                self.trace.append(SearchStep("force", j, i))
                queue.extend(self._consequences(assign, used, j, i))
            # sweep for singles not triggered by a placement
            queue.extend(("col", j) for j in range(n) if assign[j] < 0 and len(self._free_rows(assign, used, j)) <= 1)
            queue.extend(("row", i) for i in range(n) if i not in used and len(self._free_cols(assign, used, i)) <= 1)
            if not queue:
                break

        open_cols = [j for j in range(n) if assign[j] < 0]
        if not open_cols:
            return assign
        best_j, best_rows = None, None
        for j in open_cols:
            rows = [i for i in self.colsup[j] if i not in used and not self._clash(diffs, sums, j, i)]
            if best_rows is None or len(rows) < len(best_rows):
                best_j, best_rows = j, rows
            if not rows:
                break
        if not best_rows:
            self.trace.append(SearchStep("dead", best_j, -1, "every free row repeats a diagonal"))
            return None
        for i in best_rows:
            a2, u2, d2, s2 = list(assign), set(used), set(diffs), set(sums)
            self._place(a2, u2, d2, s2, best_j, i)
            self.trace.append(SearchStep("branch", best_j, i))
            found = self._solve(a2, u2, d2, s2, (best_j, i))
            if found is not None:
                return found
        return None


def covering_permutation(A: SquareMatrix, i: int, j: int) -> tuple[Optional[Permutation], "_Search"]:
    """Search for a panmagic ``pi`` with ``pi(j) == i`` and support inside ``supp A``."""
    search = _Search(A)
    found = search.run(i, j)
    return (Permutation(found) if found is not None else None), search


def non_decomp_certificate(A: SquareMatrix) -> Optional[NonDecompCertificate]:
    """First positive entry no support-compatible panmagic permutation covers.

    Positive entries are scanned column by column (rows ascending within a
    column).  ``None`` only means every entry is coverable on its own; it
    does not prove that ``A`` decomposes.
    """
    verdict = check_panstochastic(A)
    if not verdict:
        raise ValueError(f"matrix is not panstochastic: {verdict.reason}")
    cols = column_supports(A)
    for j in range(A.n):
        for i in cols[j]:
            pi, search = covering_permutation(A, i, j)
            if pi is None:
                return NonDecompCertificate((i, j), search.nodes, tuple(search.trace))
    return None


def panmagic_constraint_rows(n: int) -> list[list[int]]:
    """Rows of the system ``line_sum - row_0_sum == 0`` on ``n*n`` unknowns.

    One equation per line (4n in total); the row-0 equation is identically
    zero and kept for uniformity.
    """
    lines = []
    for k in range(n):
        lines.append({(k, j) for j in range(n)})
    for k in range(n):
        lines.append({(i, k) for i in range(n)})
    for k in range(n):
        lines.append({(i, (k - i) % n) for i in range(n)})
    for k in range(n):
        lines.append({(i, (i - k) % n) for i in range(n)})
    row0 = lines[0]
    out = []
    for line in lines:
        eq = [0] * (n * n)
        for i, j in line:
            eq[i * n + j] += 1
        for i, j in row0:
            eq[i * n + j] -= 1
        out.append(eq)
    return out


def panmagic_basis(n: int) -> list[SquareMatrix]:
    """A basis of the rational panmagic ``n x n`` matrices."""
    vecs = linalg.nullspace(panmagic_constraint_rows(n), n * n)
    return [SquareMatrix([v[i * n:(i + 1) * n] for i in range(n)]) for v in vecs]


def span_rank_check() -> tuple[int, int]:
    """``(rank of the ten 5x5 panmagic permutation matrices, dim of panmagic 5x5 space)``."""
    vectors = [[x for row in perm_matrix(p).rows for x in row] for p in panmagic_vertices5()]
    r = linalg.rank(vectors)
    dim = 25 - linalg.rank(panmagic_constraint_rows(5))
    return r, dim
