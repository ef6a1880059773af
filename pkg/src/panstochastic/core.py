"""Exact matrices, permutations and line-sum verdicts.

Scalars are :class:`fractions.Fraction` throughout.  Rows and columns are
indexed by ``0..n-1``; the ``k``-th up-diagonal holds the entries with
``i + j == k (mod n)`` and the ``k``-th down-diagonal those with
``i - j == k (mod n)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Sequence, Union

Scalar = Fraction
ScalarLike = Union[int, Fraction, str]

LINE_KINDS = ("row", "column", "up-diagonal", "down-diagonal")


class OrderMismatchError(ValueError):
    """Two operands that must share an order do not."""


def as_scalar(value: ScalarLike) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not scalars")
    if isinstance(value, (int, Rational)):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value)
    raise TypeError(f"cannot use {type(value).__name__} as an exact scalar; pass an int, Fraction or string")


class SquareMatrix:
    """Immutable dense ``n x n`` matrix of exact rationals.

    Indexing with ``A[i, j]`` reduces both indices mod ``n``.
    """

    __slots__ = ("_n", "_rows", "_hash")

    def __init__(self, rows: Iterable[Iterable[ScalarLike]]):
        data = tuple(tuple(as_scalar(x) for x in row) for row in rows)
        n = len(data)
        if n == 0:
            raise ValueError("a square matrix needs order n >= 1")
        for r, row in enumerate(data):
            if len(row) != n:
                raise ValueError(f"row {r} has {len(row)} entries, expected {n}")
        self._n = n
        self._rows = data
        self._hash = None

    @classmethod
    def zeros(cls, n: int) -> "SquareMatrix":
        return cls([[0] * n for _ in range(n)])

    @classmethod
    def identity(cls, n: int) -> "SquareMatrix":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def constant(cls, n: int, value: ScalarLike) -> "SquareMatrix":
        v = as_scalar(value)
        return cls([[v] * n for _ in range(n)])

    @classmethod
    def from_function(cls, n: int, f) -> "SquareMatrix":
        return cls([[f(i, j) for j in range(n)] for i in range(n)])

    @property
    def n(self) -> int:
        return self._n

    @property
    def rows(self) -> tuple[tuple[Fraction, ...], ...]:
        return self._rows

    def __getitem__(self, ij: tuple[int, int]) -> Fraction:
        i, j = ij
        return self._rows[i % self._n][j % self._n]

    def entries(self):
        """Yield ``(i, j, value)`` in row-major order."""
        for i, row in enumerate(self._rows):
            for j, v in enumerate(row):
                yield i, j, v

    def total(self) -> Fraction:
        return sum((v for row in self._rows for v in row), Fraction(0))

    def _check_order(self, other: "SquareMatrix") -> None:
        if other.n != self._n:
            raise OrderMismatchError(f"orders differ: {self._n} vs {other.n}")

    def __add__(self, other: "SquareMatrix") -> "SquareMatrix":
        if not isinstance(other, SquareMatrix):
            return NotImplemented
        self._check_order(other)
        return SquareMatrix(
            [a + b for a, b in zip(ra, rb)] for ra, rb in zip(self._rows, other._rows)
        )

    def __sub__(self, other: "SquareMatrix") -> "SquareMatrix":
        if not isinstance(other, SquareMatrix):
            return NotImplemented
        self._check_order(other)
        return SquareMatrix(
            [a - b for a, b in zip(ra, rb)] for ra, rb in zip(self._rows, other._rows)
        )

    def __neg__(self) -> "SquareMatrix":
        return SquareMatrix([-a for a in row] for row in self._rows)

    def scale(self, c: ScalarLike) -> "SquareMatrix":
        c = as_scalar(c)
        return SquareMatrix([c * a for a in row] for row in self._rows)

    def __rmul__(self, c):
        if isinstance(c, (int, Fraction)) and not isinstance(c, bool):
            return self.scale(c)
        return NotImplemented

    def __eq__(self, other) -> bool:
        if not isinstance(other, SquareMatrix):
            return NotImplemented
        return self._rows == other._rows

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self._rows)
        return self._hash

    def __repr__(self) -> str:
        body = "; ".join(" ".join(str(v) for v in row) for row in self._rows)
        return f"SquareMatrix(n={self._n}, [{body}])"


def linear_combination(terms: Iterable[tuple[ScalarLike, SquareMatrix]], n: int) -> SquareMatrix:
    """Return ``sum(c * M)`` over ``terms``; ``n`` fixes the order of an empty sum."""
    acc = [[Fraction(0)] * n for _ in range(n)]
    for c, M in terms:
        if M.n != n:
            raise OrderMismatchError(f"term of order {M.n} in a combination of order {n}")
        c = as_scalar(c)
        if c == 0:
            continue
        for i, row in enumerate(M.rows):
            acc_row = acc[i]
            for j, v in enumerate(row):
                if v:
                    acc_row[j] += c * v
    return SquareMatrix(acc)


@dataclass(frozen=True)
class Permutation:
    """A bijection of ``0..n-1`` stored as its image sequence."""

    images: tuple[int, ...]

    def __init__(self, images: Iterable[int]):
        imgs = tuple(int(x) for x in images)
        n = len(imgs)
        if n == 0:
            raise ValueError("a permutation needs degree n >= 1")
        if sorted(imgs) != list(range(n)):
            raise ValueError(f"images {imgs} are not a bijection of 0..{n - 1}")
        object.__setattr__(self, "images", imgs)

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(range(n))

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, j: int) -> int:
        return self.images[j % len(self.images)]

    def __len__(self) -> int:
        return len(self.images)

    def __iter__(self):
        return iter(self.images)

    def __lt__(self, other: "Permutation") -> bool:
        return self.images < other.images

    def __repr__(self) -> str:
        return f"Permutation({list(self.images)})"


@dataclass(frozen=True)
class Panmagic:
    mu: Fraction

    def __bool__(self) -> bool:
        return True

    def describe(self) -> str:
        return f"panmagic, mu = {self.mu}"


@dataclass(frozen=True)
class Violation:
    kind: str
    index: int
    sum: Fraction
    expected: Fraction

    def __bool__(self) -> bool:
        return False

    def describe(self) -> str:
        return f"not panmagic: {self.kind} {self.index} sums to {self.sum}, expected {self.expected}"


MagicReport = Union[Panmagic, Violation]


@dataclass(frozen=True)
class StochasticVerdict:
    """Outcome of :func:`check_panstochastic`; truthy iff panstochastic."""

    ok: bool
    reason: str

    def __bool__(self) -> bool:
        return self.ok


def line_sums(A: SquareMatrix) -> tuple[list[Fraction], list[Fraction], list[Fraction], list[Fraction]]:
    """Row, column, up-diagonal and down-diagonal sums, each of length ``n``."""
    n = A.n
    zero = Fraction(0)
    rows = [zero] * n
    cols = [zero] * n
    up = [zero] * n
    down = [zero] * n
    for i, row in enumerate(A.rows):
        for j, v in enumerate(row):
            if not v:
                continue
            rows[i] += v
            cols[j] += v
            up[(i + j) % n] += v
            down[(i - j) % n] += v
    return rows, cols, up, down


def check_panmagic(A: SquareMatrix) -> MagicReport:
    """Compare all ``4n`` line sums against the sum of row 0.

    Lines are scanned rows, columns, up-diagonals, down-diagonals, each by
    ascending index, and the first mismatch is reported.
    """
    sums = line_sums(A)
    expected = sums[0][0]
    for kind, seq in zip(LINE_KINDS, sums):
        for k, s in enumerate(seq):
            if s != expected:
                return Violation(kind, k, s, expected)
    return Panmagic(expected)


def check_panstochastic(A: SquareMatrix) -> StochasticVerdict:
    for i, j, v in A.entries():
        if v < 0:
            return StochasticVerdict(False, f"negative entry {v} at ({i}, {j})")
    report = check_panmagic(A)
    if isinstance(report, Violation):
        return StochasticVerdict(False, report.describe())
    if report.mu != 1:
        return StochasticVerdict(False, f"magic number is {report.mu}, expected 1")
    return StochasticVerdict(True, "panstochastic, mu = 1")


def perm_matrix(pi: Permutation) -> SquareMatrix:
    """``P[i, j] = 1`` iff ``i == pi(j)``."""
    n = pi.n
    rows = [[0] * n for _ in range(n)]
    for j, i in enumerate(pi.images):
        rows[i][j] = 1
    return SquareMatrix(rows)


def support(A: SquareMatrix) -> frozenset[tuple[int, int]]:
    return frozenset((i, j) for i, j, v in A.entries() if v != 0)


def support_subset(P: SquareMatrix, A: SquareMatrix) -> bool:
    if P.n != A.n:
        raise OrderMismatchError(f"orders differ: {P.n} vs {A.n}")
    return all(A[i, j] != 0 for i, j, v in P.entries() if v != 0)


def column_supports(A: SquareMatrix) -> list[list[int]]:
    """For each column ``j``, the ascending rows ``i`` with ``A[i, j] != 0``."""
    n = A.n
    return [[i for i in range(n) if A.rows[i][j] != 0] for j in range(n)]


def as_matrix(rows: Sequence[Sequence[ScalarLike]], scale: ScalarLike = 1) -> SquareMatrix:
    """Build a matrix from integer-ish rows times a common factor."""
    c = as_scalar(scale)
    return SquareMatrix([[c * as_scalar(x) for x in row] for row in rows])
