"""Panmagic permutations: recognition, affine families and enumeration.

A permutation ``pi`` of ``0..n-1`` is panmagic exactly when both
``j -> pi(j) - j`` and ``j -> pi(j) + j`` (mod ``n``) are bijections, i.e.
when ``pi`` places ``n`` non-attacking queens on an ``n x n`` torus.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from math import gcd
from typing import Optional

from .core import Permutation

#: enumeration refuses larger orders unless ``allow_large`` is passed
DEFAULT_MAX_ORDER = 17


@dataclass(frozen=True)
class PanmagicWitness:
    pi: Permutation
    lam: Permutation  # j -> pi(j) - j
    rho: Permutation  # j -> pi(j) + j


@dataclass(frozen=True, order=True)
class AffineSpec:
    """The map ``j -> a*j + b (mod n)``; requires ``gcd(a, n) == 1``."""

    a: int
    b: int

    def __str__(self) -> str:
        return f"{self.a}x+{self.b}"


def is_panmagic_perm(pi: Permutation) -> Optional[PanmagicWitness]:
    n = pi.n
    diff = [(x - j) % n for j, x in enumerate(pi.images)]
    summ = [(x + j) % n for j, x in enumerate(pi.images)]
    if len(set(diff)) != n or len(set(summ)) != n:
        return None
    return PanmagicWitness(pi, Permutation(diff), Permutation(summ))


def _require_unit(a: int, n: int) -> None:
    if gcd(a, n) != 1:
        raise ValueError(f"gcd({a}, {n}) = {gcd(a, n)}: j -> {a}j + b is not a bijection mod {n}")


def affine_perm(spec: AffineSpec, n: int) -> Permutation:
    _require_unit(spec.a, n)
    return Permutation((spec.a * j + spec.b) % n for j in range(n))


def is_affine_panmagic(spec: AffineSpec, n: int) -> bool:
    _require_unit(spec.a, n)
    return gcd(spec.a - 1, n) == 1 and gcd(spec.a + 1, n) == 1


def panmagic_multipliers(n: int) -> list[int]:
    """Slopes ``a`` in ``0..n-1`` with ``a - 1``, ``a``, ``a + 1`` all units mod ``n``."""
    return [a for a in range(n) if gcd(a, n) == gcd(a - 1, n) == gcd(a + 1, n) == 1]


def enumerate_affine_panmagic(n: int) -> list[AffineSpec]:
    if n < 1:
        raise ValueError("n must be >= 1")
    return [AffineSpec(a, b) for a in panmagic_multipliers(n) for b in range(n)]


def is_affine(pi: Permutation) -> Optional[AffineSpec]:
    n = pi.n
    b = pi(0)
    a = (pi(1) - b) % n if n > 1 else 0
    if all(x == (a * j + b) % n for j, x in enumerate(pi.images)):
        return AffineSpec(a, b)
    return None


def _branch(n: int, first: int) -> list[tuple[int, ...]]:
    """All panmagic image sequences with ``pi(0) == first``, in lex order."""
    full = (1 << n) - 1
    out: list[tuple[int, ...]] = []
    images = [first] + [0] * (n - 1)

    def rec(j: int, vals: int, diffs: int, sums: int) -> None:
        if j == n:
            out.append(tuple(images))
            return
        free = full & ~vals
        while free:
            low = free & -free
            x = low.bit_length() - 1
            free ^= low
            d = 1 << ((x - j) % n)
            s = 1 << ((x + j) % n)
            if diffs & d or sums & s:
                continue
            images[j] = x
            rec(j + 1, vals | low, diffs | d, sums | s)

    bit = 1 << first
    rec(1, bit, bit, bit)
    return out


def enumerate_panmagic(n: int, *, allow_large: bool = False, workers: int | None = None) -> list[Permutation]:
    """All panmagic permutations of degree ``n`` sorted by image sequence.

    Backtracks column by column keeping three used-sets: values of ``pi``,
    of ``pi(j) - j`` and of ``pi(j) + j``.  With ``workers > 1`` the ``n``
    choices of ``pi(0)`` run in separate processes; the merged result is
    identical to the sequential one.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if n > DEFAULT_MAX_ORDER and not allow_large:
        raise ValueError(f"n = {n} exceeds the default cap {DEFAULT_MAX_ORDER}; pass allow_large=True")
    if workers and workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            branches = list(pool.map(_branch, [n] * n, range(n)))
    else:
        branches = [_branch(n, b) for b in range(n)]
    return [Permutation(imgs) for branch in branches for imgs in branch]


def nonaffine_piecewise(n: int, p: int) -> Permutation:
    """``x -> 2x`` on multiples of ``p`` and ``x -> 3x`` elsewhere (mod ``n``).

    Needs ``gcd(n, 6) == 1``, ``n`` composite and ``p`` a prime divisor of
    ``n``.  The result is checked to be panmagic and non-affine before it is
    returned.
    """
    if gcd(n, 6) != 1:
        raise ValueError(f"gcd({n}, 6) != 1")
    if _is_prime(n):
        raise ValueError(f"{n} is prime; the construction needs composite n")
    if not _is_prime(p) or n % p:
        raise ValueError(f"{p} is not a prime divisor of {n}")
    pi = Permutation((2 * x if x % p == 0 else 3 * x) % n for x in range(n))
    if is_panmagic_perm(pi) is None:
        raise RuntimeError(f"piecewise map for n={n}, p={p} is not panmagic")
    if is_affine(pi) is not None:
        raise RuntimeError(f"piecewise map for n={n}, p={p} is affine")
    return pi


def _is_prime(k: int) -> bool:
    if k < 2:
        return False
    f = 2
    while f * f <= k:
        if k % f == 0:
            return False
        f += 1
    return True
