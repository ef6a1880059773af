import itertools
from math import gcd

import pytest
from hypothesis import given
from hypothesis import strategies as st

from panstochastic.core import Permutation, check_panmagic, perm_matrix
from panstochastic.perms import (
    AffineSpec,
    affine_perm,
    enumerate_affine_panmagic,
    enumerate_panmagic,
    is_affine,
    is_affine_panmagic,
    is_panmagic_perm,
    nonaffine_piecewise,
)


def brute_force_panmagic(n):
    """Every permutation of degree n whose matrix passes the line-sum check."""
    return [Permutation(p) for p in itertools.permutations(range(n)) if check_panmagic(perm_matrix(Permutation(p)))]


class TestIsPanmagicPerm:
    def test_pi_2x_on_5(self):
        w = is_panmagic_perm(affine_perm(AffineSpec(2, 0), 5))
        assert w.lam == Permutation.identity(5)
        assert w.rho == affine_perm(AffineSpec(3, 0), 5)

    def test_identity_3(self):
        assert is_panmagic_perm(Permutation.identity(3)) is None

    def test_nothing_on_6(self):
        assert all(is_panmagic_perm(Permutation(p)) is None for p in itertools.permutations(range(6)))

    @given(st.integers(1, 13).flatmap(lambda n: st.tuples(st.permutations(range(n)), st.integers(0, n), st.integers(0, n))))
    def test_translation_invariance(self, data):
        images, t, s = data
        n = len(images)
        pi = Permutation(images)
        moved = Permutation((images[(j + t) % n] + s) % n for j in range(n))
        assert (is_panmagic_perm(pi) is None) == (is_panmagic_perm(moved) is None)


class TestAffine:
    def test_identity(self):
        assert affine_perm(AffineSpec(1, 0), 5) == Permutation.identity(5)

    def test_2x(self):
        assert affine_perm(AffineSpec(2, 0), 5).images == (0, 2, 4, 1, 3)

    def test_non_unit_rejected(self):
        with pytest.raises(ValueError):
            affine_perm(AffineSpec(2, 0), 4)
        with pytest.raises(ValueError):
            is_affine_panmagic(AffineSpec(3, 0), 9)

    @pytest.mark.parametrize("a, n, expected", [(2, 5, True), (1, 5, False), (2, 7, True), (6, 7, False)])
    def test_affine_panmagic(self, a, n, expected):
        assert is_affine_panmagic(AffineSpec(a, 0), n) is expected

    def test_enumerate_affine_5(self):
        specs = enumerate_affine_panmagic(5)
        assert len(specs) == 10
        assert {s.a for s in specs} == {2, 3}

    def test_enumerate_affine_11(self):
        specs = enumerate_affine_panmagic(11)
        assert len(specs) == 88
        assert {s.a for s in specs} == set(range(2, 10))

    def test_enumerate_affine_2(self):
        assert enumerate_affine_panmagic(2) == []

    @pytest.mark.parametrize("n", range(1, 30))
    def test_affine_count_formula(self, n):
        units = sum(1 for a in range(n) if gcd(a * (a - 1) * (a + 1), n) == 1)
        assert len(enumerate_affine_panmagic(n)) == n * units

    @pytest.mark.parametrize("n", [1, 5, 7, 11, 13])
    def test_affine_embeds_in_enumeration(self, n):
        allp = set(enumerate_panmagic(n))
        assert {affine_perm(s, n) for s in enumerate_affine_panmagic(n)} <= allp


class TestIsAffine:
    def test_round_trip(self):
        assert is_affine(affine_perm(AffineSpec(3, 2), 5)) == AffineSpec(3, 2)

    def test_identity_4(self):
        assert is_affine(Permutation.identity(4)) == AffineSpec(1, 0)

    def test_piecewise_is_not_affine(self):
        assert is_affine(nonaffine_piecewise(25, 5)) is None

    def test_degree_one(self):
        assert is_affine(Permutation([0])) == AffineSpec(0, 0)


class TestEnumerate:
    @pytest.mark.parametrize("n", range(1, 8))
    def test_matches_brute_force(self, n):
        assert enumerate_panmagic(n) == brute_force_panmagic(n)

    def test_n5_is_the_ten_affine_maps(self):
        expected = sorted(affine_perm(AffineSpec(a, b), 5) for a in (2, 3) for b in range(5))
        assert enumerate_panmagic(5) == expected

    def test_n6_empty(self):
        assert enumerate_panmagic(6) == []

    def test_n7_all_affine(self):
        perms = enumerate_panmagic(7)
        assert len(perms) == 28
        assert all(is_affine(p) is not None for p in perms)

    def test_sorted_lexicographically(self):
        perms = enumerate_panmagic(11)
        assert [p.images for p in perms] == sorted(p.images for p in perms)

    def test_every_result_is_panmagic_matrix(self):
        for p in enumerate_panmagic(11):
            assert check_panmagic(perm_matrix(p)).mu == 1

    def test_parallel_matches_sequential(self):
        assert enumerate_panmagic(11, workers=3) == enumerate_panmagic(11)

    def test_cap(self):
        with pytest.raises(ValueError):
            enumerate_panmagic(19)


class TestPiecewise:
    def test_25_5_images(self):
        pi = nonaffine_piecewise(25, 5)
        assert (pi(0), pi(5), pi(1), pi(2)) == (0, 10, 3, 6)
        assert all(pi(x) == (2 * x if x % 5 == 0 else 3 * x) % 25 for x in range(25))

    def test_35_7(self):
        pi = nonaffine_piecewise(35, 7)
        assert is_panmagic_perm(pi) is not None
        affine = {affine_perm(s, 35) for s in enumerate_affine_panmagic(35)}
        assert pi not in affine

    @pytest.mark.parametrize("n, p", [(7, 7), (25, 3), (25, 25), (15, 5), (35, 3)])
    def test_preconditions(self, n, p):
        with pytest.raises(ValueError):
            nonaffine_piecewise(n, p)
