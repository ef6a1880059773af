"""Acceptance gate: one test per criterion, each with its runtime budget.

Every test prints ``PASS``/``FAIL criterion k: ...`` (visible with ``-s``) and
the same lines are repeated in the pytest terminal summary.
"""

import contextlib
import random
import time
from fractions import Fraction
from math import gcd

import pytest

from panstochastic.core import Permutation, check_panmagic, check_panstochastic, perm_matrix, support_subset
from panstochastic.decomp import (
    Infeasible,
    covering_permutation,
    decompose5,
    membership,
    non_decomp_certificate,
    panmagic_vertices5,
    span_rank_check,
)
from panstochastic.gallery import FIXTURE_NAMES, counterexample, fixture
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
from panstochastic.products import factor_through_support, kronecker, kronecker_perms, wreath_matrices, wreath_perms

from .conftest import random_convex5, random_panmagic

SEED = 20061018


@pytest.fixture
def criterion(request):
    @contextlib.contextmanager
    def run(k, title, limit):
        start = time.perf_counter()
        try:
            yield
        except BaseException:
            elapsed = time.perf_counter() - start
            _record(request, f"FAIL criterion {k}: {title} ({elapsed:.2f}s, limit {limit}s)")
            raise
        elapsed = time.perf_counter() - start
        ok = elapsed < limit
        _record(request, f"{'PASS' if ok else 'FAIL'} criterion {k}: {title} ({elapsed:.2f}s, limit {limit}s)")
        assert ok, f"criterion {k} took {elapsed:.2f}s, limit {limit}s"

    return run


def _record(request, line):
    print(line)
    request.config.acceptance_lines.append(line)


def test_criterion_1_enumeration_counts(criterion):
    with criterion(1, "panmagic permutation counts", 60):
        assert [p.images for p in enumerate_panmagic(1)] == [(0,)]
        for n in (2, 3, 4, 6, 8, 9, 10, 12):
            assert enumerate_panmagic(n) == []

        pi5 = set(enumerate_panmagic(5))
        expected5 = {affine_perm(AffineSpec(a, c), 5) for a in (2, 3) for c in range(5)}
        assert len(pi5) == 10 and pi5 == expected5
        assert pi5 == {affine_perm(s, 5) for s in enumerate_affine_panmagic(5)}

        for n, count in ((7, 28), (11, 88)):
            perms = enumerate_panmagic(n)
            assert len(perms) == count
            assert all(is_affine(p) is not None for p in perms)
            assert set(perms) == {affine_perm(s, n) for s in enumerate_affine_panmagic(n)}

        lam13 = {affine_perm(s, 13) for s in enumerate_affine_panmagic(13)}
        pi13 = set(enumerate_panmagic(13))
        assert len(lam13) == 130
        assert lam13 < pi13
        assert any(is_affine(p) is None for p in pi13 - lam13)


def test_criterion_2_decompose5_round_trip(criterion):
    rng = random.Random(SEED)
    with criterion(2, "200 random 5x5 round trips plus fixtures", 10):
        samples = [random_convex5(rng) for _ in range(200)]
        samples += [fixture(name) for name in ("uniform5", "magic60", "perm2x_5")]
        for A in samples:
            res = decompose5(A)
            assert res.matrix() == A
            assert res.total() == 1
            assert all(c >= 0 for _, c in res.terms)
            assert all(p in set(panmagic_vertices5()) for p, _ in res.terms)


def test_criterion_3_span(criterion):
    with criterion(3, "rank of the ten 5x5 vertices equals panmagic dimension", 1):
        r, dim = span_rank_check()
        assert r == dim == 9


def test_criterion_4_lemma41_7(criterion):
    with criterion(4, "7x7 counterexample: LP infeasible and certified", 10):
        A = fixture("lemma41_7")
        assert check_panstochastic(A)
        verts = [perm_matrix(p) for p in enumerate_panmagic(7)]
        assert len(verts) == 28
        lp = membership(A, verts)
        cert = non_decomp_certificate(A)
        assert lp == Infeasible()
        assert cert is not None
        # both tests agree: no vertex is usable for the witnessed entry
        i, j = cert.entry
        assert A[i, j] > 0
        assert not any(V[i, j] == 1 and support_subset(V, A) for V in verts)


def test_criterion_5_counterexample_family(criterion):
    with criterion(5, "counterexamples for 1 < n <= 49, n != 5", 300):
        for n in range(2, 50):
            if n == 5:
                continue
            A = counterexample(n)
            assert A.n == n and check_panstochastic(A), n
            if gcd(n, 6) == 1:
                cert = non_decomp_certificate(A)
                assert cert is not None, n
                i, j = cert.entry
                assert A[i, j] > 0
                pi, _ = covering_permutation(A, i, j)
                assert pi is None, n
            else:
                assert enumerate_affine_panmagic(n) == [], n
                if n <= 12:
                    assert enumerate_panmagic(n) == [], n

        cert = non_decomp_certificate(fixture("thm12_25"))
        assert cert.entry == (2, 0)
        placed = [(s.column, s.row) for s in cert.trace if s.action in ("force", "conflict")]
        for pair in ((13, 18), (21, 4), (8, 17)):
            assert pair in placed
        clash = [s for s in cert.trace if s.action == "conflict"]
        assert (clash[0].column, clash[0].row) == (21, 4)


def _random_perm(rng, n):
    return Permutation(rng.sample(range(n), n))


def _mixed_factor(rng, n, panmagic_pool):
    if panmagic_pool and rng.random() < 0.8:
        return rng.choice(panmagic_pool)
    return _random_perm(rng, n)


def test_criterion_6_products(criterion):
    rng = random.Random(SEED)
    orders = (1, 5, 7)
    pools = {n: enumerate_panmagic(n) for n in orders}
    with criterion(6, "wreath and Kronecker product properties, 100 instances each", 60):
        # multiplicativity of the magic number under the wreath product
        for _ in range(100):
            m, n = rng.choice(orders), rng.choice(orders)
            mu_a = Fraction(rng.randint(-6, 6), rng.randint(1, 4))
            blocks = [random_panmagic(rng, m, mu_a) for _ in range(n)]
            B = random_panmagic(rng, n)
            verdict = check_panmagic(wreath_matrices(blocks, B))
            assert verdict and verdict.mu == mu_a * check_panmagic(B).mu

        # a wreath of permutations is panmagic exactly when every factor is
        hits = misses = 0
        for _ in range(100):
            m, n = rng.choice((5, 7)), rng.choice((5, 7))
            lambdas = [_mixed_factor(rng, m, pools[m]) for _ in range(n)]
            rho = _mixed_factor(rng, n, pools[n])
            factors_ok = all(is_panmagic_perm(lam) for lam in lambdas) and bool(is_panmagic_perm(rho))
            assert (is_panmagic_perm(wreath_perms(lambdas, rho)) is not None) == factors_ok
            hits += factors_ok
            misses += not factors_ok
        assert hits and misses

        # Kronecker of panmagic matrices
        for _ in range(100):
            m, n = rng.choice(orders), rng.choice(orders)
            A, B = random_panmagic(rng, m), random_panmagic(rng, n)
            verdict = check_panmagic(kronecker(A, B))
            assert verdict and verdict.mu == check_panmagic(A).mu * check_panmagic(B).mu

        # Kronecker of panmagic permutations
        for _ in range(100):
            m, n = rng.choice(orders), rng.choice(orders)
            assert is_panmagic_perm(kronecker_perms(rng.choice(pools[m]), rng.choice(pools[n])))

        # factoring through the support of A (x) P_rho
        for _ in range(100):
            m, n = rng.choice((4, 5, 7)), rng.choice((5, 7))
            usable = [_random_perm(rng, m) for _ in range(rng.randint(1, 3))]
            A = sum((perm_matrix(p) for p in usable[1:]), perm_matrix(usable[0]))
            rho = _random_perm(rng, n)
            lambdas = [rng.choice(usable) for _ in range(n)]
            pi = wreath_perms(lambdas, rho)
            assert support_subset(perm_matrix(pi), kronecker(A, perm_matrix(rho)))
            factors = factor_through_support(pi, A, rho)
            assert wreath_perms(factors, rho) == pi
            assert all(support_subset(perm_matrix(lam), A) for lam in factors)


def test_criterion_7_affine_criterion(criterion):
    with criterion(7, "affine gcd test agrees with the queens test for n <= 50", 30):
        checked = 0
        for n in range(1, 51):
            for a in range(n):
                if gcd(a, n) != 1:
                    continue
                for b in range(n):
                    spec = AffineSpec(a, b)
                    assert is_affine_panmagic(spec, n) == (is_panmagic_perm(affine_perm(spec, n)) is not None)
                    checked += 1
        assert checked > 0


def test_criterion_8_piecewise(criterion):
    with criterion(8, "piecewise permutations are panmagic and not affine", 5):
        for n, p in ((25, 5), (35, 5), (35, 7), (49, 7)):
            pi = nonaffine_piecewise(n, p)
            assert is_panmagic_perm(pi) is not None
            assert is_affine(pi) is None


def test_fixture_names_cover_gallery():
    # the gallery the criteria lean on is complete
    assert {"uniform5", "magic60", "perm2x_5", "lemma41_7", "thm12_25"} <= set(FIXTURE_NAMES)
