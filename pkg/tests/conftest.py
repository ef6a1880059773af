import random
from fractions import Fraction

import pytest
from hypothesis import settings

from panstochastic.core import SquareMatrix, check_panmagic, linear_combination, perm_matrix
from panstochastic.decomp import panmagic_basis, panmagic_vertices5

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


@pytest.fixture
def rng():
    return random.Random(20061018)


def random_fraction(rng, lo=-5, hi=5, max_den=7):
    return Fraction(rng.randint(lo * max_den, hi * max_den), rng.randint(1, max_den))


def random_convex5(rng, max_terms=10):
    """A random convex combination of the ten 5x5 panmagic permutation matrices."""
    verts = panmagic_vertices5()
    k = rng.randint(1, max_terms)
    chosen = rng.sample(range(10), k)
    weights = [Fraction(rng.randint(1, 30)) for _ in chosen]
    total = sum(weights)
    return linear_combination(((w / total, perm_matrix(verts[c])) for w, c in zip(weights, chosen)), 5)


_BASES = {}


def random_panmagic(rng, m, mu=None):
    """A random rational panmagic ``m x m`` matrix, optionally with prescribed magic number."""
    if m not in _BASES:
        _BASES[m] = panmagic_basis(m)
    A = linear_combination(((random_fraction(rng), B) for B in _BASES[m]), m)
    if mu is not None:
        current = check_panmagic(A).mu
        A = A + SquareMatrix.constant(m, (Fraction(mu) - current) / m)
    assert check_panmagic(A)
    return A


def pytest_configure(config):
    config.acceptance_lines = []


def pytest_terminal_summary(terminalreporter, config):
    lines = getattr(config, "acceptance_lines", [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(lines):
            terminalreporter.write_line(line)
