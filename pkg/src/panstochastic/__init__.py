"""Exact verification, construction and decomposition of panstochastic matrices."""

from .core import (
    MagicReport,
    Panmagic,
    Permutation,
    SquareMatrix,
    StochasticVerdict,
    Violation,
    check_panmagic,
    check_panstochastic,
    line_sums,
    perm_matrix,
    support,
    support_subset,
)
from .decomp import (
    DecompositionResult,
    Eq1Coordinates,
    Feasible,
    Infeasible,
    NonDecompCertificate,
    decompose5,
    membership,
    non_decomp_certificate,
    solve_eq1,
    span_rank_check,
)
from .gallery import counterexample, fixture, lemma41_matrix, lift, uniform
from .perms import (
    AffineSpec,
    PanmagicWitness,
    affine_perm,
    enumerate_affine_panmagic,
    enumerate_panmagic,
    is_affine,
    is_affine_panmagic,
    is_panmagic_perm,
    nonaffine_piecewise,
)
from .products import factor_through_support, kronecker, wreath_matrices, wreath_perms

__version__ = "0.1.0"
