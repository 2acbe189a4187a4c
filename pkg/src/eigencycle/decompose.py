"""Mode decomposition of measured angular momentum and cross-subspace invariance.

A measured 10-vector L is regressed on the two eigencycle sets,

    L = c0 + k_alpha * sigma_alpha + k_beta * sigma_beta,

giving the weight of each mode in the observed cycling.  Session tables
are fit on the pi-scale sigma (the raw definition scale); switching to the
unit scale multiplies both coefficients by exactly 2.5 pi and changes
nothing else.  The module also provides theory-vs-measurement correlations
and the 10x10 cross-subspace correlation analysis with its predicted
sign pattern.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .eigensystem import eigencycle_table
from .stats import TestResult, ols, pearson, t_test_one_sample, t_test_paired_abs
from .subspaces import N_SUBSPACES, PAIR_LABELS, as_subspace_vector

SIGN_VIOLATION_RHO = 0.3


@dataclass(frozen=True)
class DecompositionResult:
    c0: float
    k_alpha: float
    k_beta: float
    rho: float          # multiple correlation coefficient, sqrt(R^2)
    r_squared: float
    p: float            # overall-regression F test (2 and 7 dof for 10 subspaces)
    sigma_scale: str


def mlr_decompose(L, sigma_scale: str = "pi") -> DecompositionResult:
    """Least-squares weights of a measured vector on the two eigencycle sets."""
    L = as_subspace_vector(L)
    sigma_alpha, sigma_beta = eigencycle_table(sigma_scale)
    fit = ols(L, [sigma_alpha, sigma_beta], intercept=True)
    return DecompositionResult(
        c0=float(fit.coefficients[0]),
        k_alpha=float(fit.coefficients[1]),
        k_beta=float(fit.coefficients[2]),
        rho=float(np.sqrt(max(fit.r_squared, 0.0))),
        r_squared=fit.r_squared,
        p=fit.f_p,
        sigma_scale=sigma_scale,
    )


@dataclass(frozen=True)
class SingleModeFit:
    mode: str
    c0: float
    k: float
    p: float


def single_regressor_fits(L, sigma_scale: str = "pi") -> tuple[SingleModeFit, SingleModeFit]:
    """Separate OLS of L on sigma_alpha alone and on sigma_beta alone."""
    L = as_subspace_vector(L)
    out = []
    for name, sigma in zip(("alpha", "beta"), eigencycle_table(sigma_scale)):
        fit = ols(L, [sigma], intercept=True)
        out.append(SingleModeFit(name, float(fit.coefficients[0]), float(fit.coefficients[1]), fit.f_p))
    return tuple(out)


@dataclass(frozen=True)
class TheoryExperimentCorrelation:
    rho_alpha: float
    p_alpha: float
    rho_beta: float
    p_beta: float


def theory_experiment_correlation(L) -> TheoryExperimentCorrelation:
    """Pearson correlation of a measured vector with each eigencycle set.

    Scale-free: the unit and pi sigma conventions give identical values.
    """
    L = as_subspace_vector(L)
    sigma_alpha, sigma_beta = eigencycle_table("unit")
    rho_a, test_a = pearson(L, sigma_alpha)
    rho_b, test_b = pearson(L, sigma_beta)
    return TheoryExperimentCorrelation(rho_a, test_a.p_value, rho_b, test_b.p_value)


def predicted_sign_matrix() -> np.ndarray:
    """10x10 matrix of predicted cross-subspace correlation signs.

    Two subspaces whose (sigma_alpha, sigma_beta) components are
    componentwise equal must co-move (+1); componentwise opposite must
    anti-move (-1); anything else carries no prediction (0).  Exactly 20
    off-diagonal pairs are signed.
    """
    sigma = np.vstack(eigencycle_table("unit"))
    signs = np.zeros((N_SUBSPACES, N_SUBSPACES), dtype=int)
    for i in range(N_SUBSPACES):
        for j in range(N_SUBSPACES):
            if i == j:
                continue
            if np.allclose(sigma[:, i], sigma[:, j], atol=1e-12):
                signs[i, j] = 1
            elif np.allclose(sigma[:, i], -sigma[:, j], atol=1e-12):
                signs[i, j] = -1
    return signs


@dataclass(frozen=True)
class InvarianceReport:
    rho_matrix: np.ndarray        # (10, 10) pairwise Pearson over sessions
    p_matrix: np.ndarray          # (10, 10) two-sided regression p
    predicted_signs: np.ndarray   # (10, 10) in {-1, 0, +1}
    violations: list              # signed pairs contradicting the prediction
    n_sessions: int


def subspace_invariance(sessions) -> InvarianceReport:
    """Cross-subspace correlation of per-session angular momenta.

    ``sessions`` is an (n, 10) matrix of session vectors, n >= 3, pooled
    over treatments.  A signed pair is flagged as a violation when its
    observed correlation exceeds 0.3 in magnitude with the wrong sign.
    """
    X = np.atleast_2d(np.asarray(sessions, dtype=float))
    if X.ndim != 2 or X.shape[1] != N_SUBSPACES:
        raise ValueError(f"sessions must form an (n, 10) matrix, got {X.shape}")
    if X.shape[0] < 3:
        raise ValueError("subspace invariance needs at least 3 sessions")
    n = X.shape[0]
    rho = np.eye(N_SUBSPACES)
    pmat = np.zeros((N_SUBSPACES, N_SUBSPACES))
    for i in range(N_SUBSPACES):
        for j in range(i + 1, N_SUBSPACES):
            r, test = pearson(X[:, i], X[:, j])
            rho[i, j] = rho[j, i] = r
            pmat[i, j] = pmat[j, i] = test.p_value
    predicted = predicted_sign_matrix()
    violations = []
    for i in range(N_SUBSPACES):
        for j in range(i + 1, N_SUBSPACES):
            s = predicted[i, j]
            if s and abs(rho[i, j]) > SIGN_VIOLATION_RHO and np.sign(rho[i, j]) != s:
                violations.append((PAIR_LABELS[i], PAIR_LABELS[j], float(rho[i, j]), int(s)))
    return InvarianceReport(rho, pmat, predicted, violations, n)


def invariance_check_scores(report: InvarianceReport) -> np.ndarray:
    """Per-pair compliance scores for the 45 upper-triangle check points.

    A signed pair scores sign * rho (positive when the observed direction
    matches).  An unsigned pair scores cutoff - |rho|, where the cutoff is
    the weakest |rho| among the signed pairs: positive when the pair stays
    below the predicted correlation cluster.  All 45 scores are positive
    exactly when no check point violates the prediction.
    """
    iu = np.triu_indices(N_SUBSPACES, 1)
    rho = report.rho_matrix[iu]
    signs = report.predicted_signs[iu]
    signed = signs != 0
    cutoff = np.abs(rho[signed]).min()
    scores = np.where(signed, signs * rho, cutoff - np.abs(rho))
    return scores


@dataclass(frozen=True)
class SessionStatistics:
    k_alpha_mean: float
    k_beta_mean: float
    p_k_alpha: float
    p_k_beta: float
    p_abs_diff: float     # paired test of |k_alpha| vs |k_beta|
    n_sessions: int
    zero_variance: bool


def session_statistics(results) -> SessionStatistics:
    """Across-session summary of per-session decomposition weights."""
    results = list(results)
    if len(results) < 2:
        raise ValueError("session statistics need at least 2 sessions")
    ka = np.array([r.k_alpha for r in results])
    kb = np.array([r.k_beta for r in results])
    ta: TestResult = t_test_one_sample(ka, 0.0)
    tb: TestResult = t_test_one_sample(kb, 0.0)
    td: TestResult = t_test_paired_abs(ka, kb)
    return SessionStatistics(
        k_alpha_mean=float(ka.mean()),
        k_beta_mean=float(kb.mean()),
        p_k_alpha=ta.p_value,
        p_k_beta=tb.p_value,
        p_abs_diff=td.p_value,
        n_sessions=len(results),
        zero_variance=ta.zero_variance or tb.zero_variance or td.zero_variance,
    )
