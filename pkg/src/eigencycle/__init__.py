"""Eigenmode selection toolkit for the one-population five-strategy cyclic game.

Closed-form eigensystem of the replicator Jacobian, eigencycle sets,
myopic mode-selection prediction, ODE and finite-population simulation,
angular-momentum measurement, regression mode decomposition, and a
reproduction pipeline for the published summary tables.
"""
from .game import (
    EQUILIBRIUM,
    GameSpec,
    jacobian_at_equilibrium,
    opposed_matrix,
    payoff_matrix,
    replicator_velocity,
    validate_simplex_point,
)
from .eigensystem import (
    EigenMode,
    LinearSolution,
    chi_pair,
    eigencycle_set,
    eigencycle_table,
    eigenmodes,
    eigenvalues_circulant_oracle,
    eigenvalues_closed_form,
    linear_solution,
    mode,
)
from .myopic import MyopicPrediction, response_strengths, step_strength, theory_projection
from .sim import AgentPolicy, TimeSeries, integrate_replicator, simulate_session, simulate_treatment
from .measure import MomentumResult, TreatmentAggregate, angular_momentum, treatment_aggregate
from .decompose import (
    DecompositionResult,
    InvarianceReport,
    SessionStatistics,
    TheoryExperimentCorrelation,
    invariance_check_scores,
    mlr_decompose,
    predicted_sign_matrix,
    session_statistics,
    single_regressor_fits,
    subspace_invariance,
    theory_experiment_correlation,
)
from .stats import (
    OLSResult,
    TestResult,
    ols,
    pearson,
    regularized_incomplete_beta,
    t_test_one_sample,
    t_test_paired_abs,
    wilcoxon_signed_rank,
)
from .report import ReproductionReport, qualitative_mode_report, reproduce_paper
from .subspaces import PAIR_LABELS, PAIRS
from . import fixtures

__version__ = "0.1.0"
