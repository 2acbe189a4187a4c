"""Step-function response strengths and their projection onto the eigencycle sets.

A myopic deviation by one agent in strategy m moves strategy n at a rate
set by the payoff entry A[n, m], so each 2-d subspace (m, n) gets a
qualitative cycle strength from a step function of that entry.  The
thresholds sit at the fixed +/-1 payoff entries, so the strength vector
only depends on which band (-inf,-1), (-1,0), (0,1), (1,inf) the
parameter falls in.  Correlating the strength vector with each eigencycle
set predicts which mode dominates.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .eigensystem import eigencycle_table
from .game import GameSpec, payoff_matrix
from .subspaces import PAIRS
from .stats import pearson


def step_strength(v: float) -> float:
    """Qualitative response strength of a payoff entry.

    Piecewise: +/-2 beyond the unit entries, +/-1/2 strictly inside,
    +/-1 exactly at the unit entries, 0 at 0.
    """
    if v > 1.0:
        return 2.0
    if v < -1.0:
        return -2.0
    if v == 1.0:
        return 1.0
    if v == -1.0:
        return -1.0
    if v > 0.0:
        return 0.5
    if v < 0.0:
        return -0.5
    return 0.0


def response_strengths(spec: GameSpec) -> np.ndarray:
    """Strength vector over the 10 subspaces: step_strength(A[n, m]) per pair (m, n)."""
    A = payoff_matrix(spec)
    return np.array([step_strength(A[n - 1, m - 1]) for m, n in PAIRS])


@dataclass(frozen=True)
class MyopicPrediction:
    strengths: np.ndarray
    rho_alpha: float
    rho_beta: float


def theory_projection(spec: GameSpec) -> MyopicPrediction:
    """Pearson correlation of the strength vector with each eigencycle set.

    The correlation is invariant to the eigencycle scale, so either the
    unit or the pi convention gives the same projection.
    """
    strengths = response_strengths(spec)
    sigma_alpha, sigma_beta = eigencycle_table("unit")
    rho_a, _ = pearson(strengths, sigma_alpha)
    rho_b, _ = pearson(strengths, sigma_beta)
    return MyopicPrediction(strengths, rho_a, rho_b)
