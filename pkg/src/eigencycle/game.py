"""The parameterized five-strategy cyclic game and its replicator field.

The game is a one-population symmetric zero-sum game whose 5x5 payoff
matrix is circulant with first row (0, a, 1, -1, -a).  A single real
parameter ``a`` controls all treatments.  The interior rest point is the
uniform mixture (1/5, ..., 1/5); the Jacobian of the replicator dynamics
there is the payoff matrix divided by five.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

N_STRATEGIES = 5

EQUILIBRIUM = np.full(N_STRATEGIES, 1.0 / N_STRATEGIES)

SIMPLEX_TOL = 1e-9


@dataclass(frozen=True)
class GameSpec:
    """Game parameterization: the payoff parameter ``a`` (five strategies fixed)."""

    a: float
    n_strategies: int = N_STRATEGIES

    def __post_init__(self):
        if not np.isfinite(self.a):
            raise ValueError(f"payoff parameter must be finite, got {self.a}")
        if self.n_strategies != N_STRATEGIES:
            raise ValueError("only the five-strategy game is supported")


def payoff_matrix(spec: GameSpec) -> np.ndarray:
    """Circulant payoff matrix with first row (0, a, 1, -1, -a).

    Each row is the previous row cyclically shifted right by one; the
    matrix is antisymmetric with zero diagonal for every ``a``.
    """
    row = np.array([0.0, spec.a, 1.0, -1.0, -spec.a])
    return np.stack([np.roll(row, k) for k in range(N_STRATEGIES)])


def opposed_matrix(spec: GameSpec) -> np.ndarray:
    """Circulant matrix with first row (0, -a, -1, 1, a).

    Flipping the sign of ``a`` and relabeling strategies suggests this
    matrix, but it is not equivalent to ``payoff_matrix`` under any
    strategy permutation because the fixed +/-1 entries flip too.
    """
    row = np.array([0.0, -spec.a, -1.0, 1.0, spec.a])
    return np.stack([np.roll(row, k) for k in range(N_STRATEGIES)])


def validate_simplex_point(x, tol: float = SIMPLEX_TOL) -> np.ndarray:
    """Check that ``x`` is a valid mixed-strategy point (5 nonnegative, sum 1)."""
    x = np.asarray(x, dtype=float)
    if x.shape != (N_STRATEGIES,):
        raise ValueError(f"strategy point must have shape (5,), got {x.shape}")
    if np.any(x < -tol):
        raise ValueError(f"strategy frequencies must be nonnegative, got {x}")
    if abs(x.sum() - 1.0) > tol:
        raise ValueError(f"strategy frequencies must sum to 1, got sum {x.sum()!r}")
    return x


def replicator_velocity(spec: GameSpec, x) -> np.ndarray:
    """Replicator growth rates x_i * (U_i - Ubar) at the point ``x``.

    U_i is the payoff of strategy i against the population mixture and
    Ubar the population mean payoff; the components always sum to zero.
    """
    x = validate_simplex_point(x)
    u = payoff_matrix(spec) @ x
    return x * (u - x @ u)


def jacobian_at_equilibrium(spec: GameSpec) -> np.ndarray:
    """Jacobian of the replicator field at the uniform rest point: A / 5."""
    return payoff_matrix(spec) / N_STRATEGIES
