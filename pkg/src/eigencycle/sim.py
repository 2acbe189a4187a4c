"""Time-series generation: replicator ODE flow and a finite-population agent model.

The ODE side integrates the replicator field with fixed-step RK4.  The
agent side mimics the lab protocol: six players, random pairwise matching
each round, and a configurable response rule driven by the previous
round's strategy-count display (the five counts of the other players).
The behavioral rule is deliberately a model choice, not a claim: a logit
(softmax) response with rationality ``beta`` and repeat-probability
``inertia`` by default, or a noisy best response.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .game import N_STRATEGIES, GameSpec, payoff_matrix, validate_simplex_point

POLICY_KINDS = ("logit", "noisy_best_response")


@dataclass
class TimeSeries:
    """Ordered simplex points with a fixed sampling step.

    ``counts`` is present for agent simulations (integer strategy counts
    per round); ``points`` are then exactly counts / population_size.
    """

    points: np.ndarray            # (T, 5) strategy frequencies
    dt: float = 1.0
    meta: dict = field(default_factory=dict)
    counts: np.ndarray | None = None

    def __post_init__(self):
        self.points = np.asarray(self.points, dtype=float)
        if self.points.ndim != 2 or self.points.shape[1] != N_STRATEGIES:
            raise ValueError(f"points must have shape (T, 5), got {self.points.shape}")

    def __len__(self) -> int:
        return self.points.shape[0]


@dataclass(frozen=True)
class AgentPolicy:
    """Response rule of the simulated players."""

    kind: str = "logit"
    beta: float = 5.0
    inertia: float = 0.3
    population_size: int = 6

    def __post_init__(self):
        if self.kind not in POLICY_KINDS:
            raise ValueError(f"policy kind must be one of {POLICY_KINDS}, got {self.kind!r}")
        if self.beta < 0:
            raise ValueError("beta (rationality) must be >= 0")
        if not 0.0 <= self.inertia <= 1.0:
            raise ValueError("inertia must lie in [0, 1]")
        if self.population_size < 2 or self.population_size % 2:
            raise ValueError("population_size must be an even integer >= 2")


def integrate_replicator(spec: GameSpec, x0, t_end: float, dt: float = 0.01) -> TimeSeries:
    """Fixed-step RK4 trajectory of the replicator flow from ``x0``.

    No renormalization is applied; the worst simplex-sum drift is reported
    in ``meta['max_simplex_drift']``.  A step that would push a frequency
    below -1e-9 raises (the step size is too large for the orbit).
    """
    x0 = validate_simplex_point(x0)
    if dt <= 0:
        raise ValueError("dt must be positive")
    if t_end < dt:
        raise ValueError("t_end must be at least one step")
    steps = int(round(t_end / dt))
    points = np.empty((steps + 1, N_STRATEGIES))
    points[0] = x0
    x = x0.copy()
    drift = abs(x.sum() - 1.0)
    for i in range(steps):
        k1 = replicator_velocity_unchecked(spec, x)
        k2 = replicator_velocity_unchecked(spec, x + 0.5 * dt * k1)
        k3 = replicator_velocity_unchecked(spec, x + 0.5 * dt * k2)
        k4 = replicator_velocity_unchecked(spec, x + dt * k3)
        x = x + (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4)
        if np.any(x < -1e-9):
            raise ValueError(
                f"integration step rejected at t={(i + 1) * dt:.6g}: "
                f"frequency {x.min():.3e} < 0 (reduce dt)"
            )
        drift = max(drift, abs(x.sum() - 1.0))
        points[i + 1] = x
    meta = {"a": spec.a, "t_end": t_end, "dt": dt, "max_simplex_drift": drift}
    return TimeSeries(points=points, dt=dt, meta=meta)


def replicator_velocity_unchecked(spec: GameSpec, x: np.ndarray) -> np.ndarray:
    # RK4 interior stages may sit slightly off the simplex; skip validation there.
    u = payoff_matrix(spec) @ x
    return x * (u - x @ u)


def _response_distribution(policy: AgentPolicy, utilities: np.ndarray) -> np.ndarray:
    if policy.kind == "logit":
        z = policy.beta * utilities
        z -= z.max()
        p = np.exp(z)
        return p / p.sum()
    # noisy best response: uniform exploration with weight 1/(1+beta)
    eps = 1.0 / (1.0 + policy.beta)
    best = utilities == utilities.max()
    p = np.full(N_STRATEGIES, eps / N_STRATEGIES)
    p[best] += (1.0 - eps) / best.sum()
    return p


def _random_matching(rng: np.random.Generator, n: int) -> np.ndarray:
    """Random perfect matching: opponents[i] is i's partner this round."""
    perm = rng.permutation(n)
    opponents = np.empty(n, dtype=int)
    for k in range(0, n, 2):
        i, j = perm[k], perm[k + 1]
        opponents[i], opponents[j] = j, i
    return opponents


def simulate_session(
    spec: GameSpec,
    policy: AgentPolicy,
    rounds: int,
    seed,
    payoff_accrual: str = "match",
) -> TimeSeries:
    """One seeded session of repeated play; deterministic given the seed.

    Round 1 choices are uniform.  Afterwards each agent repeats its
    previous choice with probability ``inertia`` and otherwise resamples
    from the policy distribution given the payoffs of the five strategies
    against the previous round's count display (the other players'
    choices, excluding self).

    ``payoff_accrual`` controls only the earnings bookkeeping stored in
    ``meta['total_payoffs']``: 'match' credits the single paired
    opponent's game, 'mean' credits the average game against the other
    players.  It does not affect behavior, which responds to the display.
    """
    if rounds < 1:
        raise ValueError("rounds must be >= 1")
    if payoff_accrual not in ("match", "mean"):
        raise ValueError("payoff_accrual must be 'match' or 'mean'")
    rng = np.random.default_rng(seed)
    pop = policy.population_size
    A = payoff_matrix(spec)
    strategies = rng.integers(0, N_STRATEGIES, size=pop)
    counts = np.empty((rounds, N_STRATEGIES), dtype=int)
    totals = np.zeros(pop)
    for t in range(rounds):
        tally = np.bincount(strategies, minlength=N_STRATEGIES)
        counts[t] = tally
        opponents = _random_matching(rng, pop)
        for i in range(pop):
            if payoff_accrual == "match":
                totals[i] += A[strategies[i], strategies[opponents[i]]]
            else:
                others = tally.copy()
                others[strategies[i]] -= 1
                totals[i] += A[strategies[i]] @ others / (pop - 1)
        if t == rounds - 1:
            break
        new_strategies = strategies.copy()
        repeat = rng.random(pop) < policy.inertia
        for i in range(pop):
            if repeat[i]:
                continue
            display = tally.copy()
            display[strategies[i]] -= 1
            utilities = A @ (display / (pop - 1))
            p = _response_distribution(policy, utilities)
            new_strategies[i] = rng.choice(N_STRATEGIES, p=p)
        strategies = new_strategies
    meta = {
        "a": spec.a,
        "seed": seed,
        "policy": policy,
        "payoff_accrual": payoff_accrual,
        "total_payoffs": totals,
    }
    return TimeSeries(points=counts / pop, dt=1.0, meta=meta, counts=counts)


def simulate_treatment(
    spec: GameSpec,
    policy: AgentPolicy,
    sessions: int,
    rounds: int,
    seed: int,
    payoff_accrual: str = "match",
) -> list[TimeSeries]:
    """Independent sessions with per-session seeds derived from a base seed."""
    if sessions < 1:
        raise ValueError("sessions must be >= 1")
    children = np.random.SeedSequence(seed).spawn(sessions)
    return [
        simulate_session(spec, policy, rounds, child, payoff_accrual=payoff_accrual)
        for child in children
    ]
