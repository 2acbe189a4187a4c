"""Angular-momentum measurement on time series and session aggregation.

For each 2-d strategy subspace (m, n) the measurement sums the cross
product (x(t) - O) x (x(t+1) - x(t)) over transitions: twice the signed
area swept around the origin O, counter-clockwise positive.  Published
session tables are on the accumulated (summed) convention; the per-round
mean (sum / (T-1)) is always reported alongside.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .game import EQUILIBRIUM
from .subspaces import N_SUBSPACES, PAIRS, as_subspace_vector


@dataclass(frozen=True)
class MomentumResult:
    accumulated: np.ndarray   # (10,) summed signed areas
    mean: np.ndarray          # accumulated / (T - 1)
    norm_ampl: float          # Euclidean norm of the accumulated vector
    n_points: int             # series length T

    def by_convention(self, aggregate: str) -> np.ndarray:
        if aggregate == "sum":
            return self.accumulated
        if aggregate == "mean":
            return self.mean
        raise ValueError(f"aggregate must be 'sum' or 'mean', got {aggregate!r}")


def angular_momentum(series, origin=None) -> MomentumResult:
    """Measure the 10 subspace angular momenta of a trajectory.

    ``series`` is a TimeSeries or a (T, 5) array of simplex points with
    T >= 2.  ``origin`` defaults to the interior equilibrium, projected
    onto each subspace.
    """
    points = np.asarray(getattr(series, "points", series), dtype=float)
    if points.ndim != 2 or points.shape[1] != 5:
        raise ValueError(f"series must have shape (T, 5), got {points.shape}")
    n = points.shape[0]
    if n < 2:
        raise ValueError("angular momentum needs a series of length >= 2")
    origin = EQUILIBRIUM if origin is None else np.asarray(origin, dtype=float)
    rel = points - origin
    delta = np.diff(points, axis=0)
    accumulated = np.empty(N_SUBSPACES)
    for k, (m, n_) in enumerate(PAIRS):
        i, j = m - 1, n_ - 1
        accumulated[k] = rel[:-1, i] @ delta[:, j] - rel[:-1, j] @ delta[:, i]
    return MomentumResult(
        accumulated=accumulated,
        mean=accumulated / (n - 1),
        norm_ampl=float(np.linalg.norm(accumulated)),
        n_points=n,
    )


@dataclass(frozen=True)
class TreatmentAggregate:
    mean_vector: np.ndarray
    unit_vector: np.ndarray
    norm_ampl: float
    n_sessions: int


def treatment_aggregate(session_vectors) -> TreatmentAggregate:
    """Componentwise mean of per-session vectors, its norm, and the unit direction."""
    vectors = [as_subspace_vector(v) for v in session_vectors]
    if not vectors:
        raise ValueError("treatment aggregation needs at least one session vector")
    mean_vec = np.mean(vectors, axis=0)
    norm = float(np.linalg.norm(mean_vec))
    if norm < 1e-12:
        raise ValueError("degenerate aggregate: mean session vector has zero norm")
    return TreatmentAggregate(mean_vec, mean_vec / norm, norm, len(vectors))
