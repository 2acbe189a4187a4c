"""Fixed ordering of the ten two-dimensional strategy subspaces.

Every 10-component quantity in this package (eigencycle sets, myopic
strengths, measured angular momentum) is indexed by the ordered strategy
pair (m, n), m < n, in the order listed in ``PAIRS``.
"""
from __future__ import annotations

import numpy as np

# (m, n) with 1-based strategy indices; this order is fixed everywhere.
PAIRS: tuple[tuple[int, int], ...] = (
    (1, 2), (1, 3), (1, 4), (1, 5),
    (2, 3), (2, 4), (2, 5),
    (3, 4), (3, 5), (4, 5),
)

PAIR_LABELS: tuple[str, ...] = tuple(f"{m}{n}" for m, n in PAIRS)

N_SUBSPACES = len(PAIRS)


def as_subspace_vector(values) -> np.ndarray:
    """Validate and return a 10-component float vector in the fixed pair order."""
    v = np.asarray(values, dtype=float)
    if v.shape != (N_SUBSPACES,):
        raise ValueError(f"subspace vector must have shape (10,), got {v.shape}")
    if not np.all(np.isfinite(v)):
        raise ValueError("subspace vector contains non-finite values")
    return v


def pair_index(m: int, n: int) -> int:
    """Index of the (m, n) subspace in the fixed order (m < n, 1-based)."""
    try:
        return PAIRS.index((m, n))
    except ValueError:
        raise ValueError(f"({m},{n}) is not an ordered strategy pair with m < n") from None
