"""Closed-form eigensystem of the replicator Jacobian and eigencycle sets.

The Jacobian A/5 is circulant, so its eigenvectors are the five Fourier
modes eta_k = exp(i * theta * k) and its spectrum is purely imaginary for
every parameter value.  Two conjugate pairs remain after the rest mode
(1,1,1,1,1): the "alpha" pair with component phase step 2*pi/5 and the
"beta" pair with step 4*pi/5.  Each complex mode induces a signed cyclic
area in every 2-d strategy subspace -- its eigencycle set.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .game import EQUILIBRIUM, N_STRATEGIES, GameSpec, jacobian_at_equilibrium
from .subspaces import PAIRS

MODE_LABELS = ("rest", "alpha", "beta", "alpha_conj", "beta_conj")

# Component phase step of each mode along strategies 1..5.
_MODE_THETA = {
    "rest": 0.0,
    "alpha": 2.0 * np.pi / 5.0,
    "beta": -4.0 * np.pi / 5.0,
    "alpha_conj": -2.0 * np.pi / 5.0,
    "beta_conj": 4.0 * np.pi / 5.0,
}

# Euclidean norm of a pi-scale eigencycle set: pi * sqrt(5 (sin^2 72 + sin^2 144)) = 2.5 pi.
PI_SCALE_NORM = 2.5 * np.pi

_RESIDUAL_TOL = 1e-9


def chi_pair(spec: GameSpec) -> tuple[complex, complex]:
    """The conjugate eigenvalue magnitudes (chi+, chi-), principal square roots.

    chi_pm = sqrt(+/- 2 sqrt(5) (1 - 4a - a^2) - 10 (a^2 + 1)) / 10; both
    radicands are nonpositive for every real a, so chi_pm is purely
    imaginary (nonnegative imaginary part on the principal branch).
    """
    a = spec.a
    common = -10.0 * (a * a + 1.0)
    swing = 2.0 * np.sqrt(5.0) * (1.0 - 4.0 * a - a * a)
    chi_plus = np.sqrt(complex(common + swing)) / 10.0
    chi_minus = np.sqrt(complex(common - swing)) / 10.0
    return chi_plus, chi_minus


def eigenvalues_closed_form(spec: GameSpec) -> np.ndarray:
    """The five eigenvalues ordered (0, chi+, chi-, -chi+, -chi-)."""
    cp, cm = chi_pair(spec)
    return np.array([0.0, cp, cm, -cp, -cm], dtype=complex)


def eigenvalues_circulant_oracle(spec: GameSpec) -> np.ndarray:
    """Independent spectrum via the DFT of the circulant Jacobian's first row.

    lambda_k = sum_j J[0, j] * omega^(j k) with omega = exp(2 pi i / 5),
    for k = 0..4.
    """
    first_row = jacobian_at_equilibrium(spec)[0]
    omega = np.exp(2j * np.pi / N_STRATEGIES)
    k = np.arange(N_STRATEGIES)
    return np.array([first_row @ omega ** (k * kk) for kk in range(N_STRATEGIES)])


def _mode_vector(label: str) -> np.ndarray:
    theta = _MODE_THETA[label]
    return np.exp(1j * theta * np.arange(N_STRATEGIES))


def _eigencycle_from_vector(vector: np.ndarray) -> np.ndarray:
    """pi * |eta_m| |eta_n| sin(arg eta_m - arg eta_n) over the fixed pair order."""
    amp = np.abs(vector)
    phase = np.angle(vector)
    return np.array([
        np.pi * amp[m - 1] * amp[n - 1] * np.sin(phase[m - 1] - phase[n - 1])
        for m, n in PAIRS
    ])


@dataclass(frozen=True)
class EigenMode:
    """One eigenvalue with its eigenvector and (for complex modes) eigencycle set."""

    label: str
    eigenvalue: complex
    vector: np.ndarray                   # 5 complex components, unit amplitude each
    eigencycle_pi: np.ndarray | None     # 10 signed areas at unit component amplitude
    eigencycle_unit: np.ndarray | None   # same, rescaled to unit Euclidean norm

    @property
    def is_rest(self) -> bool:
        return self.label == "rest"


def eigencycle_set(mode: EigenMode, scale: str = "unit") -> np.ndarray:
    """The mode's 10-component eigencycle set at the requested scale.

    ``pi`` is the raw definition evaluated at unit component amplitudes;
    ``unit`` rescales the 10-vector to unit Euclidean norm (a factor of
    exactly 1 / (2.5 pi)).  The rest mode has no cycle: requesting the
    unit scale for it raises a degenerate-mode error.
    """
    if scale not in ("unit", "pi"):
        raise ValueError(f"scale must be 'unit' or 'pi', got {scale!r}")
    raw = _eigencycle_from_vector(mode.vector)
    if scale == "pi":
        return raw
    norm = np.linalg.norm(raw)
    if norm < 1e-12:
        raise ValueError(f"degenerate mode {mode.label!r}: eigencycle set is zero, cannot normalize")
    return raw / norm


def eigenmodes(spec: GameSpec) -> list[EigenMode]:
    """All five modes, ordered (rest, alpha, beta, alpha_conj, beta_conj).

    Each mode's eigenvalue is obtained from its own eigenvector via the
    Rayleigh quotient (exact for circulant matrices), so the pairing is by
    eigenvector and stays correct when the two conjugate frequencies
    coincide.
    """
    J = jacobian_at_equilibrium(spec)
    modes = []
    for label in MODE_LABELS:
        v = _mode_vector(label)
        lam = complex(np.vdot(v, J @ v) / np.vdot(v, v))
        residual = np.linalg.norm(J @ v - lam * v)
        if residual > _RESIDUAL_TOL:
            raise AssertionError(f"eigenpair residual {residual:.2e} for mode {label}")
        if label == "rest":
            cyc_pi = cyc_unit = None
        else:
            cyc_pi = _eigencycle_from_vector(v)
            cyc_unit = cyc_pi / np.linalg.norm(cyc_pi)
        modes.append(EigenMode(label, lam, v, cyc_pi, cyc_unit))
    return modes


def mode(spec: GameSpec, label: str) -> EigenMode:
    """The single mode with the given label."""
    if label not in MODE_LABELS:
        raise ValueError(f"unknown mode label {label!r}")
    return eigenmodes(spec)[MODE_LABELS.index(label)]


def eigencycle_table(scale: str = "unit") -> tuple[np.ndarray, np.ndarray]:
    """(sigma_alpha, sigma_beta) at the requested scale.

    The eigenvector structure, hence the eigencycle sets, do not depend on
    the payoff parameter.
    """
    spec = GameSpec(0.0)
    return (
        eigencycle_set(mode(spec, "alpha"), scale),
        eigencycle_set(mode(spec, "beta"), scale),
    )


@dataclass(frozen=True)
class LinearSolution:
    """A trajectory of the linearized dynamics, expanded over the eigenmodes."""

    spec: GameSpec
    coefficients: np.ndarray    # 5 complex mode coefficients
    modes: tuple[EigenMode, ...]

    def evaluate(self, t: float) -> np.ndarray:
        """Deviation from equilibrium at time ``t`` (components sum to 0)."""
        value = np.zeros(N_STRATEGIES, dtype=complex)
        for c, m in zip(self.coefficients, self.modes):
            value += c * np.exp(m.eigenvalue * t) * m.vector
        imag = np.abs(value.imag).max()
        if imag > 1e-9:
            raise AssertionError(f"imaginary residual {imag:.2e} in linear solution")
        return value.real

    def trajectory(self, t_end: float, dt: float) -> np.ndarray:
        """Sampled simplex points equilibrium + deviation at t = 0, dt, 2dt, ..."""
        if dt <= 0 or t_end < dt:
            raise ValueError("need dt > 0 and t_end >= dt")
        steps = int(round(t_end / dt))
        ts = np.arange(steps + 1) * dt
        basis = np.column_stack([m.vector for m in self.modes])
        lams = np.array([m.eigenvalue for m in self.modes])
        deviations = (basis @ (self.coefficients[:, None] * np.exp(np.outer(lams, ts)))).T
        imag = np.abs(deviations.imag).max()
        if imag > 1e-9:
            raise AssertionError(f"imaginary residual {imag:.2e} in linear solution")
        return EQUILIBRIUM + deviations.real


def linear_solution(spec: GameSpec, x0) -> LinearSolution:
    """Expand a tangent initial deviation over the eigenmodes.

    ``x0`` is a 5-vector deviation from the equilibrium whose components
    must sum to zero (tangent to the simplex) within 1e-9.
    """
    x0 = np.asarray(x0, dtype=float)
    if x0.shape != (N_STRATEGIES,):
        raise ValueError(f"initial deviation must have shape (5,), got {x0.shape}")
    if abs(x0.sum()) > 1e-9:
        raise ValueError(f"initial deviation must sum to 0 (tangent), got {x0.sum()!r}")
    modes = tuple(eigenmodes(spec))
    basis = np.column_stack([m.vector for m in modes])
    coeffs = np.linalg.solve(basis, x0.astype(complex))
    solution = LinearSolution(spec, coeffs, modes)
    recon = solution.evaluate(0.0)
    if np.abs(recon - x0).max() > 1e-9:
        raise AssertionError("initial condition reconstruction failed")
    return solution
