"""Acceptance suite: one test per exit criterion, each printing a PASS/FAIL line.

Criterion 6a (the published theory/measurement summary panel) is known not
to be reproducible from the published per-session data: that panel is
internally inconsistent with the per-session table and the cross-
correlation panel (criterion 6b), which do reproduce.  The check is kept
at its stated tolerance and fails honestly; see the README for the
cell-by-cell analysis.
"""
import math

import numpy as np

from eigencycle import (
    AgentPolicy,
    GameSpec,
    angular_momentum,
    chi_pair,
    eigencycle_table,
    eigenvalues_circulant_oracle,
    eigenvalues_closed_form,
    invariance_check_scores,
    linear_solution,
    mlr_decompose,
    mode,
    ols,
    pearson,
    session_statistics,
    simulate_session,
    simulate_treatment,
    subspace_invariance,
    t_test_one_sample,
    theory_experiment_correlation,
    theory_projection,
    treatment_aggregate,
    wilcoxon_signed_rank,
)
from eigencycle import fixtures
from eigencycle.eigensystem import eigencycle_set
from eigencycle.myopic import response_strengths
from eigencycle.sim import integrate_replicator
from eigencycle.subspaces import N_SUBSPACES

TREATMENT_AS = tuple(fixtures.TREATMENT_A[tr] for tr in fixtures.TREATMENTS)


def report(criterion: str, failures: list):
    status = "PASS" if not failures else f"FAIL ({len(failures)} checks)"
    print(f"[acceptance] {criterion}: {status}")
    for f in failures[:20]:
        print(f"    {f}")
    assert not failures, f"{criterion}: {failures[:20]}"


def test_criterion_1_eigensystem():
    failures = []
    for a in TREATMENT_AS:
        spec = GameSpec(a)
        closed = list(eigenvalues_closed_form(spec))
        oracle = list(eigenvalues_circulant_oracle(spec))
        for lam in closed:
            dists = [abs(lam - mu) for mu in oracle]
            k = int(np.argmin(dists))
            if dists[k] > 1e-10:
                failures.append(f"a={a}: closed-form eigenvalue {lam} off oracle by {dists[k]:.2e}")
            oracle.pop(k)
    if abs(chi_pair(GameSpec(-0.618))[0]) > 1e-3:
        failures.append("chi+(-0.618) does not vanish")
    if abs(chi_pair(GameSpec(1.618))[1]) > 1e-3:
        failures.append("chi-(1.618) does not vanish")
    # the two-mode frequency degeneracy holds at the algebraic parameters the
    # rounded treatment labels denote (a^2 + 4a - 1 = 0)
    for a in (-2.0 - math.sqrt(5.0), math.sqrt(5.0) - 2.0):
        cp, cm = chi_pair(GameSpec(a))
        if abs(abs(cp.imag) - abs(cm.imag)) > 1e-6:
            failures.append(f"a={a}: |Im chi+| != |Im chi-|")
    report("criterion 1 (eigensystem closed form vs oracle)", failures)


def test_criterion_2_eigencycle_tables():
    failures = []
    sigma_a_u, sigma_b_u = eigencycle_table("unit")
    for k in range(N_SUBSPACES):
        if abs(sigma_a_u[k] - fixtures.SIGMA_ALPHA_UNIT[k]) > 5e-4:
            failures.append(f"sigma_alpha unit[{k}]")
        if abs(sigma_b_u[k] - fixtures.SIGMA_BETA_UNIT[k]) > 5e-4:
            failures.append(f"sigma_beta unit[{k}]")
    sigma_a_pi, sigma_b_pi = eigencycle_table("pi")
    for value, expected in [
        (sigma_a_pi[0], -2.988), (sigma_a_pi[1], -1.847),
        (sigma_b_pi[0], 1.847), (sigma_b_pi[1], -2.988),
        (sigma_a_pi[3], 2.988), (sigma_b_pi[2], 2.988),
    ]:
        if abs(value - expected) > 1e-3:
            failures.append(f"pi-scale value {value:.4f} != {expected}")
    if abs(sigma_a_pi @ sigma_b_pi) > 1e-12:
        failures.append("sigma_alpha . sigma_beta != 0")
    report("criterion 2 (eigencycle tables)", failures)


def test_criterion_3_myopic_estimator():
    failures = []
    for tr in fixtures.TREATMENTS:
        spec = GameSpec(fixtures.TREATMENT_A[tr])
        got = response_strengths(spec)
        if got.tolist() != fixtures.MYOPIC_STRENGTHS[tr].tolist():
            failures.append(f"{tr}: strength column mismatch")
        pred = theory_projection(spec)
        exp_a, exp_b = fixtures.MYOPIC_THEORY_RHO[tr]
        if abs(pred.rho_alpha - exp_a) > 1e-3:
            failures.append(f"{tr}: rho_alpha {pred.rho_alpha:.4f} != {exp_a}")
        if abs(pred.rho_beta - exp_b) > 1e-3:
            failures.append(f"{tr}: rho_beta {pred.rho_beta:.4f} != {exp_b}")
    report("criterion 3 (myopic estimator)", failures)


def test_criterion_4_treatment_aggregation():
    failures = []
    for tr in fixtures.TREATMENTS:
        agg = treatment_aggregate(fixtures.SESSION_L[tr])
        for k in range(N_SUBSPACES):
            if abs(agg.unit_vector[k] - fixtures.MEASURED_UNIT[tr][k]) > 2e-3:
                failures.append(f"{tr}: unit vector component {k}")
        if abs(agg.norm_ampl - fixtures.NORM_AMPLITUDES[tr]) > 1e-3:
            failures.append(f"{tr}: norm amplitude {agg.norm_ampl:.4f}")
    report("criterion 4 (treatment aggregation)", failures)


def test_criterion_5_mlr():
    failures = []
    for tr in fixtures.TREATMENTS:
        fit = mlr_decompose(fixtures.SESSION_L[tr].mean(axis=0), sigma_scale="pi")
        c0, ka, kb, rho_col, p = fixtures.TREATMENT_FITS[tr]
        if abs(fit.k_alpha - ka) > 1e-2:
            failures.append(f"{tr}: k_alpha")
        if abs(fit.k_beta - kb) > 1e-2:
            failures.append(f"{tr}: k_beta")
        if abs(fit.r_squared - rho_col) > 1e-2:
            failures.append(f"{tr}: rho column (R^2)")
        if not fit.p < p + 1e-3:
            failures.append(f"{tr}: regression p {fit.p:.5f} not < {p} + 1e-3")

    sessions_ok = 0
    for tr in fixtures.TREATMENTS:
        for row, (ka, kb, _) in zip(fixtures.SESSION_L[tr], fixtures.SESSION_FITS[tr]):
            fit = mlr_decompose(row, sigma_scale="pi")
            sessions_ok += abs(fit.k_alpha - ka) <= 5e-3 and abs(fit.k_beta - kb) <= 5e-3
    if sessions_ok < 45:
        failures.append(f"only {sessions_ok}/50 session fits within 5e-3")

    for tr in fixtures.TREATMENTS:
        stats = session_statistics([mlr_decompose(row) for row in fixtures.SESSION_L[tr]])
        ka, kb, pka, pkb = fixtures.SESSION_SUMMARIES[tr]
        if abs(stats.k_alpha_mean - ka) > 1e-2 or abs(stats.k_beta_mean - kb) > 1e-2:
            failures.append(f"{tr}: session-mean weights")
        if abs(stats.p_k_alpha - pka) > 3e-2 or abs(stats.p_k_beta - pkb) > 3e-2:
            failures.append(f"{tr}: session t-test p")
    report("criterion 5 (regression decomposition)", failures)


def test_criterion_6a_summary_panel():
    # Known-unreproducible published panel; kept at stated tolerance.
    failures = []
    for tr in fixtures.TREATMENTS:
        corr = theory_experiment_correlation(fixtures.SESSION_L[tr].mean(axis=0))
        exp_ra, exp_pa, exp_rb, exp_pb = fixtures.SUMMARY_PANEL[tr]
        for name, got, expected, tol in [
            ("rho_alpha", corr.rho_alpha, exp_ra, 1e-2),
            ("p_alpha", corr.p_alpha, exp_pa, 5e-3),
            ("rho_beta", corr.rho_beta, exp_rb, 1e-2),
            ("p_beta", corr.p_beta, exp_pb, 5e-3),
        ]:
            if abs(got - expected) > tol:
                failures.append(f"{tr}.{name}: got {got:.4f}, published {expected}")
    report("criterion 6a (published summary panel; known inconsistent source)", failures)


def test_criterion_6b_cross_correlation_panel():
    failures = []
    sigma_a_u, sigma_b_u = eigencycle_table("unit")
    columns = [sigma_a_u, sigma_b_u] + [fixtures.SESSION_L[tr].mean(axis=0)
                                        for tr in fixtures.TREATMENTS]
    for i in range(7):
        for j in range(i + 1, 7):
            rho, _ = pearson(columns[i], columns[j])
            if abs(rho - fixtures.EXPERIMENT_PANEL_RHO[i, j]) > 1e-2:
                failures.append(f"panel cell ({i},{j}): {rho:.4f}")
    report("criterion 6b (measurement cross-correlation panel)", failures)


def test_criterion_7_invariance():
    failures = []
    inv = subspace_invariance(fixtures.pooled_sessions())
    iu = np.triu_indices(N_SUBSPACES, 1)
    for i, j in zip(*iu):
        if abs(inv.rho_matrix[i, j] - fixtures.CROSS_SUBSPACE_RHO[i, j]) > 2e-3:
            failures.append(f"rho({i},{j})")
    observed = np.abs(inv.rho_matrix[iu])
    signed = np.flatnonzero(inv.predicted_signs[iu] != 0)
    if set(np.argsort(-observed)[:20]) != set(signed):
        failures.append("top-20 |rho| do not coincide with the signed pairs")
    if inv.violations:
        failures.append(f"sign violations: {inv.violations}")
    wil = wilcoxon_signed_rank(invariance_check_scores(inv))
    if not wil.p_value < 1e-6:
        failures.append(f"wilcoxon p {wil.p_value:.2e} not < 1e-6")
    report("criterion 7 (cross-subspace invariance)", failures)


def test_criterion_8_property_suite():
    failures = []

    # ratio invariance on a single-mode linearized trajectory
    spec = GameSpec(4.236)
    alpha = mode(spec, "alpha")
    x0 = 2.0 * np.real(0.008 * np.exp(0.3j) * alpha.vector)
    traj = linear_solution(spec, x0).trajectory(t_end=25.0, dt=0.05)
    ratios = angular_momentum(traj).accumulated / eigencycle_set(alpha, "pi")
    if (ratios.max() - ratios.min()) / abs(ratios.mean()) >= 1e-6:
        failures.append("single-mode L/sigma ratio spread >= 1e-6")

    # cross-mode interference vanishes over random-phase restarts
    beta = mode(spec, "beta")
    rng = np.random.default_rng(99)
    total, only_a, only_b = [], [], []
    for _ in range(200):
        ca = rng.uniform(0.005, 0.015) * np.exp(1j * rng.uniform(-np.pi, np.pi))
        cb = rng.uniform(0.005, 0.015) * np.exp(1j * rng.uniform(-np.pi, np.pi))
        xa = 2.0 * np.real(ca * alpha.vector)
        xb = 2.0 * np.real(cb * beta.vector)
        only_a.append(angular_momentum(linear_solution(spec, xa).trajectory(40.0, 0.1)).accumulated)
        only_b.append(angular_momentum(linear_solution(spec, xb).trajectory(40.0, 0.1)).accumulated)
        total.append(angular_momentum(linear_solution(spec, xa + xb).trajectory(40.0, 0.1)).accumulated)
    total, only_a, only_b = map(np.asarray, (total, only_a, only_b))
    cross = total - only_a - only_b
    se = cross.std(axis=0, ddof=1) / math.sqrt(len(cross))
    if not np.all(np.abs(cross.mean(axis=0)) <= 3.0 * se):
        failures.append("cross-mode interference mean beyond 3 SE")
    for name, same in (("alpha", only_a), ("beta", only_b)):
        se_same = same.std(axis=0, ddof=1) / math.sqrt(len(same))
        if not np.all(np.abs(same.mean(axis=0)) > 3.0 * se_same):
            failures.append(f"{name} same-mode contribution indistinguishable from 0")

    # simplex conservation along the ODE flow
    direction = np.array([2.0, -1.0, 1.0, -1.0, -1.0])
    x0 = np.full(5, 0.2) + 1e-3 * direction / np.linalg.norm(direction)
    for a in TREATMENT_AS:
        series = integrate_replicator(GameSpec(a), x0, t_end=50.0, dt=0.01)
        if np.abs(series.points.sum(axis=1) - 1.0).max() > 1e-9:
            failures.append(f"a={a}: simplex drift")
        radius = ((series.points - 0.2) ** 2).sum(axis=1)
        if abs(radius[-1] / radius[0] - 1.0) > 0.01:
            failures.append(f"a={a}: radius not conserved within 1%")

    # statistical oracle equivalences
    res = t_test_one_sample([1, 2, 3, 4, 5], 0.0)
    if abs(res.p_value - 0.013236) > 1e-4:
        failures.append("t-test quadrature oracle value")
    rng = np.random.default_rng(11)
    sample = rng.normal(0.5, 1.0, size=9)
    wil = wilcoxon_signed_rank(sample)
    ranks = np.argsort(np.argsort(np.abs(sample))) + 1.0
    w_obs = ranks[sample > 0].sum()
    sums = np.array([sum(r for k, r in enumerate(ranks) if (mask >> k) & 1)
                     for mask in range(2 ** 9)])
    p_exact = min(1.0, 2 * min(np.mean(sums <= w_obs + 1e-12), np.mean(sums >= w_obs - 1e-12)))
    if abs(wil.p_value - p_exact) > 1e-12:
        failures.append("wilcoxon enumeration oracle")
    X = rng.normal(size=(10, 2))
    y = rng.normal(size=10)
    fit = ols(y, [X[:, 0], X[:, 1]])
    beta_pinv = np.linalg.pinv(np.column_stack([np.ones(10), X])) @ y
    if np.abs(fit.coefficients - beta_pinv).max() > 1e-9:
        failures.append("OLS pseudo-inverse oracle")
    report("criterion 8 (property suite)", failures)


def test_criterion_9_simulator_qualitative():
    failures = []
    policy = AgentPolicy()   # defaults: logit, beta=5, inertia=0.3, population 6
    for a, dominant in ((4.236, "alpha"), (-0.618, "beta")):
        sessions = simulate_treatment(GameSpec(a), policy, sessions=10, rounds=600, seed=11)
        wins = 0
        for series in sessions:
            fit = mlr_decompose(angular_momentum(series).accumulated, sigma_scale="pi")
            got = "alpha" if abs(fit.k_alpha) > abs(fit.k_beta) else "beta"
            wins += got == dominant
        if wins < 8:
            failures.append(f"a={a}: {dominant}-dominant in only {wins}/10 sessions")

    uniform = AgentPolicy(beta=0.0, inertia=0.0)
    series = simulate_session(GameSpec(0.236), uniform, rounds=6000, seed=7)
    means = series.points.mean(axis=0)
    stds = series.points.std(axis=0)
    if np.abs(means - 0.2).max() > 0.02:
        failures.append("uniform-policy mean off 0.2 by > 0.02")
    if np.abs(stds - math.sqrt(0.2 * 0.8 / 6)).max() > 0.03:
        failures.append("uniform-policy per-round std off multinomial value by > 0.03")
    report("criterion 9 (simulator qualitative reproduction)", failures)
