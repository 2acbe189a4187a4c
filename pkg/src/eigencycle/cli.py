"""Command-line interface.

Subcommands: eigen, myopic, simulate, measure, decompose, invariance,
reproduce, figdata.  Exit codes: 0 success, 1 validation error, 2 failed
reproduction comparison.
"""
from __future__ import annotations

import argparse
import csv
import sys
from pathlib import Path

import numpy as np

from . import fixtures
from .decompose import (
    mlr_decompose,
    subspace_invariance,
    theory_experiment_correlation,
)
from .eigensystem import (
    chi_pair,
    eigencycle_set,
    eigenvalues_closed_form,
    eigenmodes,
)
from .game import GameSpec
from .io import (
    load_session_csv,
    load_timeseries_csv,
    records_by_treatment,
    save_timeseries_csv,
)
from .measure import angular_momentum, treatment_aggregate
from .myopic import response_strengths, theory_projection
from .report import qualitative_mode_report, reproduce_paper
from .sim import AgentPolicy, simulate_treatment
from .subspaces import PAIR_LABELS, PAIRS


def _fmt(value):
    if isinstance(value, float):
        return f"{value:.6g}"
    return str(value)


def _emit_table(args, name: str, header: list[str], rows: list[list]) -> None:
    if args.out:
        outdir = Path(args.out)
        outdir.mkdir(parents=True, exist_ok=True)
        if args.format == "md":
            path = outdir / f"{name}.md"
            with open(path, "w", encoding="utf-8") as fh:
                fh.write(_markdown(header, rows))
        else:
            path = outdir / f"{name}.csv"
            with open(path, "w", newline="", encoding="utf-8") as fh:
                writer = csv.writer(fh)
                writer.writerow(header)
                writer.writerows([[_fmt(v) for v in row] for row in rows])
        print(f"wrote {path}")
        return
    if args.format == "md":
        sys.stdout.write(_markdown(header, rows))
    else:
        writer = csv.writer(sys.stdout)
        writer.writerow(header)
        writer.writerows([[_fmt(v) for v in row] for row in rows])
    print()


def _markdown(header, rows) -> str:
    lines = ["| " + " | ".join(header) + " |",
             "|" + "|".join(["---"] * len(header)) + "|"]
    for row in rows:
        lines.append("| " + " | ".join(_fmt(v) for v in row) + " |")
    return "\n".join(lines) + "\n"


def _cmd_eigen(args) -> int:
    spec = GameSpec(args.a)
    lams = eigenvalues_closed_form(spec)
    cp, cm = chi_pair(spec)
    rows = [[name, lam.real, lam.imag] for name, lam in
            zip(("rest", "chi+", "chi-", "-chi+", "-chi-"), lams)]
    _emit_table(args, "eigenvalues", ["eigenvalue", "re", "im"], rows)
    rows = []
    for m in eigenmodes(spec):
        for k, comp in enumerate(m.vector, start=1):
            rows.append([m.label, k, abs(comp), np.angle(comp),
                         m.eigenvalue.real, m.eigenvalue.imag])
    _emit_table(args, "eigenvectors",
                ["mode", "component", "amplitude", "phase", "lambda_re", "lambda_im"], rows)
    scales = [args.scale] if args.scale else ["unit", "pi"]
    for scale in scales:
        modes = eigenmodes(spec)
        sigma_a = eigencycle_set(modes[1], scale)
        sigma_b = eigencycle_set(modes[2], scale)
        rows = [[lbl, sigma_a[k], sigma_b[k]] for k, lbl in enumerate(PAIR_LABELS)]
        _emit_table(args, f"eigencycle_{scale}", ["mn", "sigma_alpha", "sigma_beta"], rows)
    return 0


def _cmd_myopic(args) -> int:
    if args.table:
        rows = []
        for k, lbl in enumerate(PAIR_LABELS):
            row = [lbl]
            for tr in fixtures.TREATMENTS:
                row.append(response_strengths(GameSpec(fixtures.TREATMENT_A[tr]))[k])
            rows.append(row)
        _emit_table(args, "myopic_strengths",
                    ["mn"] + [f"L({fixtures.TREATMENT_A[tr]})" for tr in fixtures.TREATMENTS], rows)
        rows = []
        for tr in fixtures.TREATMENTS:
            pred = theory_projection(GameSpec(fixtures.TREATMENT_A[tr]))
            rows.append([tr, fixtures.TREATMENT_A[tr], pred.rho_alpha, pred.rho_beta])
        _emit_table(args, "myopic_projection", ["treatment", "a", "rho_alpha", "rho_beta"], rows)
        return 0
    if args.a is None:
        print("myopic: provide --a or --table", file=sys.stderr)
        return 1
    spec = GameSpec(args.a)
    pred = theory_projection(spec)
    rows = [[lbl, pred.strengths[k]] for k, lbl in enumerate(PAIR_LABELS)]
    rows.append(["rho_alpha", pred.rho_alpha])
    rows.append(["rho_beta", pred.rho_beta])
    _emit_table(args, "myopic", ["quantity", "value"], rows)
    return 0


def _cmd_simulate(args) -> int:
    spec = GameSpec(args.a)
    policy = AgentPolicy(kind=args.policy, beta=args.beta, inertia=args.inertia,
                         population_size=args.population)
    seed = args.seed if args.seed is not None else 0
    sessions = simulate_treatment(spec, policy, args.sessions, args.rounds, seed)
    outdir = Path(args.out) if args.out else Path(".")
    outdir.mkdir(parents=True, exist_ok=True)
    for k, series in enumerate(sessions, start=1):
        path = outdir / f"session_{k:02d}.csv"
        save_timeseries_csv(series, path)
        print(f"wrote {path}")
    return 0


def _cmd_measure(args) -> int:
    vectors = []
    rows = []
    for path in args.input:
        series = load_timeseries_csv(path)
        result = angular_momentum(series)
        vec = result.by_convention(args.aggregate)
        vectors.append(vec)
        rows.append([Path(path).name] + list(vec))
    _emit_table(args, "session_momentum", ["session"] + [f"L{l}" for l in PAIR_LABELS], rows)
    agg = treatment_aggregate(vectors)
    rows = [["mean"] + list(agg.mean_vector),
            ["unit"] + list(agg.unit_vector),
            ["norm_ampl", agg.norm_ampl] + [""] * 9]
    _emit_table(args, "treatment_aggregate", ["quantity"] + [f"L{l}" for l in PAIR_LABELS], rows)
    return 0


def _cmd_decompose(args) -> int:
    records = load_session_csv(args.input)
    grouped = records_by_treatment(records)
    rows = []
    if args.by == "session":
        for rec in records:
            fit = mlr_decompose(rec.L, sigma_scale=args.scale)
            rows.append([rec.treatment, rec.session_id, fit.c0, fit.k_alpha, fit.k_beta,
                         fit.rho, fit.r_squared, fit.p])
        header = ["treatment", "session", "c0", "k_alpha", "k_beta", "rho", "r_squared", "p"]
    else:
        for tr, matrix in grouped.items():
            fit = mlr_decompose(matrix.mean(axis=0), sigma_scale=args.scale)
            corr = theory_experiment_correlation(matrix.mean(axis=0))
            rows.append([tr, matrix.shape[0], fit.c0, fit.k_alpha, fit.k_beta, fit.rho,
                         fit.r_squared, fit.p, corr.rho_alpha, corr.p_alpha,
                         corr.rho_beta, corr.p_beta])
        header = ["treatment", "sessions", "c0", "k_alpha", "k_beta", "rho", "r_squared", "p",
                  "rho_alpha", "p_alpha", "rho_beta", "p_beta"]
    _emit_table(args, f"decompose_{args.by}", header, rows)
    return 0


def _cmd_invariance(args) -> int:
    records = load_session_csv(args.input)
    grouped = records_by_treatment(records)
    pooled = np.vstack(list(grouped.values()))
    inv = subspace_invariance(pooled)
    sign_chars = {1: "+", -1: "-", 0: ""}
    for name, matrix in [("invariance_rho", inv.rho_matrix), ("invariance_p", inv.p_matrix)]:
        rows = [[PAIR_LABELS[i]] + list(matrix[i]) for i in range(len(PAIR_LABELS))]
        _emit_table(args, name, ["mn"] + list(PAIR_LABELS), rows)
    rows = [[PAIR_LABELS[i]] + [sign_chars[int(s)] for s in inv.predicted_signs[i]]
            for i in range(len(PAIR_LABELS))]
    _emit_table(args, "invariance_predicted_signs", ["mn"] + list(PAIR_LABELS), rows)
    if inv.violations:
        rows = [[i, j, rho, s] for i, j, rho, s in inv.violations]
        _emit_table(args, "invariance_violations", ["mn", "m'n'", "rho", "predicted"], rows)
        return 2
    print(f"no sign violations across {inv.n_sessions} sessions")
    return 0


def _cmd_reproduce(args) -> int:
    if args.simulate:
        seed = args.seed if args.seed is not None else 0
        policy = AgentPolicy()
        matrices = {}
        for tr in fixtures.TREATMENTS:
            sessions = simulate_treatment(GameSpec(fixtures.TREATMENT_A[tr]), policy,
                                          args.sessions, args.rounds, seed)
            matrices[tr] = np.vstack([angular_momentum(s).accumulated for s in sessions])
        checks = qualitative_mode_report(matrices)
        rows = [[c.treatment, c.predicted, c.sessions_agreeing, c.n_sessions] for c in checks]
        _emit_table(args, "qualitative_modes",
                    ["treatment", "predicted_mode", "sessions_agreeing", "sessions"], rows)
        return 0
    if args.input:
        grouped = records_by_treatment(load_session_csv(args.input))
        rep = reproduce_paper(grouped)
    else:
        rep = reproduce_paper()
    for line in rep.summary_lines():
        print(line)
    if args.out:
        table = rep.rows()
        _emit_table(args, "reproduction_cells", table[0], table[1:])
    return 0 if rep.passed else 2


def _cmd_figdata(args) -> int:
    spec = GameSpec(0.0)
    modes = eigenmodes(spec)
    rows = []
    phis = np.linspace(0.0, 2.0 * np.pi, args.samples, endpoint=False)
    for m in (modes[1], modes[2]):
        for lbl, (i, j) in zip(PAIR_LABELS, PAIRS):
            for phi in phis:
                z = np.exp(1j * phi)
                rows.append([m.label, lbl, phi,
                             (z * m.vector[i - 1]).real, (z * m.vector[j - 1]).real])
    _emit_table(args, "lissajous", ["mode", "mn", "phase", "u", "v"], rows)
    grid = np.arange(args.a_min, args.a_max + 1e-12, args.a_step)
    rows = []
    for a in grid:
        cp, cm = chi_pair(GameSpec(float(a)))
        rows.append([a, cp.imag, cm.imag])
    _emit_table(args, "eigenvalue_curves", ["a", "im_chi_plus", "im_chi_minus"], rows)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="eigencycle",
        description="Eigenmode analysis, simulation and cycle measurement "
                    "for the five-strategy cyclic game",
    )
    parser.add_argument("--seed", type=int, default=None, help="base random seed")
    parser.add_argument("--out", default=None, help="directory for output files")
    parser.add_argument("--format", choices=("csv", "md"), default="csv")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eigen", help="eigenvalues, eigenvectors and eigencycle tables")
    p.add_argument("--a", type=float, required=True)
    p.add_argument("--scale", choices=("unit", "pi"), default=None)
    p.set_defaults(func=_cmd_eigen)

    p = sub.add_parser("myopic", help="myopic response strengths and mode projection")
    p.add_argument("--a", type=float, default=None)
    p.add_argument("--table", action="store_true",
                   help="emit the full five-treatment strength/projection tables")
    p.set_defaults(func=_cmd_myopic)

    p = sub.add_parser("simulate", help="finite-population agent sessions")
    p.add_argument("--a", type=float, required=True)
    p.add_argument("--rounds", type=int, required=True)
    p.add_argument("--sessions", type=int, required=True)
    p.add_argument("--beta", type=float, default=5.0)
    p.add_argument("--inertia", type=float, default=0.3)
    p.add_argument("--policy", choices=("logit", "nbr"), default="logit")
    p.add_argument("--population", type=int, default=6)
    p.set_defaults(func=_cmd_simulate)

    p = sub.add_parser("measure", help="angular momentum of time-series CSV files")
    p.add_argument("--input", nargs="+", required=True)
    p.add_argument("--aggregate", choices=("sum", "mean"), default="sum")
    p.set_defaults(func=_cmd_measure)

    p = sub.add_parser("decompose", help="mode weights of measured session vectors")
    p.add_argument("--input", required=True)
    p.add_argument("--scale", choices=("pi", "unit"), default="pi")
    p.add_argument("--by", choices=("session", "treatment"), default="session")
    p.set_defaults(func=_cmd_decompose)

    p = sub.add_parser("invariance", help="cross-subspace correlation analysis")
    p.add_argument("--input", required=True)
    p.set_defaults(func=_cmd_invariance)

    p = sub.add_parser("reproduce", help="recompute and compare the published tables")
    p.add_argument("--input", default=None,
                   help="session CSV (defaults to the bundled sessions)")
    p.add_argument("--simulate", action="store_true",
                   help="run the simulator instead and report the qualitative mode panel")
    p.add_argument("--sessions", type=int, default=10)
    p.add_argument("--rounds", type=int, default=600)
    p.set_defaults(func=_cmd_reproduce)

    p = sub.add_parser("figdata", help="plot data: eigencycle Lissajous orbits, eigenvalue curves")
    p.add_argument("--samples", type=int, default=200)
    p.add_argument("--a-min", type=float, default=-5.0)
    p.add_argument("--a-max", type=float, default=5.0)
    p.add_argument("--a-step", type=float, default=0.05)
    p.set_defaults(func=_cmd_figdata)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "simulate" and args.policy == "nbr":
        args.policy = "noisy_best_response"
    try:
        return args.func(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
