"""CSV ingestion and emission for session vectors and time series.

Session files mirror the published per-session table: one row per
session with header ``treatment,a,session,L12,...,L45``.  Time-series
files carry ``t`` plus either frequency columns ``x1..x5`` or count
columns ``n1..n5`` (counts require a ``# population=N`` header line).
"""
from __future__ import annotations

import csv
from dataclasses import dataclass
from importlib import resources
from pathlib import Path

import numpy as np

from .fixtures import SESSION_L, TREATMENT_A, TREATMENTS, treatment_for_a
from .sim import TimeSeries
from .subspaces import PAIR_LABELS, as_subspace_vector

SESSION_HEADER = ["treatment", "a", "session"] + [f"L{lbl}" for lbl in PAIR_LABELS]


@dataclass(frozen=True)
class SessionRecord:
    treatment: str
    a: float
    session_id: int
    L: np.ndarray

    def __post_init__(self):
        if self.treatment not in TREATMENTS:
            raise ValueError(f"unknown treatment {self.treatment!r}")
        if treatment_for_a(self.a) != self.treatment:
            raise ValueError(
                f"payoff parameter {self.a} does not match treatment {self.treatment}"
            )
        object.__setattr__(self, "L", as_subspace_vector(self.L))


def fixture_records() -> list[SessionRecord]:
    """The 50 embedded sessions as validated records."""
    records = []
    for tr in TREATMENTS:
        for k, row in enumerate(SESSION_L[tr], start=1):
            records.append(SessionRecord(tr, TREATMENT_A[tr], k, row))
    return records


def bundled_sessions_path() -> Path:
    """Path of the session CSV shipped with the package."""
    return Path(resources.files("eigencycle").joinpath("data/sessions.csv"))


def load_session_csv(path) -> list[SessionRecord]:
    """Read and validate a session-vector CSV file."""
    records = []
    with open(path, newline="", encoding="utf-8") as fh:
        reader = csv.reader(fh)
        try:
            header = next(reader)
        except StopIteration:
            return []
        if [h.strip() for h in header] != SESSION_HEADER:
            raise ValueError(f"{path}: expected header {','.join(SESSION_HEADER)}")
        for lineno, row in enumerate(reader, start=2):
            if not row or all(not cell.strip() for cell in row):
                continue
            if len(row) != len(SESSION_HEADER):
                raise ValueError(
                    f"{path}:{lineno}: expected {len(SESSION_HEADER)} columns, got {len(row)}"
                )
            treatment = row[0].strip()
            try:
                a = float(row[1])
                session_id = int(row[2])
                values = np.array([float(c) for c in row[3:]])
            except ValueError as exc:
                raise ValueError(f"{path}:{lineno}: malformed value ({exc})") from None
            if not np.all(np.isfinite(values)) or not np.isfinite(a):
                raise ValueError(f"{path}:{lineno}: non-finite value")
            try:
                records.append(SessionRecord(treatment, a, session_id, values))
            except ValueError as exc:
                raise ValueError(f"{path}:{lineno}: {exc}") from None
    return records


def save_session_csv(records, path) -> None:
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(SESSION_HEADER)
        for rec in records:
            writer.writerow([rec.treatment, repr(rec.a), rec.session_id]
                            + [repr(float(v)) for v in rec.L])


def records_by_treatment(records) -> dict[str, np.ndarray]:
    """Group records into per-treatment (n_sessions, 10) matrices."""
    grouped: dict[str, list] = {}
    for rec in sorted(records, key=lambda r: (TREATMENTS.index(r.treatment), r.session_id)):
        grouped.setdefault(rec.treatment, []).append(rec.L)
    return {tr: np.vstack(rows) for tr, rows in grouped.items()}


SIMPLEX_ROW_TOL = 1e-6


def save_timeseries_csv(series: TimeSeries, path) -> None:
    """Write a time series; counts (when present) precede the frequencies."""
    with open(path, "w", newline="", encoding="utf-8") as fh:
        if series.counts is not None:
            population = int(round(series.counts[0].sum()))
            fh.write(f"# population={population}\n")
        writer = csv.writer(fh)
        if series.counts is not None:
            writer.writerow(["t"] + [f"n{i}" for i in range(1, 6)] + [f"x{i}" for i in range(1, 6)])
            for t, (cnt, x) in enumerate(zip(series.counts, series.points)):
                writer.writerow([t] + [int(c) for c in cnt] + [repr(float(v)) for v in x])
        else:
            writer.writerow(["t"] + [f"x{i}" for i in range(1, 6)])
            for k, x in enumerate(series.points):
                writer.writerow([repr(k * series.dt)] + [repr(float(v)) for v in x])


def load_timeseries_csv(path) -> TimeSeries:
    """Read a time series, converting counts to frequencies when needed."""
    population = None
    with open(path, newline="", encoding="utf-8") as fh:
        first = fh.readline()
        if first.startswith("#"):
            key, _, value = first[1:].partition("=")
            if key.strip() == "population":
                population = int(value)
            header_line = fh.readline()
        else:
            header_line = first
        header = [h.strip() for h in header_line.strip().split(",")]
        has_counts = "n1" in header
        has_freqs = "x1" in header
        if header[0] != "t" or not (has_counts or has_freqs):
            raise ValueError(f"{path}: expected columns t plus x1..x5 or n1..n5")
        if has_counts and population is None:
            raise ValueError(f"{path}: count columns need a '# population=N' header line")
        idx = {name: k for k, name in enumerate(header)}
        points, counts, ts = [], [], []
        for lineno, line in enumerate(fh, start=3 if population is not None else 2):
            row = line.strip()
            if not row:
                continue
            cells = row.split(",")
            if len(cells) != len(header):
                raise ValueError(f"{path}:{lineno}: expected {len(header)} columns")
            try:
                t = float(cells[idx["t"]])
                if has_freqs:
                    x = np.array([float(cells[idx[f"x{i}"]]) for i in range(1, 6)])
                else:
                    x = np.array([float(cells[idx[f"n{i}"]]) for i in range(1, 6)]) / population
                if has_counts:
                    counts.append([int(float(cells[idx[f"n{i}"]])) for i in range(1, 6)])
            except (ValueError, KeyError) as exc:
                raise ValueError(f"{path}:{lineno}: malformed value ({exc})") from None
            if abs(x.sum() - 1.0) > SIMPLEX_ROW_TOL or np.any(x < -SIMPLEX_ROW_TOL):
                raise ValueError(f"{path}:{lineno}: row is not a strategy distribution (sum {x.sum()!r})")
            if ts and t <= ts[-1]:
                raise ValueError(f"{path}:{lineno}: time column must be strictly increasing")
            ts.append(t)
            points.append(x)
    if not points:
        raise ValueError(f"{path}: no data rows")
    dt = ts[1] - ts[0] if len(ts) > 1 else 1.0
    meta = {"source": str(path)}
    if population is not None:
        meta["population"] = population
    return TimeSeries(
        points=np.array(points),
        dt=dt,
        meta=meta,
        counts=np.array(counts, dtype=int) if counts else None,
    )
