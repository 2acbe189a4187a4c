import numpy as np
import pytest

from eigencycle import AgentPolicy, GameSpec, integrate_replicator, simulate_session
from eigencycle.fixtures import SESSION_L, TREATMENT_A, pooled_sessions
from eigencycle.io import (
    SessionRecord,
    bundled_sessions_path,
    fixture_records,
    load_session_csv,
    load_timeseries_csv,
    records_by_treatment,
    save_session_csv,
    save_timeseries_csv,
)
from eigencycle.subspaces import pair_index


class TestSessionCSV:
    def test_bundled_file_matches_embedded_fixture(self):
        records = load_session_csv(bundled_sessions_path())
        assert len(records) == 50
        grouped = records_by_treatment(records)
        for tr, matrix in grouped.items():
            np.testing.assert_array_equal(matrix, SESSION_L[tr])

    def test_bundled_first_record(self):
        rec = load_session_csv(bundled_sessions_path())[0]
        assert rec.treatment == "Tr1"
        assert rec.session_id == 1
        assert rec.L[pair_index(1, 2)] == 3.733

    def test_spot_parity_cells(self):
        assert SESSION_L["Tr5"][9][pair_index(4, 5)] == -7.183
        assert SESSION_L["Tr3"][6][pair_index(3, 4)] == 1.061
        assert pooled_sessions().shape == (50, 10)

    def test_round_trip(self, tmp_path):
        path = tmp_path / "sessions.csv"
        save_session_csv(fixture_records(), path)
        again = load_session_csv(path)
        for a, b in zip(fixture_records(), again):
            assert a.treatment == b.treatment
            assert a.session_id == b.session_id
            np.testing.assert_array_equal(a.L, b.L)

    def test_empty_file_is_valid(self, tmp_path):
        path = tmp_path / "empty.csv"
        path.write_text("treatment,a,session,L12,L13,L14,L15,L23,L24,L25,L34,L35,L45\n")
        assert load_session_csv(path) == []

    def test_missing_column_reports_line(self, tmp_path):
        path = tmp_path / "bad.csv"
        path.write_text(
            "treatment,a,session,L12,L13,L14,L15,L23,L24,L25,L34,L35,L45\n"
            "Tr1,-4.236,1,1,2,3,4,5,6,7,8,9\n"
        )
        with pytest.raises(ValueError, match="bad.csv:2"):
            load_session_csv(path)

    def test_unknown_treatment_rejected(self, tmp_path):
        path = tmp_path / "bad.csv"
        path.write_text(
            "treatment,a,session,L12,L13,L14,L15,L23,L24,L25,L34,L35,L45\n"
            "Tr9,-4.236,1,1,2,3,4,5,6,7,8,9,10\n"
        )
        with pytest.raises(ValueError, match="Tr9"):
            load_session_csv(path)

    def test_non_finite_rejected(self, tmp_path):
        path = tmp_path / "bad.csv"
        path.write_text(
            "treatment,a,session,L12,L13,L14,L15,L23,L24,L25,L34,L35,L45\n"
            "Tr1,-4.236,1,nan,2,3,4,5,6,7,8,9,10\n"
        )
        with pytest.raises(ValueError, match="non-finite"):
            load_session_csv(path)

    def test_alias_parameter_accepted(self):
        rec = SessionRecord("Tr3", 0.234, 1, np.arange(10.0) + 1)
        assert rec.treatment == "Tr3"
        with pytest.raises(ValueError):
            SessionRecord("Tr3", 0.5, 1, np.arange(10.0))

    def test_mismatched_parameter_rejected(self):
        with pytest.raises(ValueError):
            SessionRecord("Tr1", TREATMENT_A["Tr2"], 1, np.arange(10.0) + 1)


class TestTimeSeriesCSV:
    def test_simulator_output_round_trips(self, tmp_path):
        series = simulate_session(GameSpec(1.618), AgentPolicy(), rounds=40, seed=6)
        path = tmp_path / "session.csv"
        save_timeseries_csv(series, path)
        again = load_timeseries_csv(path)
        np.testing.assert_array_equal(series.counts, again.counts)
        np.testing.assert_array_equal(series.points, again.points)
        assert again.meta["population"] == 6

    def test_ode_output_round_trips(self, tmp_path):
        series = integrate_replicator(GameSpec(0.236), np.array([0.24, 0.19, 0.19, 0.19, 0.19]),
                                      t_end=1.0, dt=0.1)
        path = tmp_path / "flow.csv"
        save_timeseries_csv(series, path)
        again = load_timeseries_csv(path)
        np.testing.assert_array_equal(series.points, again.points)
        assert again.dt == pytest.approx(0.1)

    def test_counts_convert_to_frequencies(self, tmp_path):
        path = tmp_path / "counts.csv"
        path.write_text(
            "# population=6\n"
            "t,n1,n2,n3,n4,n5\n"
            "0,2,1,1,1,1\n"
            "1,1,2,1,1,1\n"
        )
        series = load_timeseries_csv(path)
        np.testing.assert_allclose(series.points[0], [1 / 3, 1 / 6, 1 / 6, 1 / 6, 1 / 6])

    def test_non_simplex_row_rejected_with_line(self, tmp_path):
        path = tmp_path / "bad.csv"
        path.write_text("t,x1,x2,x3,x4,x5\n0,0.2,0.2,0.2,0.2,0.2\n1,0.2,0.2,0.2,0.2,0.1\n")
        with pytest.raises(ValueError, match="bad.csv:3"):
            load_timeseries_csv(path)

    def test_non_monotone_time_rejected(self, tmp_path):
        path = tmp_path / "bad.csv"
        path.write_text("t,x1,x2,x3,x4,x5\n1,0.2,0.2,0.2,0.2,0.2\n1,0.2,0.2,0.2,0.2,0.2\n")
        with pytest.raises(ValueError, match="increasing"):
            load_timeseries_csv(path)

    def test_counts_without_population_rejected(self, tmp_path):
        path = tmp_path / "bad.csv"
        path.write_text("t,n1,n2,n3,n4,n5\n0,2,1,1,1,1\n")
        with pytest.raises(ValueError, match="population"):
            load_timeseries_csv(path)
