import itertools
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, strategies as st

from eigencycle import (
    EQUILIBRIUM,
    GameSpec,
    jacobian_at_equilibrium,
    opposed_matrix,
    payoff_matrix,
    replicator_velocity,
    validate_simplex_point,
)


def exact_velocity(a_str: str, x_strs) -> list[float]:
    """Independent oracle: replicator velocity in exact rational arithmetic."""
    a = Fraction(a_str)
    row = [Fraction(0), a, Fraction(1), Fraction(-1), -a]
    A = [[row[(j - i) % 5] for j in range(5)] for i in range(5)]
    x = [Fraction(s) for s in x_strs]
    u = [sum(A[i][j] * x[j] for j in range(5)) for i in range(5)]
    ubar = sum(x[i] * u[i] for i in range(5))
    return [float(x[i] * (u[i] - ubar)) for i in range(5)]


class TestPayoffMatrix:
    def test_golden_ratio_row(self):
        A = payoff_matrix(GameSpec(1.618))
        assert A[0].tolist() == [0.0, 1.618, 1.0, -1.0, -1.618]
        assert A[1, 0] == -1.618

    def test_zero_parameter_entries(self):
        A = payoff_matrix(GameSpec(0.0))
        assert set(np.unique(A)) == {-1.0, 0.0, 1.0}
        assert np.array_equal(A, -A.T)

    def test_negative_parameter(self):
        A = payoff_matrix(GameSpec(-4.236))
        assert A[0, 1] == -4.236
        assert A[0, 4] == 4.236

    def test_circulant_shift(self):
        A = payoff_matrix(GameSpec(2.5))
        for k in range(1, 5):
            assert np.array_equal(A[k], np.roll(A[k - 1], 1))

    @given(st.floats(min_value=-5, max_value=5, allow_nan=False))
    def test_antisymmetric_zero_diagonal(self, a):
        A = payoff_matrix(GameSpec(a))
        assert np.array_equal(A, -A.T)
        assert np.all(np.diag(A) == 0)

    def test_rejects_non_finite(self):
        with pytest.raises(ValueError):
            GameSpec(float("nan"))


class TestReplicatorVelocity:
    def test_equilibrium_is_rest_point(self):
        for a in (-4.236, 0.0, 1.618):
            v = replicator_velocity(GameSpec(a), EQUILIBRIUM)
            assert np.abs(v).max() < 1e-15

    def test_vertices_are_rest_points(self):
        for i in range(5):
            x = np.zeros(5)
            x[i] = 1.0
            v = replicator_velocity(GameSpec(1.618), x)
            assert np.abs(v).max() < 1e-15

    def test_against_exact_rational_oracle(self):
        got = replicator_velocity(GameSpec(1.618), [0.3, 0.2, 0.2, 0.2, 0.1])
        expected = exact_velocity("1.618", ["0.3", "0.2", "0.2", "0.2", "0.1"])
        assert expected == [0.04854, -0.01236, -0.04, -0.01236, 0.01618]
        np.testing.assert_allclose(got, expected, atol=1e-15)

    @given(
        st.floats(min_value=-5, max_value=5, allow_nan=False),
        st.lists(st.floats(min_value=0.01, max_value=1.0), min_size=5, max_size=5),
    )
    def test_components_sum_to_zero(self, a, raw):
        x = np.array(raw) / np.sum(raw)
        v = replicator_velocity(GameSpec(a), x)
        assert abs(v.sum()) < 1e-12

    def test_rejects_off_simplex_point(self):
        with pytest.raises(ValueError):
            replicator_velocity(GameSpec(1.0), [0.3, 0.3, 0.3, 0.3, 0.3])
        with pytest.raises(ValueError):
            validate_simplex_point([0.5, 0.6, -0.3, 0.1, 0.1])


class TestJacobian:
    def test_is_payoff_over_five(self):
        spec = GameSpec(-4.236)
        J = jacobian_at_equilibrium(spec)
        assert J[0, 1] == pytest.approx(-0.8472)
        np.testing.assert_array_equal(J, payoff_matrix(spec) / 5.0)

    def test_trace_and_antisymmetry(self):
        J = jacobian_at_equilibrium(GameSpec(3.3))
        assert np.trace(J) == 0.0
        assert np.array_equal(J, -J.T)

    def test_single_entry(self):
        assert jacobian_at_equilibrium(GameSpec(0.236))[1, 2] == pytest.approx(0.0472)

    @pytest.mark.parametrize("a", [-4.236, -0.618, 0.236, 1.618, 4.236])
    def test_matches_central_difference(self, a):
        spec = GameSpec(a)
        J = jacobian_at_equilibrium(spec)
        h = 1e-6
        num = np.empty((5, 5))
        for j in range(5):
            # drop off the simplex briefly for the difference quotient
            e = np.zeros(5)
            e[j] = 1.0
            up = EQUILIBRIUM + h * e
            down = EQUILIBRIUM - h * e
            A = payoff_matrix(spec)
            f = lambda x: x * (A @ x - x @ A @ x)
            num[:, j] = (f(up) - f(down)) / (2 * h)
        np.testing.assert_allclose(J, num, atol=1e-6)


class TestOpposedMatrix:
    def test_printed_row(self):
        Ad = opposed_matrix(GameSpec(1.0))
        assert Ad[0].tolist() == [0.0, -1.0, -1.0, 1.0, 1.0]
        assert Ad[0, 3] == 1.0

    def test_zero_parameter_is_sign_flip(self):
        assert np.array_equal(opposed_matrix(GameSpec(0.0)), -payoff_matrix(GameSpec(0.0)))

    def test_not_a_relabeling_of_negated_parameter(self):
        # brute force over all 120 strategy permutations
        Ad = opposed_matrix(GameSpec(4.236))
        A_neg = payoff_matrix(GameSpec(-4.236))
        eye = np.eye(5)
        for perm in itertools.permutations(range(5)):
            P = eye[list(perm)]
            assert not np.allclose(P @ A_neg @ P.T, Ad)
