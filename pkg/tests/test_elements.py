import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from core.common import QuadratureError
from core.fem import eval_basis, eval_basis_deriv, gauss_rule, make_basis

degrees = st.integers(min_value=1, max_value=3)
points = st.floats(min_value=0.0, max_value=1.0, allow_nan=False)


@given(degree=degrees, t=points)
def test_partition_of_unity(degree, t):
    basis = make_basis(degree)
    assert eval_basis(basis, t).sum() == pytest.approx(1.0, abs=1e-13)
    assert eval_basis_deriv(basis, t).sum() == pytest.approx(0.0, abs=1e-11)


@pytest.mark.parametrize("degree", [1, 2, 3, 4])
def test_basis_is_kronecker_at_nodes(degree):
    basis = make_basis(degree)
    values = eval_basis(basis, basis.node_positions)
    np.testing.assert_allclose(values, np.eye(degree + 1), atol=1e-14)


def test_linear_basis_values():
    basis = make_basis(1)
    np.testing.assert_allclose(eval_basis(basis, 0.25), [0.75, 0.25])
    np.testing.assert_allclose(eval_basis_deriv(basis, 0.25), [-1.0, 1.0])


def test_basis_output_shape_follows_input():
    basis = make_basis(2)
    assert eval_basis(basis, np.zeros((4, 5))).shape == (4, 5, 3)
    assert eval_basis_deriv(basis, np.zeros(7)).shape == (7, 3)


def test_basis_derivative_matches_finite_difference():
    basis = make_basis(3)
    t = np.linspace(0.05, 0.95, 13)
    step = 1e-6
    fd = (eval_basis(basis, t + step) - eval_basis(basis, t - step)) / (2 * step)
    np.testing.assert_allclose(eval_basis_deriv(basis, t), fd, atol=1e-7)


@pytest.mark.parametrize("degree", [0, -1, 1.5])
def test_make_basis_rejects_bad_degree(degree):
    with pytest.raises(ValueError):
        make_basis(degree)


def test_high_degree_basis_logs_warning(caplog):
    with caplog.at_level("WARNING"):
        make_basis(5)
    assert any("5" in record.getMessage() for record in caplog.records)


@given(m=st.integers(min_value=1, max_value=20), data=st.data())
def test_gauss_rule_is_exact_up_to_degree_2m_minus_1(m, data):
    rule = gauss_rule(m)
    k = data.draw(st.integers(min_value=0, max_value=2 * m - 1))
    assert rule.integrate(lambda t: t**k) == pytest.approx(1.0 / (k + 1), rel=1e-12)


@pytest.mark.parametrize("m", range(1, 21))
def test_gauss_rule_points_and_weights(m):
    rule = gauss_rule(m)
    assert rule.size == m
    assert rule.exact_degree == 2 * m - 1
    assert np.all((rule.points > 0) & (rule.points < 1))
    assert np.all(np.diff(rule.points) > 0)
    assert np.all(rule.weights > 0)
    assert rule.weights.sum() == pytest.approx(1.0, abs=1e-14)


def test_tabulated_rules_match_numpy():
    for m in range(1, 6):
        x, w = np.polynomial.legendre.leggauss(m)
        rule = gauss_rule(m)
        np.testing.assert_allclose(rule.points, (x + 1) / 2, atol=1e-14)
        np.testing.assert_allclose(rule.weights, w / 2, atol=1e-14)


@pytest.mark.parametrize("m", [0, 21, 2.5])
def test_gauss_rule_rejects_unsupported_size(m):
    with pytest.raises(QuadratureError):
        gauss_rule(m)
