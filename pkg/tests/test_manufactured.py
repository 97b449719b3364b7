import numpy as np
import pytest

from core.common import ConsistencyError
from core.manufactured import (
    ExactPair,
    check_consistency,
    chebyshev_points,
    example1,
    example2,
    get_example,
    oracle_u_from_v,
)
from core.manufactured.exact import IDENTITY_BOUNDARY, IDENTITY_V
from core.manufactured.oracle import DoubleIntegralOracle

X = np.linspace(0.0, 1.0, 101)


def test_chebyshev_points_are_interior_and_sorted():
    x = chebyshev_points(0.0, 1.0, 50)
    assert x.shape == (50,)
    assert np.all((x > 0) & (x < 1))
    assert np.all(np.diff(x) > 0)


@pytest.mark.parametrize("q, p", [(3.0, 1.5), (2.0, 2.0)])
def test_oracle_matches_closed_forms(q, p):
    closed = example1(p)
    oracle = oracle_u_from_v(closed.v, q)
    np.testing.assert_allclose(oracle(X), closed.u(X), atol=1e-14)
    np.testing.assert_allclose(oracle.derivative(X), closed.u_prime(X), atol=1e-14)


def test_oracle_boundary_values():
    oracle = oracle_u_from_v(lambda x: np.sin(np.pi * x), 1.5)
    assert abs(oracle(0.0)) <= 1e-14
    assert abs(oracle(1.0)) <= 1e-14


def test_oracle_solves_constant_second_derivative():
    # u'' = 1, u(0) = u(1) = 0 -> u = x(x - 1)/2
    oracle = DoubleIntegralOracle(lambda s: np.ones_like(s))
    np.testing.assert_allclose(oracle(X), X * (X - 1) / 2, atol=1e-14)
    np.testing.assert_allclose(oracle.derivative(X), X - 0.5, atol=1e-14)


def test_oracle_guards():
    with pytest.raises(ValueError):
        DoubleIntegralOracle(np.sin, n_panels=100)
    oracle = DoubleIntegralOracle(np.sin)
    with pytest.raises(ValueError):
        oracle(1.5)
    with pytest.raises(ValueError):
        oracle_u_from_v(np.sin, 1.0)


def test_example1_closed_forms():
    pair = example1(1.5)
    assert pair.q == pytest.approx(3.0)
    np.testing.assert_allclose(pair.f(X), 1.0)
    np.testing.assert_allclose(pair.v(X), X * (X - 1) / 2)
    np.testing.assert_allclose(pair.u(X), (X - X**4 * (2 * X**2 - 6 * X + 5)) / 240)

    quadratic = example1(2.0)
    np.testing.assert_allclose(quadratic.u(X), (X**4 - 2 * X**3 + X) / 24)
    assert np.all(quadratic.u(X[1:-1]) > 0)


def test_example2_source_for_p_three():
    pair = example2(3.0)
    expected = -5 * X**4 / 6 + 2 * X**2 / 3 - 1 / 18
    np.testing.assert_allclose(pair.f(X), expected, atol=1e-15)
    np.testing.assert_allclose(pair.v(X), -(((X - X**3) / 6) ** 2), atol=1e-18)


def test_example2_solution_does_not_depend_on_p():
    a, b = example2(3.0), example2(25.0)
    np.testing.assert_array_equal(a.u(X), b.u(X))
    np.testing.assert_allclose(a.u(np.array([0.0, 1.0])), 0.0, atol=1e-16)
    assert np.all(a.v(X) <= 0)


def test_example2_rejects_p_below_two():
    with pytest.raises(ValueError):
        example2(1.5)


def test_example2_warns_for_unbounded_source(caplog):
    with caplog.at_level("WARNING"):
        example2(2.5, validate=False)
    assert caplog.records


@pytest.mark.parametrize(
    "pair_factory",
    [
        lambda: example1(1.1, validate=False),
        lambda: example1(1.5, validate=False),
        lambda: example1(2.0, validate=False),
        lambda: example1(3.0, validate=False),
        lambda: example2(2.0, validate=False),
        lambda: example2(3.0, validate=False),
        lambda: example2(4.0, validate=False),
        lambda: example2(5.0, validate=False),
        lambda: example2(10.0, validate=False),
        lambda: example2(25.0, validate=False),
    ],
)
def test_examples_satisfy_strong_form(pair_factory):
    report = check_consistency(pair_factory())
    assert report.passed, report
    assert report.max_defect <= 1e-8
    assert report.boundary_defect <= 1e-14


def test_example2_carries_sign_note():
    report = check_consistency(example2(3.0))
    assert report.notes
    assert "v = -((x - x^3)/6)^(p-1)" in report.notes[0]


def _positive_sign_example2():
    exact = example2(3.0)
    return ExactPair(
        u=exact.u,
        u_prime=exact.u_prime,
        v=lambda x: -exact.v(x),
        v_prime=lambda x: -exact.v_prime(x),
        f=exact.f,
        p=3.0,
        label="example2 positive sign",
    )


def test_positive_sign_variant_fails_first_identity():
    report = check_consistency(_positive_sign_example2())
    assert not report.passed
    assert report.failing_identity == IDENTITY_V
    assert 0.0 < report.worst_location < 1.0

    error = ConsistencyError(report)
    assert IDENTITY_V in str(error)
    assert error.report is report


def test_boundary_violation_is_reported():
    exact = example1(2.0)
    shifted = ExactPair(
        u=lambda x: exact.u(x) + 1e-6,
        u_prime=exact.u_prime,
        v=exact.v,
        v_prime=exact.v_prime,
        f=exact.f,
        p=2.0,
        label="shifted",
    )
    assert check_consistency(shifted).failing_identity == IDENTITY_BOUNDARY


def test_get_example():
    assert get_example(1) is example1
    assert get_example(2) is example2
    with pytest.raises(ValueError):
        get_example(3)
