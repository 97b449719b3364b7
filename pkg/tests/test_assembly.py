import numpy as np
import pytest

from core.common import QuadratureError
from core.fem import (
    BandedSymMatrix,
    FemFunction,
    apply,
    assemble_load,
    assemble_M,
    assemble_nonlinear_rhs,
    assemble_stiffness,
    build_space,
    build_uniform,
    from_nodes,
    gauss_rule,
    interpolate,
)
from core.fem.assembly import nonlinear_source


def _ones(x):
    return np.ones_like(x)


def test_linear_stiffness_is_scaled_second_difference():
    n = 8
    space = build_space(build_uniform(0.0, 1.0, n), 1)
    K = assemble_stiffness(space)
    assert K.half_bandwidth == 1
    expected = n * (2 * np.eye(n - 1) - np.eye(n - 1, k=1) - np.eye(n - 1, k=-1))
    np.testing.assert_allclose(K.to_dense(), expected, rtol=1e-14, atol=1e-12)


@pytest.mark.parametrize("degree", [1, 2, 3])
def test_stiffness_is_symmetric_positive_definite_and_banded(degree):
    space = build_space(from_nodes([0.0, 0.1, 0.35, 0.5, 0.9, 1.0]), degree)
    K = assemble_stiffness(space)
    dense = K.to_dense()
    assert K.half_bandwidth == degree
    np.testing.assert_allclose(dense, dense.T)
    assert np.all(np.linalg.eigvalsh(dense) > 0)
    rows, cols = np.nonzero(np.abs(dense) > 0)
    assert np.max(np.abs(rows - cols)) <= degree


def test_stiffness_with_too_few_points_is_rejected():
    space = build_space(build_uniform(0.0, 1.0, 4), 3)
    with pytest.raises(QuadratureError):
        assemble_stiffness(space, quad=gauss_rule(1))


@pytest.mark.parametrize("degree", [2, 3])
def test_stiffness_energy_of_interpolated_quadratic(degree):
    # (w', w') for w = x(1 - x) is 1/3
    space = build_space(build_uniform(0.0, 1.0, 6), degree)
    w = interpolate(space, lambda x: x * (1 - x)).coeffs
    assert w @ apply(assemble_stiffness(space), w) == pytest.approx(1.0 / 3.0, rel=1e-12)


def test_constant_load_vector():
    n = 5
    space = build_space(build_uniform(0.0, 1.0, n), 1)
    load = assemble_load(space, _ones, gauss_rule(8))
    np.testing.assert_allclose(load, -np.full(n - 1, 1.0 / n), rtol=1e-14)


@pytest.mark.parametrize("degree, end_weight", [(1, 1 / 2), (2, 1 / 6), (3, 1 / 8)])
def test_constant_load_sums_to_interior_mass(degree, end_weight):
    # sum of all basis functions is 1; the two eliminated end functions integrate to end_weight * h
    n = 4
    space = build_space(build_uniform(0.0, 1.0, n), degree)
    load = assemble_load(space, _ones, gauss_rule(8))
    assert load.sum() == pytest.approx(-(1.0 - 2 * end_weight / n), rel=1e-13)


def test_nonlinear_source_is_odd_and_finite_at_zero():
    v = np.array([-2.0, -0.5, 0.0, 0.5, 2.0])
    out = nonlinear_source(v, 1.5)
    np.testing.assert_allclose(out, [-np.sqrt(2), -np.sqrt(0.5), 0.0, np.sqrt(0.5), np.sqrt(2)])
    np.testing.assert_allclose(nonlinear_source(v, 3.0), np.sign(v) * v**2)


def test_nonlinear_rhs_with_q_two_equals_mass_times_coefficients():
    space = build_space(build_uniform(0.0, 1.0, 6), 2)
    v_h = interpolate(space, lambda x: np.sin(np.pi * x))
    quad = gauss_rule(8)
    rhs = assemble_nonlinear_rhs(space, v_h, 2.0, quad)
    M = assemble_M(space, v_h, 2.0, quad)
    np.testing.assert_allclose(rhs, -apply(M, v_h.coeffs), atol=1e-14)


def test_weighted_mass_with_q_two_is_linear_mass_matrix():
    n = 4
    h = 1.0 / n
    space = build_space(build_uniform(0.0, 1.0, n), 1)
    M = assemble_M(space, space.zero(), 2.0, gauss_rule(8))
    np.testing.assert_allclose(M.diagonal, np.full(n - 1, 4 * h / 6), rtol=1e-14)
    np.testing.assert_allclose(M.band[1, : n - 2], np.full(n - 2, h / 6), rtol=1e-14)


def test_weighted_mass_identity_with_nonlinear_rhs(rng):
    # M(v) v = sign(v)|v|^(q-1) projected, i.e. (M(v) v)_j = -b_j
    space = build_space(build_uniform(0.0, 1.0, 7), 1)
    v_h = FemFunction(space, rng.uniform(0.5, 1.5, size=space.n_dofs_free))
    quad = gauss_rule(8)
    for q in (1.5, 3.0):
        M = assemble_M(space, v_h, q, quad)
        values, _ = v_h.at_quadrature(quad)
        assert np.all(np.abs(values[1:-1]) > 0)
        np.testing.assert_allclose(
            apply(M, v_h.coeffs), -assemble_nonlinear_rhs(space, v_h, q, quad), rtol=1e-12, atol=1e-15
        )


def test_weighted_mass_is_clamped_for_small_q():
    space = build_space(build_uniform(0.0, 1.0, 3), 1)
    M = assemble_M(space, space.zero(), 1.5, gauss_rule(8), clamp=1e-12)
    assert np.all(np.isfinite(M.band))
    assert np.all(M.diagonal > 0)


def test_weighted_mass_vanishes_for_zero_field_when_q_exceeds_two():
    space = build_space(build_uniform(0.0, 1.0, 3), 1)
    M = assemble_M(space, space.zero(), 3.0, gauss_rule(8))
    np.testing.assert_array_equal(M.band, 0.0)


def test_function_from_other_space_is_rejected():
    space = build_space(build_uniform(0.0, 1.0, 4), 1)
    other = build_space(build_uniform(0.0, 1.0, 5), 1)
    with pytest.raises(ValueError):
        assemble_nonlinear_rhs(space, other.zero(), 2.0, gauss_rule(8))


def test_equal_space_built_twice_is_accepted():
    space = build_space(build_uniform(0.0, 1.0, 4), 2)
    twin = build_space(build_uniform(0.0, 1.0, 4), 2)
    rhs = assemble_nonlinear_rhs(space, twin.zero(), 2.0, gauss_rule(8))
    np.testing.assert_array_equal(rhs, 0.0)


@pytest.mark.parametrize("degree", [1, 2, 3])
def test_assembly_order_does_not_change_the_result(degree, rng):
    space = build_space(build_uniform(0.0, 1.0, 9), degree)
    order = rng.permutation(space.mesh.n_elements)
    quad = gauss_rule(8)
    v_h = interpolate(space, lambda x: np.sin(3 * x) * x * (1 - x))

    np.testing.assert_array_equal(
        assemble_stiffness(space).band, assemble_stiffness(space, element_order=order).band
    )
    np.testing.assert_array_equal(
        assemble_load(space, np.cos, quad), assemble_load(space, np.cos, quad, element_order=order)
    )
    np.testing.assert_array_equal(
        assemble_nonlinear_rhs(space, v_h, 1.5, quad),
        assemble_nonlinear_rhs(space, v_h, 1.5, quad, element_order=order),
    )


def test_element_order_must_be_a_permutation():
    space = build_space(build_uniform(0.0, 1.0, 3), 1)
    with pytest.raises(ValueError):
        assemble_stiffness(space, element_order=[0, 0, 1])


def test_banded_matrix_roundtrip_and_product(rng):
    dense = np.diag(rng.uniform(3, 4, 6)) + np.diag(np.full(5, 0.5), 1) + np.diag(np.full(5, 0.5), -1)
    K = BandedSymMatrix.from_dense(dense, 1)
    np.testing.assert_allclose(K.to_dense(), dense)
    x = rng.normal(size=6)
    np.testing.assert_allclose(K @ x, dense @ x)
    assert K.norm_inf() == pytest.approx(np.max(np.abs(dense).sum(axis=1)))
    with pytest.raises(ValueError):
        apply(K, np.zeros(5))
