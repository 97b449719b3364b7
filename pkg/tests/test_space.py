import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from core.fem import FemFunction, build_space, build_uniform, evaluate, from_nodes, interpolate


@pytest.mark.parametrize("degree, n", [(1, 1), (1, 10), (2, 5), (3, 7)])
def test_dof_counts(degree, n):
    space = build_space(build_uniform(0.0, 1.0, n), degree)
    assert space.n_dofs_total == n * degree + 1
    assert space.n_dofs_free == n * degree - 1
    assert space.dof_coords.shape == (space.n_dofs_total,)
    assert space.dof_coords[0] == 0.0
    assert space.dof_coords[-1] == 1.0


def test_dof_coordinates_are_equispaced_within_elements():
    space = build_space(build_uniform(0.0, 1.0, 2), 2)
    np.testing.assert_allclose(space.dof_coords, [0.0, 0.25, 0.5, 0.75, 1.0])
    np.testing.assert_allclose(space.free_dof_coords, [0.25, 0.5, 0.75])


def test_element_dofs_share_vertices():
    space = build_space(build_uniform(0.0, 1.0, 3), 2)
    np.testing.assert_array_equal(space.element_dofs, [[0, 1, 2], [2, 3, 4], [4, 5, 6]])
    np.testing.assert_array_equal(space.element_free_dofs, [[-1, 0, 1], [1, 2, 3], [3, 4, -1]])


def test_single_linear_element_has_no_free_dofs():
    space = build_space(build_uniform(0.0, 1.0, 1), 1)
    assert space.n_dofs_free == 0
    fn = space.zero()
    np.testing.assert_array_equal(fn(np.array([0.0, 0.3, 1.0])), 0.0)


def test_boundary_values_are_zero(unit_space, rng):
    fn = FemFunction(unit_space, rng.normal(size=unit_space.n_dofs_free))
    np.testing.assert_array_equal(fn(np.array([0.0, 1.0])), [0.0, 0.0])


def test_nodal_values_equal_coefficients(rng):
    space = build_space(build_uniform(0.0, 1.0, 6), 3)
    fn = FemFunction(space, rng.normal(size=space.n_dofs_free))
    np.testing.assert_allclose(evaluate(fn, space.free_dof_coords), fn.coeffs, atol=1e-14)


@given(x=st.floats(min_value=0.0, max_value=1.0, allow_nan=False))
def test_evaluate_scalar_returns_scalar_shape(x):
    space = build_space(build_uniform(0.0, 1.0, 4), 2)
    fn = interpolate(space, lambda s: np.sin(np.pi * s))
    assert np.shape(fn(x)) == ()


def test_continuity_across_element_boundaries(rng):
    space = build_space(build_uniform(0.0, 1.0, 5), 2)
    fn = FemFunction(space, rng.normal(size=space.n_dofs_free))
    vertices = space.mesh.node_coords[1:-1]
    eps = 1e-12
    np.testing.assert_allclose(fn(vertices - eps), fn(vertices + eps), atol=1e-9)


@pytest.mark.parametrize("degree", [1, 2, 3])
def test_interpolation_reproduces_polynomials_of_the_basis_degree(degree):
    mesh = from_nodes([0.0, 0.15, 0.4, 0.7, 1.0])
    space = build_space(mesh, degree)

    def poly(x):
        return x * (1.0 - x) * (1.0 + x) ** (degree - 2) if degree > 1 else x * 0.0

    fn = interpolate(space, poly)
    x = np.linspace(0.0, 1.0, 37)
    np.testing.assert_allclose(fn(x), poly(x), atol=1e-14)


def test_derivative_of_piecewise_linear_hat():
    space = build_space(build_uniform(0.0, 1.0, 2), 1)
    hat = FemFunction(space, [1.0])
    np.testing.assert_allclose(hat.derivative(np.array([0.25, 0.75])), [2.0, -2.0])
    assert hat(0.25) == pytest.approx(0.5)


def test_at_quadrature_matches_pointwise_evaluation(rng):
    from core.fem import gauss_rule

    space = build_space(build_uniform(0.0, 1.0, 4), 3)
    fn = FemFunction(space, rng.normal(size=space.n_dofs_free))
    quad = gauss_rule(6)
    values, derivs = fn.at_quadrature(quad)
    x = space.quadrature_points(quad)
    np.testing.assert_allclose(values, fn(x), atol=1e-13)
    np.testing.assert_allclose(derivs, fn.derivative(x), atol=1e-10)


def test_coefficient_length_is_checked(unit_space):
    with pytest.raises(ValueError):
        FemFunction(unit_space, np.zeros(unit_space.n_dofs_free + 1))


def test_scaled_function(unit_space, rng):
    fn = FemFunction(unit_space, rng.normal(size=unit_space.n_dofs_free))
    np.testing.assert_allclose(fn.scaled(-2.0).coeffs, -2.0 * fn.coeffs)


def test_evaluate_outside_domain_raises(unit_space):
    with pytest.raises(ValueError):
        unit_space.zero()(1.01)
