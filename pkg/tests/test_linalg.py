import numpy as np
import pytest

from polytrig import linalg
from polytrig.linalg import (LinalgError, SingularMatrixError,
                             characteristic_polynomial, determinant,
                             eigenpairs, solve)


def test_determinant_2x2():
    assert determinant([[1, 2], [3, 4]]) == pytest.approx(-2)


def test_determinant_known_31():
    # the resolvent-style matrix whose determinant drives the cubic sums
    M = np.array([[3, 2, 0], [-1, 0, -3], [0, 3, 2]], dtype=complex)
    assert determinant(M) == pytest.approx(31)


def test_determinant_product_property():
    rng = np.random.default_rng(3)
    for _ in range(10):
        n = int(rng.integers(2, 7))
        A = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
        B = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
        lhs = determinant(A @ B)
        rhs = determinant(A) * determinant(B)
        assert lhs == pytest.approx(rhs, rel=1e-10)


def test_determinant_singular_near_zero():
    M = np.array([[1, 2], [2, 4]], dtype=complex)
    assert abs(determinant(M)) < 1e-14


def test_solve_roundtrip_and_condition():
    rng = np.random.default_rng(5)
    A = rng.normal(size=(4, 4)) + 1j * rng.normal(size=(4, 4))
    b = rng.normal(size=4) + 1j * rng.normal(size=4)
    x, cond = solve(A, b)
    assert np.max(np.abs(A @ x - b)) < 1e-12 * cond
    assert cond >= 1.0


def test_solve_identity_condition_is_one():
    _, cond = solve(np.eye(3), np.ones(3))
    assert cond == pytest.approx(1.0)


def test_singular_matrix_pivot_index():
    M = np.array([[1, 2, 3], [2, 4, 6], [0, 1, 1]], dtype=complex)
    with pytest.raises(SingularMatrixError) as exc:
        solve(M, np.zeros(3))
    assert exc.value.pivot_index == 2


def test_shape_validation():
    with pytest.raises(LinalgError):
        determinant([[1, 2, 3], [4, 5, 6]])
    with pytest.raises(LinalgError):
        solve(np.eye(2), np.zeros(3))
    with pytest.raises(LinalgError):
        determinant([[np.inf, 0], [0, 1]])


def test_characteristic_polynomial_companion():
    # companion matrix of x^3 + x^2 + 1
    C = np.array([[0, 0, -1], [1, 0, 0], [0, 1, -1]], dtype=complex)
    cp = characteristic_polynomial(C)
    assert cp.coeffs == pytest.approx((1, 0, 1, 1))


def test_characteristic_polynomial_diagonal():
    cp = characteristic_polynomial(np.diag([1.0, 2.0, 3.0]))
    assert cp.coeffs == pytest.approx((-6, 11, -6, 1))


def test_eigenpairs_residuals():
    rng = np.random.default_rng(11)
    for _ in range(8):
        n = int(rng.integers(2, 7))
        A = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
        pairs = eigenpairs(A)
        assert len(pairs) == n
        scale = linalg.norm1(A)
        for p in pairs:
            assert p.residual < 1e-8 * (scale + 1)
            assert np.max(np.abs(p.left_vector)) == pytest.approx(1.0)


def test_eigenpairs_sum_matches_trace():
    rng = np.random.default_rng(13)
    A = rng.normal(size=(5, 5)) + 1j * rng.normal(size=(5, 5))
    vals = sum(p.value for p in eigenpairs(A))
    assert vals == pytest.approx(np.trace(A), abs=1e-9)


def test_eigenpairs_scalar_matrix():
    pairs = eigenpairs(2.5j * np.eye(4))
    assert all(p.value == pytest.approx(2.5j) for p in pairs)
    vecs = np.array([p.left_vector for p in pairs])
    assert np.allclose(vecs, np.eye(4))


def test_dimension_cap():
    with pytest.raises(LinalgError):
        eigenpairs(np.eye(linalg.MAX_DIM + 1) + np.ones((linalg.MAX_DIM + 1,) * 2))
