"""Structure-constant validation and arithmetic."""

import numpy as np
import pytest
from numpy.testing import assert_allclose

from gelfand import (
    BadUnit,
    DimensionMismatch,
    NotAssociative,
    NotCommutative,
    ShapeMismatch,
    dual_numbers,
    polynomial_quotient,
    validate,
)

from oracles import naive_multiply, naive_power


def parity_algebra():
    """C[t]/(t^2 - 1) written out by hand."""
    c = np.zeros((2, 2, 2), dtype=complex)
    c[0, 0] = [1, 0]
    c[0, 1] = [0, 1]
    c[1, 0] = [0, 1]
    c[1, 1] = [1, 0]
    return validate(c, [1, 0], ["1", "t"])


def test_validate_hand_built_parity_algebra():
    alg = parity_algebra()
    assert alg.dim == 2
    assert alg.certificate.assoc_residual == 0.0
    assert alg.certificate.unit_residual == 0.0
    assert_allclose(alg.left_regular([0, 1]), [[0, 1], [1, 0]])


def test_validate_rejects_asymmetric_tensor():
    c = np.zeros((2, 2, 2), dtype=complex)
    c[0, 0] = [1, 0]
    c[0, 1] = [0, 1]
    c[1, 0] = [0, 0.5]  # differs from c[0, 1]
    c[1, 1] = [1, 0]
    with pytest.raises(NotCommutative) as exc:
        validate(c, [1, 0])
    assert exc.value.details["index"] == [0, 1, 1] or exc.value.details["index"] == [1, 0, 1]


def test_validate_repairs_tiny_asymmetry():
    c = np.zeros((2, 2, 2), dtype=complex)
    c[0, 0] = [1, 0]
    c[0, 1] = [0, 1 + 1e-13]
    c[1, 0] = [0, 1 - 1e-13]
    c[1, 1] = [1, 0]
    alg = validate(c, [1, 0])
    assert alg.certificate.asymmetry <= 1e-12
    sym = alg.structure_constants
    assert np.array_equal(sym, sym.transpose(1, 0, 2))


def test_validate_rejects_nonassociative_tensor():
    # b1*b1 = b2, b1*b2 = 0, b2*b2 = b1 breaks (b1 b1) b2 = b1 (b1 b2)
    c = np.zeros((3, 3, 3), dtype=complex)
    for j in range(3):
        c[0, j, j] = 1.0
        c[j, 0, j] = 1.0
    c[1, 1, 2] = 1.0
    c[2, 2, 1] = 1.0
    with pytest.raises(NotAssociative):
        validate(c, [1, 0, 0])


def test_validate_rejects_wrong_unit():
    c = parity_algebra().structure_constants
    with pytest.raises(BadUnit):
        validate(c, [0, 1])
    with pytest.raises(BadUnit):
        validate(c, [0, 0])


def test_validate_rejects_bad_shapes():
    with pytest.raises(ShapeMismatch):
        validate(np.zeros((2, 2)), [1, 0])
    with pytest.raises(ShapeMismatch):
        validate(np.zeros((2, 2, 3)), [1, 0])
    with pytest.raises(ShapeMismatch):
        validate(np.zeros((2, 2, 2)), [1, 0, 0])
    with pytest.raises(ShapeMismatch):
        c = np.zeros((2, 2, 2))
        c[0, 0, 0] = np.nan
        validate(c, [1, 0])


def test_element_shape_checks():
    alg = dual_numbers()
    with pytest.raises(DimensionMismatch):
        alg.multiply([1, 0, 0], [1, 0])
    with pytest.raises(DimensionMismatch):
        alg.left_regular([1])


def test_dual_number_product():
    alg = dual_numbers()
    a, b, c_, d = 2.0, -1.5, 0.25, 3.0
    prod = alg.multiply([a, b], [c_, d])
    assert_allclose(prod, [a * c_, a * d + b * c_])
    assert_allclose(alg.left_regular([0, 1]), [[0, 0], [1, 0]])


def test_multiply_swap_is_bitwise_exact():
    rng = np.random.default_rng(0x5EED)
    for alg in (dual_numbers(), parity_algebra(), polynomial_quotient([0, 0, 0])):
        xs = alg.random_elements(1000, rng)
        ys = alg.random_elements(1000, rng)
        for x, y in zip(xs, ys):
            left = alg.multiply(x, y)
            right = alg.multiply(y, x)
            assert np.max(np.abs(left - right)) == 0.0


def test_multiply_matches_left_regular_action():
    rng = np.random.default_rng(7)
    alg = polynomial_quotient([1j, 0.5, 0])
    for _ in range(50):
        x = alg.random_elements(1, rng)[0]
        y = alg.random_elements(1, rng)[0]
        assert_allclose(alg.multiply(x, y), alg.left_regular(x) @ y,
                        rtol=0, atol=1e-13 * (1 + alg.scale))


def test_multiply_matches_naive_oracle():
    rng = np.random.default_rng(11)
    alg = polynomial_quotient([-1, 0, 2])
    for _ in range(20):
        x = alg.random_elements(1, rng)[0]
        y = alg.random_elements(1, rng)[0]
        assert_allclose(alg.multiply(x, y),
                        naive_multiply(alg.structure_constants, x, y),
                        rtol=0, atol=1e-13 * (1 + alg.scale))


def test_unit_is_neutral():
    rng = np.random.default_rng(3)
    for alg in (dual_numbers(), parity_algebra(), polynomial_quotient([2, 0, 1])):
        x = alg.random_elements(1, rng)[0]
        assert_allclose(alg.multiply(alg.unit, x), x, rtol=0, atol=1e-14 * (1 + alg.scale))
        assert_allclose(alg.left_regular(alg.unit), np.eye(alg.dim),
                        rtol=0, atol=alg.eps_assoc)


def test_associativity_on_samples():
    rng = np.random.default_rng(0x5EED)
    alg = polynomial_quotient([0.3 - 0.1j, 0, 0.25])
    xs = alg.random_elements(1000, rng)
    ys = alg.random_elements(1000, rng)
    zs = alg.random_elements(1000, rng)
    for x, y, z in zip(xs, ys, zs):
        lhs = alg.multiply(alg.multiply(x, y), z)
        rhs = alg.multiply(x, alg.multiply(y, z))
        scale = (1 + np.linalg.norm(x)) * (1 + np.linalg.norm(y)) * (1 + np.linalg.norm(z))
        assert np.max(np.abs(lhs - rhs)) <= alg.eps_assoc * scale


def test_regular_matrices_commute_and_compose():
    rng = np.random.default_rng(5)
    alg = polynomial_quotient([0.5, -1, 0, 0.125])
    for _ in range(25):
        x = alg.random_elements(1, rng)[0]
        y = alg.random_elements(1, rng)[0]
        lx, ly = alg.left_regular(x), alg.left_regular(y)
        assert np.max(np.abs(lx @ ly - ly @ lx)) <= alg.eps_assoc * \
            (1 + np.linalg.norm(x)) * (1 + np.linalg.norm(y))
        assert_allclose(alg.left_regular(alg.multiply(x, y)), lx @ ly,
                        rtol=0, atol=alg.eps_assoc * (1 + np.linalg.norm(x)) * (1 + np.linalg.norm(y)))


def test_power_basics():
    alg = dual_numbers()
    assert_allclose(alg.power([3, 4], 0), [1, 0])
    assert_allclose(alg.power([0, 1], 2), [0, 0], atol=1e-15)
    par = parity_algebra()
    assert_allclose(par.power([0, 1], 2), [1, 0])
    assert_allclose(par.power([0, 1], 7), [0, 1])


def test_power_matches_naive_oracle():
    rng = np.random.default_rng(13)
    alg = polynomial_quotient([0.2, 1j, 0])
    for m in range(7):
        x = alg.random_elements(1, rng)[0] * 0.8
        want = naive_power(alg.structure_constants, alg.unit, x, m)
        assert_allclose(alg.power(x, m), want, rtol=0,
                        atol=1e-12 * (1 + np.linalg.norm(want)))


def test_polynomial_quotient_reduction():
    # t^3 = t + 1 in C[t]/(t^3 - t - 1)
    alg = polynomial_quotient([-1, -1, 0])
    assert_allclose(alg.power([0, 1, 0], 3), [1, 1, 0], atol=1e-15)
    names = alg.basis_names
    assert names == ("1", "t", "t^2")
