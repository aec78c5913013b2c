"""Involution certification, conjugate characters, self-adjoint splitting."""

import numpy as np
import pytest
from numpy.testing import assert_allclose

from gelfand import (
    CertificationFailed,
    PropertyViolated,
    ShapeMismatch,
    characters,
    dual_numbers,
    polynomial_quotient,
    seeded_rng,
    validate,
)
from gelfand.involution import (
    Involution,
    conjugate_character,
    coordinate_conjugation,
    involution,
    radical_selfadjoint_span_check,
    selfadjoint_parts,
)
from gelfand.spectrum import Character


def gaussian_algebra():
    """C[t]/(t^2 + 1), a copy of C x C where t plays the imaginary unit."""
    return polynomial_quotient([1.0, 0.0])


def split_algebra():
    """C x C on the idempotent basis, unit (1, 1)."""
    c = np.zeros((2, 2, 2), dtype=complex)
    c[0, 0, 0] = 1.0
    c[1, 1, 1] = 1.0
    return validate(c, [1, 1], ["p", "q"])


def test_certifies_coordinate_conjugation_on_real_constants():
    for alg in (dual_numbers(), gaussian_algebra(), polynomial_quotient([0, 0, 0])):
        inv = coordinate_conjugation(alg)
        assert isinstance(inv, Involution)
        assert_allclose(inv.action, np.eye(alg.dim))


def test_star_is_plain_conjugation_under_identity_action():
    alg = gaussian_algebra()
    inv = coordinate_conjugation(alg)
    x = np.array([1 + 2j, -3j])
    assert np.array_equal(inv.star(x), np.conj(x))


def test_star_conjugate_linear():
    alg = gaussian_algebra()
    inv = involution(alg, np.diag([1.0, -1.0]))
    lam = 0.3 - 0.7j
    xs = alg.random_elements(50, seeded_rng(5))
    for x in xs:
        scale = 1e-14 * (1.0 + abs(lam) * float(np.max(np.abs(x))))
        assert_allclose(inv.star(lam * x), np.conj(lam) * inv.star(x),
                        rtol=0, atol=scale)


def test_rejects_wrong_shape():
    with pytest.raises(ShapeMismatch):
        involution(dual_numbers(), np.eye(3))


def test_rejects_non_involutive_action():
    with pytest.raises(PropertyViolated) as exc:
        involution(dual_numbers(), np.diag([1.0, 2.0]))
    assert exc.value.details["law"] == "involutive"


def test_rejects_non_multiplicative_action():
    # S = diag(1, i) squares to the identity through conjugation but sends
    # t*t = 1 to 1 while (it)(it) = -1
    with pytest.raises(PropertyViolated) as exc:
        involution(polynomial_quotient([-1.0, 0.0]), np.diag([1.0, 1.0j]))
    assert exc.value.details["law"] == "multiplicative"
    assert exc.value.details["pair"] == [1, 1]


def test_star_involutive_on_seeded_elements():
    alg = gaussian_algebra()
    for action in (np.eye(2), np.diag([1.0, -1.0])):
        inv = involution(alg, action)
        xs = alg.random_elements(1000, seeded_rng(13))
        for x in xs:
            back = inv.star(inv.star(x))
            assert float(np.max(np.abs(back - x))) <= 1e-12 * (1 + np.max(np.abs(x)))


def test_star_multiplicative_on_seeded_pairs():
    alg = split_algebra()
    inv = involution(alg, np.array([[0.0, 1.0], [1.0, 0.0]]))
    rng = seeded_rng(17)
    xs = alg.random_elements(300, rng)
    ys = alg.random_elements(300, rng)
    for x, y in zip(xs, ys):
        lhs = inv.star(alg.multiply(x, y))
        rhs = alg.multiply(inv.star(x), inv.star(y))
        assert float(np.max(np.abs(lhs - rhs))) <= alg.eps_char * (1 + np.max(np.abs(lhs)))


def test_conjugate_character_coordinate_conjugation_swaps_pair():
    alg = gaussian_algebra()
    space = characters(alg)
    inv = coordinate_conjugation(alg)
    phi = space[0]          # values (1, -i) in sorted order
    psi, equal = conjugate_character(inv, phi)
    assert not equal
    assert_allclose(psi.values, np.conj(phi.values), atol=1e-12)


def test_conjugate_character_sign_flip_fixes_each():
    alg = gaussian_algebra()
    space = characters(alg)
    inv = involution(alg, np.diag([1.0, -1.0]))
    for phi in space:
        psi, equal = conjugate_character(inv, phi)
        assert equal
        assert_allclose(psi.values, phi.values, atol=1e-12)


def test_conjugate_character_swap_involution_exchanges_projections():
    alg = split_algebra()
    inv = involution(alg, np.array([[0.0, 1.0], [1.0, 0.0]]))
    first = Character(values=np.array([1.0 + 0j, 0j]), residual=0.0)
    psi, equal = conjugate_character(inv, first)
    assert not equal
    assert_allclose(psi.values, [0.0, 1.0], atol=1e-15)


def test_conjugate_character_real_characters_fixed():
    alg = polynomial_quotient([-1.0, 0.0])
    inv = coordinate_conjugation(alg)
    for phi in characters(alg):
        _, equal = conjugate_character(inv, phi)
        assert equal


def test_conjugate_character_is_involutive_on_spectrum():
    alg = gaussian_algebra()
    inv = coordinate_conjugation(alg)
    for phi in characters(alg):
        psi, _ = conjugate_character(inv, phi)
        back, _ = conjugate_character(inv, psi)
        assert float(np.max(np.abs(back.values - phi.values))) < 1e-9


def test_conjugate_character_rejects_bogus_character():
    alg = split_algebra()
    inv = coordinate_conjugation(alg)
    fake = Character(values=np.array([2.0 + 0j, 0j]), residual=0.0)
    with pytest.raises(CertificationFailed):
        conjugate_character(inv, fake)


def test_selfadjoint_parts_frozen_dual_number_cases():
    alg = dual_numbers()
    eps = [0.0, 1.0]
    x1, x2 = selfadjoint_parts(coordinate_conjugation(alg), eps)
    assert_allclose(x1, [0.0, 1.0], atol=1e-15)
    assert_allclose(x2, [0.0, 0.0], atol=1e-15)
    x1, x2 = selfadjoint_parts(involution(alg, np.diag([1.0, -1.0])), eps)
    assert_allclose(x1, [0.0, 0.0], atol=1e-15)
    assert_allclose(x2, [0.0, -1.0j], atol=1e-15)


def test_selfadjoint_parts_reconstruct_and_are_fixed():
    alg = gaussian_algebra()
    inv = involution(alg, np.diag([1.0, -1.0]))
    xs = alg.random_elements(500, seeded_rng(23))
    for x in xs:
        x1, x2 = selfadjoint_parts(inv, x)
        scale = 1e-14 * (1 + float(np.max(np.abs(x))))
        assert_allclose(x1 + 1j * x2, x, rtol=0, atol=scale)
        assert_allclose(inv.star(x1), x1, rtol=0, atol=alg.eps_char)
        assert_allclose(inv.star(x2), x2, rtol=0, atol=alg.eps_char)


def test_selfadjoint_of_selfadjoint_is_identity_component():
    alg = gaussian_algebra()
    inv = coordinate_conjugation(alg)
    y = np.array([2.0, -1.5])        # real coords: star-fixed under conjugation
    x1, x2 = selfadjoint_parts(inv, y)
    assert_allclose(x1, y, atol=1e-15)
    assert_allclose(x2, 0 * y, atol=1e-15)
    x1, x2 = selfadjoint_parts(inv, 1j * y)
    assert_allclose(x1, 0 * y, atol=1e-15)
    assert_allclose(x2, y, atol=1e-15)


def test_radical_span_check_vacuous_without_radical():
    alg = gaussian_algebra()
    rep = radical_selfadjoint_span_check(coordinate_conjugation(alg), characters(alg))
    assert rep.passed and rep.radical_dim == 0 and rep.checked == 0
    assert rep.worst_residual == 0.0


@pytest.mark.parametrize("action", [np.eye(2), np.diag([1.0, -1.0])])
def test_radical_span_check_dual_numbers(action):
    alg = dual_numbers()
    rep = radical_selfadjoint_span_check(involution(alg, action), characters(alg))
    assert rep.passed
    assert rep.radical_dim == 1
    assert rep.checked == 2
    assert rep.worst_residual <= alg.eps_char


def test_radical_span_check_depth_three():
    alg = polynomial_quotient([0.0, 0.0, 0.0])
    rep = radical_selfadjoint_span_check(coordinate_conjugation(alg), characters(alg))
    assert rep.passed and rep.radical_dim == 2 and rep.checked == 4
