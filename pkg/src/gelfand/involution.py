"""Conjugate-linear involutions and self-adjoint structure.

An involution is stored as its action matrix S on basis coordinates:
star(x) = S @ conj(x).  Keeping the conjugation outside the matrix makes
conjugate-linearity structural, so only three laws need certification:
applying star twice is the identity, star respects products, and the
unit is fixed.  Certification happens at construction and uncertified
matrices never become Involution values.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .algebra import Algebra, _readonly
from .errors import CertificationFailed, PropertyViolated, ShapeMismatch
from .spectrum import (
    Character,
    CharacterSpace,
    character_residual,
    radical,
    separation_threshold,
)


@dataclass(frozen=True, eq=False)
class Involution:
    """A certified conjugate-linear algebra involution."""

    algebra: Algebra
    action: np.ndarray

    def star(self, x) -> np.ndarray:
        """Apply the involution: S @ conj(x).

        Conjugate-linearity star(c x) = conj(c) star(x) is exact, not
        approximate, because conjugation of an IEEE complex product only
        flips signs.
        """
        x = self.algebra.element(x)
        return self.action @ np.conj(x)

    def __repr__(self) -> str:
        return f"Involution(dim={self.algebra.dim})"


def involution(algebra: Algebra, action) -> Involution:
    """Certify an action matrix and wrap it as an Involution.

    Checks, each within the algebra's character tolerance:

    * S @ conj(S) = I  (star is an involution);
    * star(b_i b_j) = star(b_i) star(b_j) on all basis pairs;
    * star(e) = e.

    Raises :class:`PropertyViolated` naming the first law that fails.
    """
    s = np.asarray(action, dtype=np.complex128)
    n = algebra.dim
    if s.shape != (n, n):
        raise ShapeMismatch(f"action must be {n}x{n}, got {s.shape}",
                            expected=[n, n], got=list(s.shape))
    if not np.all(np.isfinite(s.view(np.float64))):
        raise PropertyViolated("action matrix has non-finite entries")
    tol = algebra.eps_char
    twice = s @ np.conj(s)
    gap = float(np.max(np.abs(twice - np.eye(n))))
    if gap > tol:
        raise PropertyViolated(
            f"star applied twice differs from the identity by {gap:.3e}",
            law="involutive", residual=gap, tolerance=tol)
    c = algebra.structure_constants
    worst = 0.0
    witness = None
    for i in range(n):
        for j in range(i, n):
            lhs = s @ np.conj(c[i, j])
            rhs = algebra.multiply(s[:, i], s[:, j])
            diff = float(np.max(np.abs(lhs - rhs)))
            if diff > worst:
                worst, witness = diff, (i, j)
    if worst > tol:
        raise PropertyViolated(
            f"star(b_i b_j) != star(b_i) star(b_j) on pair {witness} "
            f"(residual {worst:.3e})",
            law="multiplicative", pair=list(witness), residual=worst,
            tolerance=tol)
    unit_gap = float(np.max(np.abs(s @ np.conj(algebra.unit) - algebra.unit)))
    if unit_gap > tol:
        raise PropertyViolated(
            f"star does not fix the unit (residual {unit_gap:.3e})",
            law="unital", residual=unit_gap, tolerance=tol)
    return Involution(algebra=algebra, action=_readonly(s))


def coordinate_conjugation(algebra: Algebra) -> Involution:
    """star(x) = conj(x), valid whenever the structure constants are real."""
    return involution(algebra, np.eye(algebra.dim))


def conjugate_character(inv: Involution, phi: Character) -> tuple[Character, bool]:
    """The character psi(x) = conj(phi(star(x))) and whether psi == phi.

    psi inherits multiplicativity from phi because star respects products
    and conjugation respects complex multiplication; it is still certified
    numerically and :class:`CertificationFailed` signals a broken input.
    The flag compares psi to phi at the character separation threshold,
    since the two are either identical or a full gap apart.
    """
    algebra = inv.algebra
    values = np.conj(inv.action.T @ phi.values)
    residual = character_residual(algebra, values)
    if residual > algebra.eps_char:
        raise CertificationFailed(
            f"conjugate candidate has residual {residual:.3e} "
            f"(tolerance {algebra.eps_char:.3e})",
            residual=residual, tolerance=algebra.eps_char)
    psi = Character(values=_readonly(values), residual=residual)
    delta = separation_threshold((phi.values, values))
    equal = float(np.max(np.abs(values - phi.values))) < delta
    return psi, equal


def selfadjoint_parts(inv: Involution, x) -> tuple[np.ndarray, np.ndarray]:
    """Split x = x1 + i x2 with both parts fixed by star.

    x1 = (x + star(x)) / 2 and x2 = (x - star(x)) / 2i; the recombination
    x1 + i x2 returns x to machine precision.
    """
    x = inv.algebra.element(x)
    sx = inv.star(x)
    x1 = (x + sx) / 2.0
    x2 = (x - sx) / 2.0j
    return x1, x2


@dataclass(frozen=True, eq=False)
class SpanCheckReport:
    """Result of checking that radical vectors split inside the radical."""

    passed: bool
    radical_dim: int
    checked: int
    worst_residual: float


def radical_selfadjoint_span_check(inv: Involution,
                                   space: CharacterSpace) -> SpanCheckReport:
    """Verify the radical is spanned by self-adjoint elements.

    Splits each radical basis vector into self-adjoint parts and checks
    that both parts still vanish under every character.  The pieces
    x1, x2 are star-fixed by construction, so this shows the radical is
    the complex span of the self-adjoint elements it contains.
    """
    algebra = inv.algebra
    rad = radical(algebra, space)
    tol = algebra.eps_char
    worst = 0.0
    checked = 0
    for col in range(rad.dim):
        x1, x2 = selfadjoint_parts(inv, rad.basis[:, col])
        for part in (x1, x2):
            checked += 1
            if len(space) == 0:
                continue
            resid = float(np.max(np.abs(space.transform(part))))
            worst = max(worst, resid)
            if resid > tol:
                raise PropertyViolated(
                    f"self-adjoint part of radical vector {col} leaks out of "
                    f"the radical (transform residual {resid:.3e})",
                    column=col, residual=resid, tolerance=tol)
    return SpanCheckReport(passed=True, radical_dim=rad.dim,
                           checked=checked, worst_residual=worst)
