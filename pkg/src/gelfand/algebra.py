"""Commutative unital algebras presented by structure constants.

An algebra of dimension n is given by a complex tensor ``c`` of shape
(n, n, n) encoding the basis products

    b_i * b_j = sum_k c[i, j, k] * b_k

together with the coordinate vector of the multiplicative unit.  Elements
are plain complex128 coordinate vectors of length n; all operations are
pure functions of immutable data.

``validate`` is the only way to build an :class:`Algebra`.  It checks the
axioms (commutativity exactly after a bounded symmetrization, associativity
and the unit law within scaled tolerances) and records the worst residuals
found in a :class:`ValidationCertificate`.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import (
    BadUnit,
    DimensionMismatch,
    NotAssociative,
    NotCommutative,
    ShapeMismatch,
)

#: absolute asymmetry above which a structure tensor is rejected instead of
#: being repaired by symmetrization
SYMMETRY_TOL = 1e-12

#: base factor for the associativity tolerance 1e-9 * (1 + max|c|)^3
ASSOC_BASE = 1e-9

#: base factor for the character certification tolerance 1e-8 * (1 + max|c|)
CHAR_BASE = 1e-8


def _readonly(a: np.ndarray) -> np.ndarray:
    out = np.array(a, dtype=np.complex128, copy=True)
    out.setflags(write=False)
    return out


@dataclass(frozen=True, eq=False)
class ValidationCertificate:
    """Worst residuals observed while validating a structure tensor."""

    asymmetry: float
    assoc_residual: float
    unit_residual: float


@dataclass(frozen=True, eq=False)
class Algebra:
    """A validated finite-dimensional commutative unital algebra over C.

    Do not construct directly; use :func:`validate` (or one of the builder
    helpers such as :func:`polynomial_quotient`).
    """

    structure_constants: np.ndarray
    unit: np.ndarray
    basis_names: tuple[str, ...] | None
    certificate: ValidationCertificate

    @property
    def dim(self) -> int:
        return self.unit.shape[0]

    @property
    def scale(self) -> float:
        """Largest structure-constant magnitude, ‖c‖∞."""
        return float(np.max(np.abs(self.structure_constants))) if self.dim else 0.0

    @property
    def eps_assoc(self) -> float:
        return ASSOC_BASE * (1.0 + self.scale) ** 3

    @property
    def eps_char(self) -> float:
        """Certification tolerance for characters and involutions."""
        return CHAR_BASE * (1.0 + self.scale)

    def __repr__(self) -> str:  # the tensors are noise in tracebacks
        return f"Algebra(dim={self.dim})"

    # -- element plumbing --------------------------------------------------

    def element(self, coeffs) -> np.ndarray:
        """Coerce ``coeffs`` to a complex coordinate vector of length dim."""
        x = np.asarray(coeffs, dtype=np.complex128)
        if x.shape != (self.dim,):
            raise DimensionMismatch(
                f"expected coordinate vector of length {self.dim}, got shape {x.shape}",
                expected=self.dim, got=list(x.shape))
        return x

    def basis_element(self, i: int) -> np.ndarray:
        x = np.zeros(self.dim, dtype=np.complex128)
        x[i] = 1.0
        return x

    # -- operations --------------------------------------------------------

    def multiply(self, x, y) -> np.ndarray:
        """Product of two elements.

        Contracts the symmetrized coefficient pairing with the structure
        tensor, so swapping the arguments returns bitwise-identical output.
        """
        x = self.element(x)
        y = self.element(y)
        pairing = 0.5 * (np.outer(x, y) + np.outer(y, x))
        return np.tensordot(pairing, self.structure_constants, axes=([0, 1], [0, 1]))

    def left_regular(self, x) -> np.ndarray:
        """Matrix of multiplication by ``x``; column j holds coords of x*b_j."""
        x = self.element(x)
        return np.tensordot(x, self.structure_constants, axes=(0, 0)).T

    def power(self, x, m: int) -> np.ndarray:
        """m-th power (m >= 0) via repeated squaring of the regular matrix.

        ``power(x, 0)`` is the unit; for m >= 1 the result is L_x^m applied
        to the unit coordinates.
        """
        x = self.element(x)
        if m < 0:
            raise ValueError("power exponent must be >= 0")
        if m == 0:
            return self.unit.copy()
        lx = np.linalg.matrix_power(self.left_regular(x), m)
        return lx @ self.unit

    def random_elements(self, count: int, rng: np.random.Generator) -> np.ndarray:
        """(count, dim) array of complex standard-normal coordinate vectors."""
        z = rng.standard_normal((count, self.dim)) + 1j * rng.standard_normal((count, self.dim))
        return z / np.sqrt(2.0)


def validate(structure_constants, unit, basis_names=None) -> Algebra:
    """Check the axioms and build an :class:`Algebra`.

    Parameters
    ----------
    structure_constants : array-like, shape (n, n, n)
        Basis products, ``c[i, j, k]`` the k-th coordinate of b_i * b_j.
        Must be symmetric in (i, j) up to absolute asymmetry 1e-12; smaller
        asymmetries are repaired by averaging.
    unit : array-like, shape (n,)
        Coordinates of the multiplicative identity.
    basis_names : sequence of str, optional

    Raises
    ------
    ShapeMismatch, NotCommutative, NotAssociative, BadUnit
    """
    c = np.asarray(structure_constants, dtype=np.complex128)
    u = np.asarray(unit, dtype=np.complex128)
    if c.ndim != 3 or len(set(c.shape)) != 1:
        raise ShapeMismatch(
            f"structure constants must have shape (n, n, n), got {c.shape}",
            got=list(c.shape))
    n = c.shape[0]
    if n < 1:
        raise ShapeMismatch("algebra dimension must be at least 1", got=list(c.shape))
    if u.shape != (n,):
        raise ShapeMismatch(
            f"unit must be a vector of length {n}, got shape {u.shape}",
            expected=n, got=list(u.shape))
    if basis_names is not None:
        basis_names = tuple(str(s) for s in basis_names)
        if len(basis_names) != n:
            raise ShapeMismatch(
                f"expected {n} basis names, got {len(basis_names)}",
                expected=n, got=len(basis_names))
    if not np.all(np.isfinite(c.view(np.float64))) or not np.all(np.isfinite(u.view(np.float64))):
        raise ShapeMismatch("structure data contains non-finite entries")

    # commutativity: exact after bounded symmetrization
    diff = np.abs(c - c.transpose(1, 0, 2))
    asym = float(diff.max()) if n else 0.0
    if asym > SYMMETRY_TOL:
        i, j, k = np.unravel_index(int(np.argmax(diff)), diff.shape)
        raise NotCommutative(
            f"c[{i}][{j}][{k}] and c[{j}][{i}][{k}] differ by {asym:.3e} "
            f"(limit {SYMMETRY_TOL:.0e})",
            index=[int(i), int(j), int(k)], asymmetry=asym, limit=SYMMETRY_TOL)
    c = 0.5 * (c + c.transpose(1, 0, 2))

    scale = float(np.max(np.abs(c)))
    eps_assoc = ASSOC_BASE * (1.0 + scale) ** 3

    # associativity: coords((b_i b_j) b_l) == coords(b_i (b_j b_l))
    left = np.einsum("ijk,klm->ijlm", c, c)
    right = np.einsum("jlk,ikm->ijlm", c, c)
    adiff = np.abs(left - right)
    assoc_res = float(adiff.max())
    if assoc_res > eps_assoc:
        i, j, l, _ = np.unravel_index(int(np.argmax(adiff)), adiff.shape)
        raise NotAssociative(
            f"(b{i}·b{j})·b{l} and b{i}·(b{j}·b{l}) differ by {assoc_res:.3e} "
            f"(tolerance {eps_assoc:.3e})",
            triple=[int(i), int(j), int(l)], residual=assoc_res, tolerance=eps_assoc)

    # unit law: row j of sum_i u_i c[i, j, :] must be e_j
    if float(np.linalg.norm(u)) == 0.0:
        raise BadUnit("unit vector is zero")
    action = np.tensordot(u, c, axes=(0, 0))
    udiff = np.abs(action - np.eye(n))
    unit_res = float(udiff.max())
    if unit_res > eps_assoc:
        j, _ = np.unravel_index(int(np.argmax(udiff)), udiff.shape)
        raise BadUnit(
            f"unit acts on b{j} with residual {unit_res:.3e} (tolerance {eps_assoc:.3e})",
            basis_index=int(j), residual=unit_res, tolerance=eps_assoc)

    cert = ValidationCertificate(asymmetry=asym, assoc_residual=assoc_res,
                                 unit_residual=unit_res)
    return Algebra(structure_constants=_readonly(c), unit=_readonly(u),
                   basis_names=basis_names, certificate=cert)


def polynomial_quotient(lower_coeffs, var: str = "t") -> Algebra:
    """The quotient C[t]/(p) in the monomial basis {1, t, ..., t^(deg-1)}.

    ``lower_coeffs`` are the non-leading coefficients of the monic polynomial
    p(t) = t^n + a_{n-1} t^{n-1} + ... + a_0, listed as [a_0, ..., a_{n-1}].
    For example ``[0, 0]`` gives the dual numbers C[t]/(t^2) and ``[-1, 0]``
    gives C[t]/(t^2 - 1).
    """
    a = np.asarray(lower_coeffs, dtype=np.complex128)
    if a.ndim != 1 or a.shape[0] < 1:
        raise ShapeMismatch("need at least one non-leading coefficient", got=list(a.shape))
    n = a.shape[0]
    # coords of t^m for m = 0 .. 2n-2, reducing by t^n = -sum a_j t^j
    powers = [np.zeros(n, dtype=np.complex128) for _ in range(2 * n - 1)]
    for m in range(min(n, 2 * n - 1)):
        powers[m][m] = 1.0
    for m in range(n, 2 * n - 1):
        prev = powers[m - 1]
        shifted = np.zeros(n, dtype=np.complex128)
        shifted[1:] = prev[:-1]
        powers[m] = shifted + prev[n - 1] * (-a)
    c = np.zeros((n, n, n), dtype=np.complex128)
    for i in range(n):
        for j in range(n):
            c[i, j] = powers[i + j]
    unit = np.zeros(n, dtype=np.complex128)
    unit[0] = 1.0
    names = ["1"] + [var if m == 1 else f"{var}^{m}" for m in range(1, n)]
    return validate(c, unit, names)


def dual_numbers() -> Algebra:
    """C[t]/(t^2): the unit and one nilpotent generator."""
    return polynomial_quotient([0.0, 0.0])
