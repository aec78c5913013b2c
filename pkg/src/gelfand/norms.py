"""Submultiplicative norms and the character contraction bound.

Three norm kinds are supported, all certified at construction to be
submultiplicative with ‖e‖ = 1:

* ``regular-operator-norm``: spectral norm of the regular matrix L_x;
* ``sup-on-characters``: max over characters of |phi(x)| (a seminorm
  when the radical is nonzero, accepted as such);
* ``user-weighted-l1``: sum of w_i |x_i| for positive weights satisfying
  the exact certificate w_i w_j >= sum_k |c[i,j,k]| w_k on basis pairs.

Every character contracts: |phi(x)| <= ‖x‖.  ``verify_contraction`` spot
checks that on seeded samples and ``homomorphism_norm`` estimates the
operator norm of the transform, which must come out as 1.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .algebra import Algebra
from .errors import ContractionViolated, InvalidNorm
from .spectrum import DEFAULT_SEED, CharacterSpace, seeded_rng

NORM_REGULAR = "regular-operator-norm"
NORM_SUP = "sup-on-characters"
NORM_WEIGHTED_L1 = "user-weighted-l1"
NORM_KINDS = (NORM_REGULAR, NORM_SUP, NORM_WEIGHTED_L1)

#: slack allowed on |phi(x)| <= ‖x‖ and on homomorphism_norm == 1
CONTRACTION_SLACK = 1e-9

#: tolerance on the ‖e‖ = 1 certificate
UNIT_NORM_TOL = 1e-9


@dataclass(frozen=True, eq=False)
class AlgebraNorm:
    """A certified submultiplicative norm on a fixed algebra."""

    kind: str
    algebra: Algebra
    space: CharacterSpace | None = None
    weights: np.ndarray | None = None

    def of(self, x) -> float:
        x = self.algebra.element(x)
        if self.kind == NORM_REGULAR:
            return float(np.linalg.norm(self.algebra.left_regular(x), 2))
        if self.kind == NORM_SUP:
            return float(np.max(np.abs(self.space.transform(x))))
        return float(self.weights @ np.abs(x))

    def __repr__(self) -> str:
        return f"AlgebraNorm(kind={self.kind!r}, dim={self.algebra.dim})"


def operator_norm(algebra: Algebra) -> AlgebraNorm:
    """Spectral norm of the left regular representation."""
    return AlgebraNorm(kind=NORM_REGULAR, algebra=algebra)


def sup_norm(algebra: Algebra, space: CharacterSpace) -> AlgebraNorm:
    """Sup of |phi(x)| over the certified characters."""
    if space.algebra is not algebra:
        raise InvalidNorm("character space belongs to a different algebra")
    if len(space) == 0:
        raise InvalidNorm("sup norm needs at least one character")
    return AlgebraNorm(kind=NORM_SUP, algebra=algebra, space=space)


def weighted_l1_norm(algebra: Algebra, weights) -> AlgebraNorm:
    """Weighted l1 norm, certified exactly on all basis pairs.

    Raises :class:`InvalidNorm` when some weight is not positive, when
    the submultiplicativity certificate w_i w_j >= sum_k |c[i,j,k]| w_k
    fails on some pair, or when ‖e‖ differs from 1 beyond 1e-9.
    """
    w = np.asarray(weights, dtype=np.float64)
    if w.shape != (algebra.dim,):
        raise InvalidNorm(
            f"expected {algebra.dim} weights, got shape {w.shape}",
            expected=algebra.dim, got=list(w.shape))
    if not np.all(w > 0):
        raise InvalidNorm("weights must be strictly positive",
                          weights=w.tolist())
    absc = np.abs(algebra.structure_constants)
    bound = np.tensordot(absc, w, axes=(2, 0))   # sum_k |c[i,j,k]| w_k
    margin = np.outer(w, w) - bound
    if float(margin.min()) < 0:
        i, j = np.unravel_index(int(np.argmin(margin)), margin.shape)
        raise InvalidNorm(
            f"certificate fails on basis pair ({i}, {j}): "
            f"w_i w_j = {w[i] * w[j]:.6g} < {bound[i, j]:.6g}",
            pair=[int(i), int(j)], lhs=float(w[i] * w[j]), rhs=float(bound[i, j]))
    unit_norm = float(w @ np.abs(algebra.unit))
    if abs(unit_norm - 1.0) > UNIT_NORM_TOL:
        raise InvalidNorm(
            f"‖e‖ = {unit_norm:.12g} but the unital convention requires 1",
            unit_norm=unit_norm, tolerance=UNIT_NORM_TOL)
    w = w.copy()
    w.setflags(write=False)
    return AlgebraNorm(kind=NORM_WEIGHTED_L1, algebra=algebra, weights=w)


def suggest_l1_weights(algebra: Algebra) -> np.ndarray | None:
    """A certificate-valid weight vector, when one is easy to construct.

    Works whenever the unit is supported on a single basis index i0: that
    weight is pinned by ‖e‖ = 1 and the rest are puffed up to the row sums
    of |c|, which provably satisfies the certificate.  Returns None for
    units with mixed support.
    """
    u = algebra.unit
    support = np.flatnonzero(np.abs(u) > 1e-12)
    if len(support) != 1:
        return None
    i0 = int(support[0])
    w0 = 1.0 / float(np.abs(u[i0]))
    absc = np.abs(algebra.structure_constants)
    rest = [i for i in range(algebra.dim) if i != i0]
    lam = 1.0
    for i in rest:
        for j in rest:
            lam = max(lam, float(np.sum(absc[i, j, rest]) + w0 * absc[i, j, i0]))
    lam = max(lam, w0)
    w = np.full(algebra.dim, lam, dtype=np.float64)
    w[i0] = w0
    # the puffing argument needs w0 <= lam; verify the certificate anyway
    bound = np.tensordot(absc, w, axes=(2, 0))
    if float((np.outer(w, w) - bound).min()) < 0:
        return None
    return w


@dataclass(frozen=True, eq=False)
class ContractionReport:
    """Outcome of spot-checking |phi(x)| <= ‖x‖ on seeded samples."""

    kind: str
    samples: int
    seed: int
    worst_ratio: float
    passed: bool


def verify_contraction(algebra: Algebra, norm: AlgebraNorm, space: CharacterSpace,
                       samples: int = 1000, seed: int = DEFAULT_SEED) -> ContractionReport:
    """Check the contraction bound on seeded samples.

    Raises :class:`ContractionViolated` when some sample exceeds
    ‖x‖ (1 + 1e-9); that indicates a bug rather than bad input, since the
    bound is a theorem for certified norms and characters.
    """
    rng = seeded_rng(seed, 2, NORM_KINDS.index(norm.kind))
    xs = algebra.random_elements(samples, rng)
    phi = space.matrix()
    worst = 0.0
    for x in xs:
        nx = norm.of(x)
        if nx <= 1e-12:
            continue
        ratio = float(np.max(np.abs(phi @ x))) / nx
        worst = max(worst, ratio)
    passed = worst <= 1.0 + CONTRACTION_SLACK
    if not passed:
        raise ContractionViolated(
            f"worst |phi(x)| / ‖x‖ = {worst:.12f} exceeds 1 + {CONTRACTION_SLACK:.0e} "
            f"for {norm.kind}",
            worst_ratio=worst, kind=norm.kind, samples=samples, seed=seed)
    return ContractionReport(kind=norm.kind, samples=samples, seed=seed,
                             worst_ratio=worst, passed=passed)


def homomorphism_norm(algebra: Algebra, norm: AlgebraNorm, space: CharacterSpace,
                      samples: int = 1000, seed: int = DEFAULT_SEED) -> float:
    """Operator norm of the Gelfand transform, estimated on samples.

    The sup of max_phi |phi(x)| / ‖x‖ over seeded samples plus the
    deterministic witness x = e.  Contraction caps it at 1 and the witness
    attains 1, so the result must equal 1 to within 1e-9.
    """
    rng = seeded_rng(seed, 3, NORM_KINDS.index(norm.kind))
    xs = algebra.random_elements(samples, rng)
    phi = space.matrix()
    best = 0.0
    for x in xs:
        nx = norm.of(x)
        if nx <= 1e-12:
            continue
        best = max(best, float(np.max(np.abs(phi @ x))) / nx)
    unit_norm = norm.of(algebra.unit)
    if unit_norm > 1e-12:
        best = max(best, float(np.max(np.abs(phi @ algebra.unit))) / unit_norm)
    return best
