"""Characters, the Gelfand transform, and the radical.

A character of a commutative unital algebra is a nonzero multiplicative
linear functional; it is determined by its value vector v with
v_i = phi(b_i).  Such vectors are exactly the common left eigenvectors of
the regular matrices L_{b_i}, rescaled so that phi(e) = 1, which is what
:func:`characters` exploits: eigen-split along a seeded generic element,
refine degenerate eigenspaces with the remaining basis matrices, polish
every candidate against the defining equations, then certify, deduplicate
and sort.  Nothing uncertified is ever returned.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .algebra import Algebra
from .errors import (
    CertificationFailed,
    DimensionMismatch,
    LengthMismatch,
    NotDistinct,
    NotMember,
    PropertyViolated,
)

#: default RNG seed for every sampling loop in the library
DEFAULT_SEED = 0x5EED

#: fresh generic elements tried before characters() gives up
RETRIES = 8

#: base factor of the character-separation threshold 1e-6 * (1 + max|v|)
SEP_BASE = 1e-6

#: base factor of the nilpotency threshold 1e-8 * (1 + ‖x‖)^m
NILP_BASE = 1e-8

_CLUSTER_RTOL = 1e-4    # eigenvalue clustering, relative to 1 + max|lambda|
_COVER_RTOL = 2e-2      # spectrum coverage check, generous for Jordan blocks
_POLISH_ITERS = 150


def seeded_rng(seed: int, *key: int) -> np.random.Generator:
    """Deterministic child generator for a (seed, context-key) pair."""
    return np.random.default_rng(np.random.SeedSequence(entropy=seed, spawn_key=key))


@dataclass(frozen=True, eq=False)
class Character:
    """A certified multiplicative functional, stored as its value vector."""

    values: np.ndarray
    residual: float

    def __call__(self, x) -> complex:
        x = np.asarray(x, dtype=np.complex128)
        if x.shape != self.values.shape:
            raise DimensionMismatch(
                f"expected coordinate vector of length {self.values.shape[0]}, "
                f"got shape {x.shape}",
                expected=self.values.shape[0], got=list(x.shape))
        return complex(self.values @ x)

    def __repr__(self) -> str:
        vals = np.array2string(self.values, precision=4, suppress_small=True)
        return f"Character({vals})"


@dataclass(frozen=True, eq=False)
class CharacterSpace:
    """All characters of an algebra, certified, deduplicated and sorted."""

    algebra: Algebra
    characters: tuple[Character, ...]
    delta_sep: float
    seed: int

    def __post_init__(self):
        m = len(self.characters)
        if m > self.algebra.dim:
            raise PropertyViolated(
                f"{m} characters on a {self.algebra.dim}-dimensional algebra",
                count=m, dim=self.algebra.dim)
        for a in range(m):
            for b in range(a + 1, m):
                gap = float(np.max(np.abs(self.characters[a].values
                                          - self.characters[b].values)))
                if gap < self.delta_sep:
                    raise PropertyViolated(
                        f"characters {a} and {b} are only {gap:.3e} apart "
                        f"(separation threshold {self.delta_sep:.3e})",
                        pair=[a, b], distance=gap, delta_sep=self.delta_sep)

    def __len__(self) -> int:
        return len(self.characters)

    def __iter__(self):
        return iter(self.characters)

    def __getitem__(self, idx) -> Character:
        return self.characters[idx]

    def __repr__(self) -> str:
        return f"CharacterSpace(count={len(self.characters)}, dim={self.algebra.dim})"

    def matrix(self) -> np.ndarray:
        """(count, dim) array whose rows are the value vectors."""
        return np.array([ch.values for ch in self.characters])

    @property
    def worst_residual(self) -> float:
        return max((ch.residual for ch in self.characters), default=0.0)

    def transform(self, x) -> np.ndarray:
        """Gelfand transform of x: the tuple (phi(x)) over all characters."""
        x = self.algebra.element(x)
        return self.matrix() @ x


def gelfand_transform(algebra: Algebra, space: CharacterSpace, x) -> np.ndarray:
    return space.transform(x)


def character_residual(algebra: Algebra, v: np.ndarray) -> float:
    """Worst violation of multiplicativity and unitality for a value vector."""
    mult = np.einsum("ijk,k->ij", algebra.structure_constants, v) - np.outer(v, v)
    unit = abs(complex(v @ algebra.unit) - 1.0)
    return max(float(np.max(np.abs(mult))), unit)


def separation_threshold(vectors) -> float:
    peak = max((float(np.max(np.abs(v))) for v in vectors), default=0.0)
    return SEP_BASE * (1.0 + peak)


def _polish(algebra: Algebra, v: np.ndarray) -> np.ndarray:
    """Gauss-Newton refinement of a candidate value vector.

    Converges quadratically for semisimple directions and linearly along
    radical directions, which is exactly where raw eigenvector extraction
    is limited to ~eps^(1/k) accuracy for k-step nilpotents.
    """
    c = algebra.structure_constants
    u = algebra.unit
    n = algebra.dim
    pairs = [(i, j) for i in range(n) for j in range(i, n)]
    target = 1e-14 * (1.0 + algebra.scale)

    def system(w):
        rows = [c[i, j] @ w - w[i] * w[j] for i, j in pairs]
        rows.append(w @ u - 1.0)
        return np.array(rows)

    best = v.copy()
    best_res = float(np.max(np.abs(system(best))))
    w = v.copy()
    stall = 0
    for _ in range(_POLISH_ITERS):
        f = system(w)
        jac = np.empty((len(pairs) + 1, n), dtype=np.complex128)
        for r, (i, j) in enumerate(pairs):
            jac[r] = c[i, j]
            jac[r, i] -= w[j]
            jac[r, j] -= w[i]
        jac[-1] = u
        step, *_ = np.linalg.lstsq(jac, -f, rcond=None)
        w = w + step
        if not np.all(np.isfinite(w.view(np.float64))):
            break
        res = float(np.max(np.abs(system(w))))
        if res < best_res:
            best, best_res = w.copy(), res
            stall = 0
        else:
            stall += 1
        if best_res <= target or stall >= 4:
            break
    s = complex(best @ u)
    if abs(s) > 1e-12:
        best = best / s
    return best


def _cluster(values: np.ndarray, tol: float):
    """Single-linkage clusters of complex values, as lists of indices."""
    m = len(values)
    parent = list(range(m))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for a in range(m):
        for b in range(a + 1, m):
            if abs(values[a] - values[b]) <= tol:
                ra, rb = find(a), find(b)
                if ra != rb:
                    parent[max(ra, rb)] = min(ra, rb)
    buckets: dict[int, list[int]] = {}
    for a in range(m):
        buckets.setdefault(find(a), []).append(a)
    return [buckets[r] for r in sorted(buckets)]


def _nullspace(mat: np.ndarray, tol: float) -> np.ndarray:
    """Orthonormal basis of the (approximate) null space, never empty."""
    _, sing, vh = np.linalg.svd(mat)
    k = mat.shape[1]
    small = int(np.sum(sing <= tol)) + (k - len(sing))
    if small == 0:
        small = 1  # keep at least the least-significant direction
    return vh[k - small:].conj().T


def _drill(mats: list[np.ndarray], basis: np.ndarray, depth: int, out: list):
    """Recursively intersect eigenspaces of the commuting family ``mats``.

    ``basis`` has orthonormal columns spanning an invariant subspace; each
    level splits it along the eigenvalues of the next matrix and keeps only
    genuine eigenvector directions, which is where characters live.
    """
    k = basis.shape[1]
    if k == 1 or depth == len(mats):
        out.append(basis[:, 0])
        return
    small = basis.conj().T @ mats[depth] @ basis
    eigs = np.linalg.eigvals(small)
    scale = 1.0 + float(np.max(np.abs(eigs)))
    for cluster in _cluster(eigs, _CLUSTER_RTOL * scale):
        center = complex(np.mean(eigs[cluster]))
        radius = max(abs(eigs[i] - center) for i in cluster)
        shifted = small - center * np.eye(k)
        top = float(np.linalg.norm(shifted, 2))
        tol = max(3.0 * radius, 1e-8 * (1.0 + top))
        null = _nullspace(shifted, tol)
        if null.shape[1] == k and len(cluster) < k:
            # the cluster cannot own the whole space; tighten to the
            # cluster size to keep the recursion shrinking
            null = null[:, -len(cluster):]
        sub = basis @ null
        if null.shape[1] == k:
            _drill(mats, sub, depth + 1, out)
        else:
            q, _ = np.linalg.qr(sub)
            _drill(mats, q, depth + 1, out)


def _trace_kernel(algebra: Algebra) -> np.ndarray | None:
    """Orthonormal kernel basis of the trace form tr(L_x L_y), or None.

    The kernel of this bilinear form is exactly the set of elements every
    character kills, and it falls out of one SVD at machine accuracy.  The
    multiplicativity residual, by contrast, is degree-m flat along a
    depth-m nilpotent direction, so polishing alone can leave candidates
    smeared by residual^(1/m) there; projecting onto the annihilator of
    the kernel pins those coordinates down.  Returns None when the form
    has full rank and there is nothing to pin.
    """
    c = algebra.structure_constants
    form = np.einsum("iab,jba->ij", c, c)
    _, sing, vh = np.linalg.svd(form)
    top = float(sing[0]) if len(sing) else 0.0
    keep = int(np.sum(sing > 1e-12 * algebra.dim * (1.0 + top)))
    if keep == algebra.dim:
        return None
    return vh[keep:].conj().T  # (dim, dim - keep), orthonormal columns


def characters(algebra: Algebra, seed: int = DEFAULT_SEED,
               retries: int = RETRIES) -> CharacterSpace:
    """Find and certify every character of the algebra.

    Candidates are common left eigenvectors of the regular matrices,
    located by eigen-splitting along a seeded generic element and refined
    within degenerate eigenspaces using the remaining basis matrices.
    Each candidate is polished, certified against multiplicativity and
    unitality within eps_char, deduplicated at the separation threshold
    and sorted lexicographically by interleaved (Re, Im).

    A retry with a fresh generic element is triggered when the certified
    set fails to cover the spectrum of the generic regular matrix; after
    ``retries`` attempts :class:`CertificationFailed` is raised.
    """
    n = algebra.dim
    c = algebra.structure_constants
    basis_mats = [np.ascontiguousarray(c[i]) for i in range(n)]  # c[i] = L_{b_i}^T
    eps = algebra.eps_char
    kernel = _trace_kernel(algebra)

    worst_uncovered = np.inf
    worst_residual = 0.0
    for attempt in range(retries):
        rng = seeded_rng(seed, 1, attempt)
        g = (rng.standard_normal(n) + 1j * rng.standard_normal(n)) / np.sqrt(2.0)
        generic = np.tensordot(g, c, axes=(0, 0))  # = L_g transposed

        raw: list[np.ndarray] = []
        _drill([generic] + basis_mats, np.eye(n, dtype=np.complex128), 0, raw)

        accepted: list[np.ndarray] = []
        residuals: list[float] = []
        for w in raw:
            s = complex(w @ algebra.unit)
            if abs(s) <= 1e-10:
                continue
            v = _polish(algebra, w / s)
            if kernel is not None:
                v = v - kernel.conj() @ (kernel.T @ v)
                s = complex(v @ algebra.unit)
                if abs(s) <= 1e-10:
                    continue
                v = v / s
            res = character_residual(algebra, v)
            worst_residual = max(worst_residual, res) if res > eps else worst_residual
            if res > eps:
                continue
            gap = SEP_BASE * (1.0 + max(float(np.max(np.abs(v))),
                                        max((float(np.max(np.abs(a))) for a in accepted),
                                            default=0.0)))
            if any(np.max(np.abs(v - a)) < gap for a in accepted):
                continue
            accepted.append(v)
            residuals.append(res)

        # coverage: every eigenvalue of the generic matrix must be realized
        # as phi(g) by some certified character
        spectrum = np.linalg.eigvals(generic)
        cover_tol = _COVER_RTOL * (1.0 + float(np.max(np.abs(spectrum))))
        if accepted:
            vals = np.array([v @ g for v in accepted])
            miss = float(np.max([np.min(np.abs(vals - mu)) for mu in spectrum]))
        else:
            miss = np.inf
        if miss <= cover_tol and len(accepted) <= n:
            order = sorted(range(len(accepted)),
                           key=lambda a: _sort_key(accepted[a], accepted))
            chars = tuple(Character(values=_freeze(accepted[a]),
                                    residual=residuals[a]) for a in order)
            return CharacterSpace(algebra=algebra, characters=chars,
                                  delta_sep=separation_threshold(
                                      [ch.values for ch in chars]),
                                  seed=seed)
        worst_uncovered = min(worst_uncovered, miss)

    raise CertificationFailed(
        f"character search failed after {retries} attempts: spectrum coverage "
        f"gap {worst_uncovered:.3e}, worst rejected residual {worst_residual:.3e} "
        f"(eps_char {eps:.3e})",
        retries=retries, coverage_gap=worst_uncovered,
        worst_residual=worst_residual, eps_char=eps)


def _sort_key(v: np.ndarray, population) -> tuple:
    """Lexicographic key over interleaved (Re, Im), quantized.

    Distinct characters are at least delta_sep apart, so snapping to a
    1e-9-scaled grid keeps the order stable against roundoff-level noise
    in coordinates that are morally equal.
    """
    quantum = 1e-9 * (1.0 + max(float(np.max(np.abs(w))) for w in population))
    flat = np.column_stack([v.real, v.imag]).ravel()
    return tuple(int(round(x / quantum)) for x in flat)


def _freeze(v: np.ndarray) -> np.ndarray:
    out = np.array(v, dtype=np.complex128, copy=True)
    out.setflags(write=False)
    return out


@dataclass(frozen=True, eq=False)
class RadicalSubspace:
    """Orthonormal basis of the joint kernel of all characters."""

    algebra: Algebra
    basis: np.ndarray            # (dim, r), orthonormal columns
    transform_residual: float    # worst |phi(column)|
    power_residual: float        # worst ‖column^dim‖∞

    @property
    def dim(self) -> int:
        return self.basis.shape[1]

    def __repr__(self) -> str:
        return f"RadicalSubspace(dim={self.dim} of {self.algebra.dim})"

    def contains(self, x, tol: float | None = None) -> bool:
        """Membership of x in the span of the radical basis."""
        x = self.algebra.element(x)
        resid = x - self.basis @ (self.basis.conj().T @ x)
        if tol is None:
            tol = 1e-8 * (1.0 + float(np.linalg.norm(x)))
        return float(np.linalg.norm(resid)) <= tol


def radical(algebra: Algebra, space: CharacterSpace) -> RadicalSubspace:
    """Null space of the character matrix, certified nilpotent columnwise."""
    phi = space.matrix()
    n = algebra.dim
    _, sing, vh = np.linalg.svd(phi)
    top = float(sing[0]) if len(sing) else 1.0
    rank = int(np.sum(sing > 1e-9 * (1.0 + top) * n))
    basis = vh[rank:].conj().T  # (n, n - rank), orthonormal
    t_res = 0.0
    p_res = 0.0
    for col in basis.T:
        t_res = max(t_res, float(np.max(np.abs(phi @ col))) if len(phi) else 0.0)
        p_res = max(p_res, float(np.max(np.abs(algebra.power(col, n)))))
    return RadicalSubspace(algebra=algebra, basis=_freeze(basis),
                           transform_residual=t_res, power_residual=p_res)


def nilpotency_threshold(x_norm: float, m: int) -> float:
    return NILP_BASE * (1.0 + x_norm) ** m


def is_nilpotent(algebra: Algebra, x) -> tuple[bool, int | None]:
    """Whether x^dim vanishes; returns (flag, smallest such exponent)."""
    x = algebra.element(x)
    xn = float(np.linalg.norm(x))
    lx = algebra.left_regular(x)
    p = algebra.unit
    for m in range(1, algebra.dim + 1):
        p = lx @ p
        if float(np.max(np.abs(p))) <= nilpotency_threshold(xn, m):
            return True, m
    return False, None


def separating_element(algebra: Algebra, phi: Character, psi: Character) -> np.ndarray:
    """An element y with phi(y) = 1 and psi(y) = 0.

    Takes the basis element with the largest value gap, subtracts psi's
    value and rescales; the result is certified before being returned.
    """
    gap = np.abs(phi.values - psi.values)
    thresh = separation_threshold([phi.values, psi.values])
    if float(np.max(gap)) < thresh:
        raise NotDistinct(
            f"characters agree within {float(np.max(gap)):.3e} on every basis "
            f"element (threshold {thresh:.3e})",
            distance=float(np.max(gap)), threshold=thresh)
    i = int(np.argmax(gap))
    y = (algebra.basis_element(i) - psi.values[i] * algebra.unit) \
        / (phi.values[i] - psi.values[i])
    eps = algebra.eps_char
    r1 = abs(phi(y) - 1.0)
    r0 = abs(psi(y))
    if r1 > eps or r0 > eps:
        raise PropertyViolated(
            f"separating element residuals {r1:.3e}, {r0:.3e} exceed {eps:.3e}",
            phi_residual=r1, psi_residual=r0, tolerance=eps)
    return y


def indicator_element(algebra: Algebra, chars, phi: Character) -> np.ndarray:
    """Product of separating elements: 1 at phi, 0 at every other member."""
    chars = list(chars)
    thresh = separation_threshold([ch.values for ch in chars] + [phi.values])
    for a in range(len(chars)):
        for b in range(a + 1, len(chars)):
            if float(np.max(np.abs(chars[a].values - chars[b].values))) < thresh:
                raise NotDistinct(
                    f"collection members {a} and {b} coincide within {thresh:.3e}",
                    pair=[a, b], threshold=thresh)
    matches = [a for a, ch in enumerate(chars)
               if float(np.max(np.abs(ch.values - phi.values))) < thresh]
    if not matches:
        raise NotMember("phi does not occur in the collection",
                        threshold=thresh)
    z = algebra.unit.copy()
    for a, psi in enumerate(chars):
        if a == matches[0]:
            continue
        z = algebra.multiply(z, separating_element(algebra, phi, psi))
    eps = len(chars) * algebra.eps_char
    worst = max(abs(phi(z) - 1.0),
                max((abs(psi(z)) for a, psi in enumerate(chars)
                     if a != matches[0]), default=0.0))
    if worst > eps:
        raise PropertyViolated(
            f"indicator residual {worst:.3e} exceeds {eps:.3e}",
            residual=worst, tolerance=eps)
    return z


def interpolate(algebra: Algebra, space: CharacterSpace, targets) -> np.ndarray:
    """An element whose Gelfand transform matches the target values.

    ``targets`` lists one complex value per character, in the order of
    ``space.characters``.
    """
    f = np.asarray(targets, dtype=np.complex128)
    if f.shape != (len(space),):
        raise LengthMismatch(
            f"expected {len(space)} target values, got shape {f.shape}",
            expected=len(space), got=list(f.shape))
    w = np.zeros(algebra.dim, dtype=np.complex128)
    for val, phi in zip(f, space):
        if val == 0:
            continue
        w = w + val * indicator_element(algebra, space.characters, phi)
    return w
