"""The centroid Cent(L): maps commuting with every adjoint operator.

For a general algebra a centrum map must commute with all left and right
multiplications.  In a Lie algebra right multiplication by ``x`` is ``-ad_x``,
so the single family ``mu ad_x = ad_x mu`` already characterises Cent(L).
"""
from __future__ import annotations

import enum
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

import numpy as np

from .liealg import LieAlgebra, ad_matrices, apply_to_table, bracket_table, is_ideal
from .linalg import Subspace, array_equal, exact, identity, inverse, is_zero, nullspace, rank, solve, zeros
from .scalars import QuadScalar, field_sqrt, rational_sqrt, squarefree_part, to_field

log = logging.getLogger(__name__)


@dataclass(eq=False)
class CentroidBasis:
    elements: List[np.ndarray]
    algebra: LieAlgebra
    oversized: bool = False

    @property
    def dim(self) -> int:
        return len(self.elements)

    def coordinates(self, M) -> Optional[np.ndarray]:
        """Coefficients of ``M`` in this basis, or ``None`` if ``M`` is not in the span."""
        if not self.elements:
            return np.empty(0, dtype=object) if is_zero(M) else None
        A = np.stack([e.reshape(-1) for e in self.elements], axis=1)
        return solve(A, np.asarray(M, dtype=object).reshape(-1))

    def combine(self, coeffs) -> np.ndarray:
        n = self.algebra.dim
        out = zeros((n, n), self.algebra.field)
        for c, e in zip(coeffs, self.elements):
            out = out + c * e
        return out


def centroid_basis(L: LieAlgebra) -> CentroidBasis:
    # cached on the algebra; structure constants are not mutated after construction
    cached = L.__dict__.get("_centroid")
    if cached is not None:
        return cached
    n = L.dim
    # unknown mu flattened row-major; vec(mu A) = (I kron A^T) vec(mu), vec(A mu) = (A kron I) vec(mu)
    I = identity(n, L.field)
    blocks = [np.kron(I, A.T) - np.kron(A, I) for A in ad_matrices(L)]
    basis = nullspace(np.vstack(blocks))
    elements = [row.reshape(n, n) for row in basis]
    oversized = len(elements) > n
    if oversized:
        log.warning("centroid has dimension %d > %d; square-root search will be unreliable", len(elements), n)
    cb = CentroidBasis(elements, L, oversized)
    L.__dict__["_centroid"] = cb
    return cb


def is_centrum(L: LieAlgebra, mu) -> bool:
    """``mu([e_i, e_j]) == [mu e_i, e_j]`` for all basis pairs."""
    mu = np.asarray(mu, dtype=object)
    return array_equal(apply_to_table(mu, L.structure), bracket_table(L, mu, None))


def direct_sum_centrum(L: LieAlgebra, ideals: Sequence[Subspace], weights: Sequence) -> np.ndarray:
    """The map acting as ``weights[k] * id`` on ``ideals[k]``."""
    if len(ideals) != len(weights):
        raise ValueError("need one weight per ideal")
    for k, S in enumerate(ideals):
        if not is_ideal(L, S):
            raise ValueError(f"subspace {k} is not an ideal")
    if sum(S.dim for S in ideals) != L.dim:
        raise ValueError("ideals do not add up to the whole algebra")
    P = np.vstack([S.basis for S in ideals if S.dim]).T
    if rank(P) != L.dim:
        raise ValueError("ideals are not independent")
    D = zeros((L.dim, L.dim), L.field)
    pos = 0
    for S, w in zip(ideals, weights):
        for _ in range(S.dim):
            D[pos, pos] = to_field(w, L.field)
            pos += 1
    mu = P @ D @ inverse(P)
    assert is_centrum(L, mu)
    return mu


class SqrtVerdict(str, enum.Enum):
    FOUND = "FOUND"
    EXTENSION = "EXTENSION"
    NONE = "NONE"
    UNDECIDED = "UNDECIDED"


@dataclass(eq=False)
class SqrtResult:
    verdict: SqrtVerdict
    mu: Optional[np.ndarray] = None
    d: Optional[int] = None
    note: str = ""


def _is_scalar_map(M) -> bool:
    return array_equal(M, M[0, 0] * identity(M.shape[0]))


def _negative(v) -> bool:
    if isinstance(v, QuadScalar):
        return v.a < 0 or (v.a == 0 and v.b < 0)
    return v < 0


def centroid_generator(cb: CentroidBasis) -> Tuple[np.ndarray, object, object]:
    """For a 2-dimensional centroid: ``(t, e, f)`` with ``t*t = e*id + f*t``."""
    if cb.dim != 2:
        raise ValueError("centroid is not 2-dimensional")
    L = cb.algebra
    I = identity(L.dim, L.field)
    t = next(el for el in cb.elements if not _is_scalar_map(el))
    # sign convention: the first nonzero coordinate of t(e_1), t(e_2), ... is positive
    lead = next(v for v in t.T.flat if v != 0)
    if _negative(lead):
        t = -t
    A = np.stack([I.reshape(-1), t.reshape(-1)], axis=1)
    ef = solve(A, (t @ t).reshape(-1))
    assert ef is not None, "centroid is not closed under composition"
    return t, ef[0], ef[1]


def _scalar_root(lam, field: Optional[int]):
    """(root, d) with root in the base field (d None), in Q(sqrt d), or (None, None)."""
    s = field_sqrt(lam, field) if field is not None else rational_sqrt(lam)
    if s is not None:
        return s, None
    if field is None:
        d, f = squarefree_part(lam)
        return QuadScalar(0, f, d), d
    return None, None


def _verified(L: LieAlgebra, mu, target) -> bool:
    return array_equal(mu @ mu, target) and is_centrum(L, mu)


def centroid_sqrt(L: LieAlgebra, target, blocks: Optional[Sequence] = None) -> SqrtResult:
    """Solve ``mu @ mu == target`` for ``mu`` in Cent(L).

    Decision procedure: a scalar target is tried first; a 2-dimensional
    centroid ``F[t]/(t^2 - f t - e)`` is solved exactly; a larger centroid is
    handled only through caller-supplied orthogonal idempotents ``blocks``.
    """
    target = exact(target, L.field)
    cb = centroid_basis(L)
    if cb.coordinates(target) is None:
        raise ValueError("target is not in the centroid")
    n = L.dim
    I = identity(n, L.field)

    if _is_scalar_map(target):
        s, d = _scalar_root(target[0, 0], L.field)
        if s is not None and d is None:
            return SqrtResult(SqrtVerdict.FOUND, s * I)
        scalar_ext = (s, d)
    else:
        scalar_ext = (None, None)

    if cb.dim == 2:
        res = _sqrt_rank2(L, cb, target)
        if res.verdict != SqrtVerdict.UNDECIDED or scalar_ext[0] is None:
            return res
    elif cb.dim > 2 and blocks is not None:
        res = _sqrt_blocks(L, target, blocks)
        if res.verdict != SqrtVerdict.UNDECIDED or scalar_ext[0] is None:
            return res

    s, d = scalar_ext
    if s is not None:
        return SqrtResult(SqrtVerdict.EXTENSION, s * exact(I, d), d)
    return SqrtResult(SqrtVerdict.UNDECIDED, note=f"centroid of dimension {cb.dim} not handled")


def _sqrt_rank2(L: LieAlgebra, cb: CentroidBasis, target) -> SqrtResult:
    t, e, f = centroid_generator(cb)
    I = identity(L.dim, L.field)
    pq = solve(np.stack([I.reshape(-1), t.reshape(-1)], axis=1), target.reshape(-1))
    p, q = pq[0], pq[1]

    def build(a, b, d=None):
        if d is None:
            return a * I + b * t
        return a * exact(I, d) + b * exact(t, d)

    # (a + b t)^2 = (a^2 + e b^2) + (2ab + f b^2) t
    # b == 0 branch: a^2 = p, q = 0.  b != 0: u = b^2 solves A u^2 - B u + q^2 = 0
    A = f * f + 4 * e
    B = 2 * q * f + 4 * p
    branches = []
    if q == 0:
        branches.append(("b0", p))
    if A == 0:
        if B != 0:
            branches.append(("u", q * q / B))
    else:
        disc = B * B - 4 * A * q * q
        root = field_sqrt(disc, L.field) if L.field is not None else rational_sqrt(disc)
        if root is not None:
            for sgn in (1, -1):
                branches.append(("u", (B + sgn * root) / (2 * A)))
        else:
            branches.append(("u_irrational", (B, disc, A)))
    if not branches:
        return SqrtResult(SqrtVerdict.NONE, note="no solution over any extension")

    # base field first
    for kind, val in branches:
        if kind == "b0":
            a = field_sqrt(val, L.field) if L.field is not None else rational_sqrt(val)
            if a is not None:
                return SqrtResult(SqrtVerdict.FOUND, build(a, 0 * a))
        elif kind == "u" and val != 0:
            b = field_sqrt(val, L.field) if L.field is not None else rational_sqrt(val)
            if b is not None:
                mu = build((q - f * val) / (2 * b), b)
                assert _verified(L, mu, target)
                return SqrtResult(SqrtVerdict.FOUND, mu)

    if L.field is not None:
        return SqrtResult(SqrtVerdict.UNDECIDED, note="root lies outside the base quadratic field")

    # one quadratic extension of Q
    for kind, val in branches:
        if kind == "b0" and val != 0:
            d, g = squarefree_part(val)
            a = QuadScalar(0, g, d)
            return SqrtResult(SqrtVerdict.EXTENSION, build(a, QuadScalar(0, 0, d), d), d)
        if kind == "u" and val != 0:
            d, g = squarefree_part(val)
            b = QuadScalar(0, g, d)
            a = (q - f * val) / (2 * b)
            return SqrtResult(SqrtVerdict.EXTENSION, build(a, b, d), d)
        if kind == "u_irrational":
            Bv, disc, Av = val
            d, g = squarefree_part(disc)
            for sgn in (1, -1):
                u = (Bv + QuadScalar(0, sgn * g, d)) / (2 * Av)
                b = field_sqrt(u)
                if b is not None and b != 0:
                    a = (q - f * u) / (2 * b)
                    return SqrtResult(SqrtVerdict.EXTENSION, build(a, b, d), d)
    return SqrtResult(SqrtVerdict.UNDECIDED, note="root needs a degree-4 extension")


def _sqrt_blocks(L: LieAlgebra, target, blocks: Sequence) -> SqrtResult:
    n = L.dim
    I = identity(n, L.field)
    blocks = [exact(P, L.field) for P in blocks]
    total = zeros((n, n), L.field)
    for P in blocks:
        if not (array_equal(P @ P, P) and is_centrum(L, P)):
            return SqrtResult(SqrtVerdict.UNDECIDED, note="blocks are not centroid idempotents")
        total = total + P
    if not array_equal(total, I):
        return SqrtResult(SqrtVerdict.UNDECIDED, note="blocks do not sum to the identity")
    roots = []
    for P in blocks:
        TP = target @ P
        k = next((i for i in range(n) if not is_zero(P[:, i])), None)
        if k is None:
            roots.append((Fraction(0), None))
            continue
        col, pc = TP[:, k], P[:, k]
        j = next(i for i in range(n) if pc[i] != 0)
        lam = col[j] / pc[j]
        if not array_equal(TP, lam * P):
            return SqrtResult(SqrtVerdict.UNDECIDED, note="target is not block-scalar")
        roots.append(_scalar_root(lam, L.field))
    if any(r is None for r, _ in roots):
        return SqrtResult(SqrtVerdict.UNDECIDED, note="block root outside the base field")
    ds = {d for _, d in roots if d is not None}
    if not ds:
        mu = sum((r * P for (r, _), P in zip(roots, blocks)), zeros((n, n), L.field))
        return SqrtResult(SqrtVerdict.FOUND, mu)
    if len(ds) > 1:
        return SqrtResult(SqrtVerdict.UNDECIDED, note="blocks need different quadratic extensions")
    d = ds.pop()
    mu = zeros((n, n), d)
    for (r, _), P in zip(roots, blocks):
        mu = mu + to_field(r, d) * exact(P, d)
    return SqrtResult(SqrtVerdict.EXTENSION, mu, d)
