"""Exact linear algebra over Q and Q(sqrt d) on numpy object arrays.

Everything here is plain Gauss-Jordan elimination; exact arithmetic needs no
pivoting strategy beyond "first nonzero".  Elimination skips zero entries on
both the pivot row and the target rows, which keeps the large, sparse systems
built by the centroid computation cheap.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

import numpy as np

from .scalars import QuadScalar, to_field


def exact(arr, d: Optional[int] = None) -> np.ndarray:
    """Object array copy of ``arr`` with every entry coerced into the field."""
    a = np.array(arr, dtype=object)
    out = np.empty(a.shape, dtype=object)
    for idx, v in np.ndenumerate(a):
        out[idx] = to_field(v, d)
    return out


def zeros(shape, d: Optional[int] = None) -> np.ndarray:
    zero = Fraction(0) if d is None else QuadScalar(0, 0, d)
    out = np.empty(shape, dtype=object)
    out.fill(zero)
    return out


def identity(n: int, d: Optional[int] = None) -> np.ndarray:
    out = zeros((n, n), d)
    one = Fraction(1) if d is None else QuadScalar(1, 0, d)
    for i in range(n):
        out[i, i] = one
    return out


def is_zero(arr) -> bool:
    return all(v == 0 for v in np.asarray(arr, dtype=object).flat)


def array_equal(a, b) -> bool:
    a = np.asarray(a, dtype=object)
    b = np.asarray(b, dtype=object)
    return a.shape == b.shape and all(x == y for x, y in zip(a.flat, b.flat))


def field_of_array(arr) -> Optional[int]:
    for v in np.asarray(arr, dtype=object).flat:
        if isinstance(v, QuadScalar):
            return v.d
    return None


def rref(mat) -> Tuple[np.ndarray, List[int]]:
    """Reduced row echelon form and pivot columns (input is not modified)."""
    mat = np.asarray(mat, dtype=object)
    rows = [list(r) for r in mat]
    ncols = mat.shape[1]
    pivots: List[int] = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        prow = rows[r]
        inv = Fraction(1) / prow[c]
        nz = [k for k in range(c, ncols) if prow[k] != 0]
        for k in nz:
            prow[k] = prow[k] * inv
        for i in range(len(rows)):
            if i == r:
                continue
            f = rows[i][c]
            if f == 0:
                continue
            row = rows[i]
            for k in nz:
                row[k] = row[k] - f * prow[k]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    out = np.empty((len(rows), ncols), dtype=object)
    for i, row in enumerate(rows):
        out[i, :] = row
    return out, pivots


def rank(mat) -> int:
    return len(rref(mat)[1])


def nullspace(mat) -> np.ndarray:
    """Basis of ``{v : mat @ v = 0}`` as rows, in reduced echelon form."""
    mat = np.asarray(mat, dtype=object)
    n = mat.shape[1]
    d = field_of_array(mat)
    if mat.shape[0] == 0:
        return identity(n, d)
    red, pivots = rref(mat)
    free = [c for c in range(n) if c not in pivots]
    basis = zeros((len(free), n), d)
    for k, fc in enumerate(free):
        basis[k, fc] = to_field(1, d)
        for i, pc in enumerate(pivots):
            basis[k, pc] = -red[i, fc]
    if len(free) == 0:
        return basis
    return rref(basis)[0]


def solve(a, b) -> Optional[np.ndarray]:
    """One solution ``x`` of ``a @ x = b`` (free variables set to 0), or ``None``."""
    a = np.asarray(a, dtype=object)
    b = np.asarray(b, dtype=object)
    vector = b.ndim == 1
    if vector:
        b = b.reshape(-1, 1)
    n, k = a.shape[1], b.shape[1]
    red, pivots = rref(np.hstack([a, b]))
    if any(p >= n for p in pivots):
        return None
    x = zeros((n, k), field_of_array(red))
    for i, pc in enumerate(pivots):
        x[pc, :] = red[i, n:]
    return x[:, 0] if vector else x


def inverse(mat) -> np.ndarray:
    mat = np.asarray(mat, dtype=object)
    n = mat.shape[0]
    if mat.shape != (n, n):
        raise ValueError(f"cannot invert a {mat.shape} matrix")
    red, pivots = rref(np.hstack([mat, identity(n, field_of_array(mat))]))
    if pivots[:n] != list(range(n)):
        raise ValueError("matrix is singular")
    return red[:, n:]


@dataclass(frozen=True, eq=False)
class Subspace:
    """A subspace of F^n, stored by a reduced row echelon basis (one vector per row)."""

    basis: np.ndarray
    ambient: int

    @classmethod
    def span(cls, vectors: Sequence, ambient: int) -> "Subspace":
        vecs = [np.asarray(v, dtype=object) for v in vectors]
        if not vecs:
            return cls(np.empty((0, ambient), dtype=object), ambient)
        red, piv = rref(np.vstack(vecs))
        return cls(red[: len(piv)], ambient)

    @property
    def dim(self) -> int:
        return self.basis.shape[0]

    def contains(self, v) -> bool:
        if self.dim == 0:
            return is_zero(v)
        return rank(np.vstack([self.basis, np.asarray(v, dtype=object)])) == self.dim

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.ambient == other.ambient and array_equal(self.basis, other.basis)

    def __repr__(self):
        return f"Subspace(dim={self.dim}, ambient={self.ambient})"
