"""Finite-dimensional Lie algebras given by structure constants.

Conventions used throughout the package:

* ``structure[i, j, k]`` is the coefficient of ``e_k`` in ``[e_i, e_j]``.
* A linear map is an ``n x n`` object array whose column ``j`` is the image of
  ``e_j``; it acts on coordinate vectors by ``M @ v``.
* A bilinear table (such as a Rota-Baxter residual) is an ``n x n x n`` array
  ``T`` with ``T[i, j]`` the vector assigned to ``(e_i, e_j)``.
"""
from __future__ import annotations

from typing import List, Mapping, Optional, Sequence, Tuple

import numpy as np

from .linalg import Subspace, array_equal, exact, field_of_array, identity, inverse, is_zero, nullspace, zeros


class LieAlgebra:
    """Structure constants over Q (``field=None``) or Q(sqrt d) (``field=d``).

    Construction does not validate the Lie axioms: doubles built from
    arbitrary operators are legitimately non-Lie, and :func:`jacobi_check`
    is how callers find out.
    """

    def __init__(self, structure, basis: Optional[Sequence[str]] = None, field: Optional[int] = None):
        c = exact(structure, field)
        if c.ndim != 3 or not (c.shape[0] == c.shape[1] == c.shape[2]) or c.shape[0] == 0:
            raise ValueError(f"structure constants must have shape (n, n, n), got {c.shape}")
        self.structure = c
        self.dim = c.shape[0]
        self.field = field
        if basis is None:
            basis = [f"e{i + 1}" for i in range(self.dim)]
        basis = list(basis)
        if len(basis) != self.dim:
            raise ValueError(f"{len(basis)} basis names for a {self.dim}-dimensional algebra")
        self.basis = basis

    @classmethod
    def from_brackets(
        cls,
        dim: int,
        brackets: Mapping[Tuple[int, int], Sequence],
        basis: Optional[Sequence[str]] = None,
        field: Optional[int] = None,
    ) -> "LieAlgebra":
        """Build from ``{(i, j): coeffs}`` with ``i < j``; antisymmetry fills the rest."""
        c = zeros((dim, dim, dim), field)
        for (i, j), coeffs in brackets.items():
            if not 0 <= i < j < dim:
                raise ValueError(f"bracket index pair ({i}, {j}) must satisfy 0 <= i < j < {dim}")
            v = exact(coeffs, field)
            if v.shape != (dim,):
                raise ValueError(f"bracket ({i}, {j}) needs {dim} coefficients")
            c[i, j] = v
            c[j, i] = -v
        return cls(c, basis, field)

    def index(self, name: str) -> int:
        return self.basis.index(name)

    def vector(self, terms: Mapping[str, object]) -> np.ndarray:
        """Coordinate vector from ``{basis_name: coefficient}``."""
        v = zeros(self.dim, self.field)
        for name, coeff in terms.items():
            v[self.index(name)] += exact(coeff, self.field).item()
        return v

    def __eq__(self, other):
        if not isinstance(other, LieAlgebra):
            return NotImplemented
        return (
            self.dim == other.dim
            and self.field == other.field
            and self.basis == other.basis
            and array_equal(self.structure, other.structure)
        )

    def __repr__(self):
        fld = "Q" if self.field is None else f"Q(sqrt {self.field})"
        return f"LieAlgebra(dim={self.dim}, field={fld}, basis={self.basis})"


def _check_vec(L: LieAlgebra, v) -> np.ndarray:
    v = np.asarray(v, dtype=object)
    if v.shape != (L.dim,):
        raise ValueError(f"expected a vector of length {L.dim}, got shape {v.shape}")
    return v


def bracket(L: LieAlgebra, x, y) -> np.ndarray:
    x, y = _check_vec(L, x), _check_vec(L, y)
    return contract(L.structure, x, y)


def contract(c, x, y) -> np.ndarray:
    """``sum_ij x_i y_j c[i, j]``, skipping zero coefficients (exact scalars are slow)."""
    out = 0 * c[0, 0]
    for i in np.flatnonzero(x):
        for j in np.flatnonzero(y):
            out = out + (x[i] * y[j]) * c[i, j]
    return out


def bracket_table(L: LieAlgebra, X=None, Y=None) -> np.ndarray:
    """``T[i, j] = [X e_i, Y e_j]``; ``None`` stands for the identity."""
    c = L.structure
    if X is not None:
        c = np.einsum("ai,abk->ibk", X, c)
    if Y is not None:
        c = np.einsum("bj,ibk->ijk", Y, c)
    return c


def apply_to_table(M, table) -> np.ndarray:
    """Apply the linear map ``M`` to every vector of a bilinear table."""
    return np.einsum("lk,ijk->ijl", M, table)


def is_antisymmetric(L: LieAlgebra) -> bool:
    c = L.structure
    return is_zero(c + c.transpose(1, 0, 2))


def jacobi_check(L: LieAlgebra) -> bool:
    """Antisymmetry plus the Jacobi identity on every basis triple."""
    if not is_antisymmetric(L):
        return False
    c = L.structure
    n = L.dim
    # T[i, j, k] = [[e_i, e_j], e_k], built from the nonzero brackets only
    T = zeros((n, n, n, n), L.field)
    for i in range(n):
        for j in range(i + 1, n):
            nz = np.flatnonzero(c[i, j])
            if not len(nz):
                continue
            for k in range(n):
                v = zeros(n, L.field)
                for m in nz:
                    v = v + c[i, j, m] * c[m, k]
                T[i, j, k] = v
                T[j, i, k] = -v
    return is_zero(T + T.transpose(2, 0, 1, 3) + T.transpose(1, 2, 0, 3))


def adjoint(L: LieAlgebra, x) -> np.ndarray:
    """Matrix of ``y -> [x, y]``."""
    x = _check_vec(L, x)
    return np.einsum("i,ijk->kj", x, L.structure)


def ad_matrices(L: LieAlgebra) -> List[np.ndarray]:
    return [np.ascontiguousarray(L.structure[i].T) for i in range(L.dim)]


def center(L: LieAlgebra) -> Subspace:
    n = L.dim
    # row (j, k), column i: coefficient of e_k in [e_i, e_j]
    system = L.structure.transpose(1, 2, 0).reshape(n * n, n)
    return Subspace(nullspace(system), n)


def derived_subalgebra(L: LieAlgebra) -> Subspace:
    n = L.dim
    return Subspace.span(list(L.structure.reshape(n * n, n)), n)


def is_perfect(L: LieAlgebra) -> bool:
    return derived_subalgebra(L).dim == L.dim


def killing_form(L: LieAlgebra) -> np.ndarray:
    """Gram matrix of ``tr(ad_x ad_y)``."""
    c = L.structure
    return np.einsum("iba,jab->ij", c, c)


def is_subalgebra(L: LieAlgebra, S: Subspace) -> bool:
    return all(S.contains(bracket(L, u, v)) for u in S.basis for v in S.basis)


def is_ideal(L: LieAlgebra, S: Subspace) -> bool:
    units = identity(L.dim, L.field)
    return all(S.contains(bracket(L, u, e)) for u in S.basis for e in units)


def is_homomorphism(L: LieAlgebra, phi) -> bool:
    """``phi([x, y]) == [phi x, phi y]`` on all basis pairs."""
    return array_equal(bracket_table(L, phi, phi), apply_to_table(phi, L.structure))


def extend_scalars(L: LieAlgebra, d: int) -> LieAlgebra:
    """Reinterpret a Q-algebra over Q(sqrt d)."""
    if L.field is not None:
        if L.field == d:
            return L
        raise ValueError(f"algebra is already over Q(sqrt {L.field})")
    return LieAlgebra(L.structure, L.basis, d)


def abelian(n: int, field: Optional[int] = None) -> LieAlgebra:
    return LieAlgebra(zeros((n, n, n), field), field=field)


def direct_sum(*algebras: LieAlgebra) -> LieAlgebra:
    fields = {A.field for A in algebras}
    if len(fields) != 1:
        raise ValueError("direct summands live over different fields")
    field = fields.pop()
    n = sum(A.dim for A in algebras)
    c = zeros((n, n, n), field)
    names: List[str] = []
    off = 0
    for k, A in enumerate(algebras):
        m = A.dim
        c[off : off + m, off : off + m, off : off + m] = A.structure
        names += [f"{b}_{k + 1}" for b in A.basis]
        off += m
    return LieAlgebra(c, names, field)


def change_basis(L: LieAlgebra, P, basis: Optional[Sequence[str]] = None) -> LieAlgebra:
    """Structure constants in the basis given by the columns of ``P``."""
    Pinv = inverse(P)
    c = apply_to_table(Pinv, bracket_table(L, P, P))
    return LieAlgebra(c, basis, L.field if L.field is not None else field_of_array(c))
