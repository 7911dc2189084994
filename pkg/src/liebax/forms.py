"""Bilinear forms and the tensor/operator dictionary they induce.

A form is its Gram matrix ``G[i, j] = omega(e_i, e_j)``.  A tensor
``r = sum r[p, q] e_p (x) e_q`` is stored as the ``n x n`` coefficient matrix
(row index = first slot).
"""
from __future__ import annotations

import numpy as np

from .liealg import LieAlgebra
from .linalg import array_equal, inverse, rank


def is_symmetric(omega) -> bool:
    omega = np.asarray(omega, dtype=object)
    return array_equal(omega, omega.T)


def invariance_check(L: LieAlgebra, omega) -> bool:
    """``omega([a, b], c) == omega(a, [b, c])`` on every basis triple."""
    c = L.structure
    lhs = np.einsum("ijm,mk->ijk", c, omega)
    rhs = np.einsum("im,jkm->ijk", omega, c)
    return array_equal(lhs, rhs)


def is_nondegenerate(omega) -> bool:
    omega = np.asarray(omega, dtype=object)
    return rank(omega) == omega.shape[0]


def _require_nondegenerate(omega):
    omega = np.asarray(omega, dtype=object)
    try:
        return inverse(omega)
    except ValueError:
        raise ValueError("bilinear form is degenerate") from None


def adjoint_map(R, omega) -> np.ndarray:
    """The map ``R*`` with ``omega(R x, y) == omega(x, R* y)``."""
    Ginv = _require_nondegenerate(omega)
    return Ginv @ np.asarray(R, dtype=object).T @ omega


def map_from_tensor(r, omega) -> np.ndarray:
    """``R_r(x) = sum_pq r[p, q] omega(e_p, x) e_q``.

    Column ``j`` is ``R_r(e_j) = sum_q (sum_p r[p, q] G[p, j]) e_q``, so the
    matrix is ``r.T @ G``.
    """
    _require_nondegenerate(omega)
    return np.asarray(r, dtype=object).T @ omega


def tensor_from_map(R, omega) -> np.ndarray:
    """Inverse of :func:`map_from_tensor` for a fixed nondegenerate form."""
    Ginv = _require_nondegenerate(omega)
    return (np.asarray(R, dtype=object) @ Ginv).T
