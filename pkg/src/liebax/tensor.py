"""Two-tensors ``r`` in L (x) L: invariance, CYBE, cobracket, dual algebra, doubles.

A tensor is an ``n x n`` matrix with ``r[p, q]`` the coefficient of
``e_p (x) e_q``.  The right action of ``e_k`` on a tensor is
``[a (x) b, e_k] = [a, e_k] (x) b + a (x) [b, e_k]``.
"""
from __future__ import annotations


import numpy as np

from .forms import _require_nondegenerate, adjoint_map, invariance_check, map_from_tensor
from .liealg import LieAlgebra, apply_to_table, bracket_table, change_basis, jacobi_check
from .linalg import array_equal, exact, identity, inverse, is_zero, rank, zeros


def flip(r) -> np.ndarray:
    """``tau(a (x) b) = b (x) a``."""
    return np.asarray(r, dtype=object).T.copy()


def _act_mats(L: LieAlgebra):
    # A_k[a, p] = c[p, k, a], the matrix of u -> [u, e_k]
    return [np.ascontiguousarray(L.structure[:, k, :].T) for k in range(L.dim)]


def act(L: LieAlgebra, t, k: int) -> np.ndarray:
    """``[t, e_k]`` for a two-tensor ``t``."""
    A = np.ascontiguousarray(L.structure[:, k, :].T)
    t = np.asarray(t, dtype=object)
    return A @ t + t @ A.T


def tensor_invariance_check(L: LieAlgebra, t) -> bool:
    return all(is_zero(act(L, t, k)) for k in range(L.dim))


def cybe_residual(L: LieAlgebra, r) -> np.ndarray:
    """``[r12, r13] - [r23, r12] + [r13, r23]`` as an ``n x n x n`` array."""
    r = exact(r, L.field)
    c = L.structure
    # [r12, r13] = sum [a_i, a_j] (x) b_i (x) b_j
    t1 = np.einsum("pq,st,psa->aqt", r, r, c)
    # [r23, r12] = sum a_i (x) [a_j, b_i] (x) b_j
    t2 = np.einsum("pq,st,sqb->pbt", r, r, c)
    # [r13, r23] = sum a_i (x) a_j (x) [b_i, b_j]
    t3 = np.einsum("pq,st,qtb->psb", r, r, c)
    return t1 - t2 + t3


def cybe_invariance_check(L: LieAlgebra, r) -> bool:
    """Is the CYBE residual an invariant three-tensor?"""
    C = cybe_residual(L, r)
    for A in _act_mats(L):
        moved = (
            np.einsum("ap,pqt->aqt", A, C)
            + np.einsum("bq,pqt->pbt", A, C)
            + np.einsum("ct,pqt->pqc", A, C)
        )
        if not is_zero(moved):
            return False
    return True


def cobracket(L: LieAlgebra, r) -> np.ndarray:
    """``D[k] = delta_r(e_k) = [r, e_k]``; shape ``(n, n, n)``."""
    r = exact(r, L.field)
    return np.stack([act(L, r, k) for k in range(L.dim)])


def cocycle_check(L: LieAlgebra, delta) -> bool:
    """``delta([a, b]) = [delta(a), b] - [delta(b), a]`` on basis pairs."""
    delta = np.asarray(delta, dtype=object)
    n = L.dim
    lhs = np.einsum("ijk,kab->ijab", L.structure, delta)
    acted = np.stack([np.stack([act(L, delta[i], j) for j in range(n)]) for i in range(n)])
    rhs = acted - acted.transpose(1, 0, 2, 3)
    return is_zero(lhs - rhs)


def dual_algebra_coords(L: LieAlgebra, delta) -> LieAlgebra:
    """Bracket on L* in the dual basis: ``[e^a, e^b] = sum_k delta(e_k)[a, b] e^k``."""
    delta = np.asarray(delta, dtype=object)
    names = [f"{b}^" for b in L.basis]
    return LieAlgebra(delta.transpose(1, 2, 0), names, L.field)


def dual_algebra(L: LieAlgebra, omega, r) -> LieAlgebra:
    """Dual algebra of ``(L, delta_r)`` moved to L through ``x -> omega(x, .)``.

    Built from the cobracket table alone; :func:`dual_product_formula` is the
    closed-form route it is cross-checked against.
    """
    G = exact(omega, L.field)
    _require_nondegenerate(G)
    dual = dual_algebra_coords(L, cobracket(L, r))
    # e_i^* = sum_a G[i, a] e^a, so the change of basis has columns G[i, :]
    return change_basis(dual, G.T, [f"{b}*" for b in L.basis])


def dual_product_formula(L: LieAlgebra, R, mu) -> LieAlgebra:
    """``[a*, b*] = (-[R a, b] - [a, R b] - mu([a, b]))*`` valid when ``R + R* + mu = 0``."""
    R, mu = exact(R, L.field), exact(mu, L.field)
    c = -bracket_table(L, R, None) - bracket_table(L, None, R) - apply_to_table(mu, L.structure)
    return LieAlgebra(c, [f"{b}*" for b in L.basis], L.field)


def lie_coalgebra_check(L: LieAlgebra, r) -> bool:
    """``(L, delta_r)`` is a Lie coalgebra iff its dual algebra is Lie."""
    return jacobi_check(dual_algebra_coords(L, cobracket(L, r)))


def drinfeld_double(L: LieAlgebra, omega, r, check: bool = True) -> LieAlgebra:
    """The classical double ``L + L*`` in the basis ``(e_i, e_i^*)``.

    The pairing ``Q(x + f, y + g) = f(y) + g(x)`` is invariant and L, L* are
    subalgebras; the mixed brackets follow from that invariance.
    """
    n = L.dim
    G = exact(omega, L.field)
    _require_nondegenerate(G)
    D = cobracket(L, r)
    if check and not jacobi_check(dual_algebra_coords(L, D)):
        raise ValueError("delta_r is not a Lie cobracket")
    c = L.structure
    c2 = zeros((2 * n, 2 * n, 2 * n), L.field)
    c2[:n, :n, :n] = c
    # [e^a, e^b] = sum_k D[k, a, b] e^k
    c2[n:, n:, n:] = D.transpose(1, 2, 0)
    # [e^a, e_j]: e_b-coefficient -D[j, a, b], e^m-coefficient c[j, m, a]
    c2[n:, :n, :n] = -D.transpose(1, 0, 2)
    c2[n:, :n, n:] = c.transpose(2, 0, 1)
    c2[:n, n:] = -c2[n:, :n].transpose(1, 0, 2)
    names = list(L.basis) + [f"{b}^" for b in L.basis]
    dbl = LieAlgebra(c2, names, L.field)
    P = zeros((2 * n, 2 * n), L.field)
    P[:n, :n] = identity(n, L.field)
    P[n:, n:] = G.T
    return change_basis(dbl, P, list(L.basis) + [f"{b}*" for b in L.basis])


def double_iso_check(L: LieAlgebra, omega, r) -> bool:
    """``x + y* -> x + y_bar`` carries the classical double onto ``D_{R_r, mu}``.

    In the ``(e_i, e_i^*)`` basis that map is the identity matrix, so the check
    is entrywise equality of the two multiplication tables.
    """
    from .rota import build_double

    G = exact(omega, L.field)
    R = map_from_tensor(r, G)
    mu = -(R + adjoint_map(R, G))
    return array_equal(drinfeld_double(L, G, r).structure, build_double(L, R, mu).structure)


def factorizable_form(L: LieAlgebra, r) -> np.ndarray:
    """Invariant form ``beta = -(r + tau r)^-1`` attached to a factorizable ``r``.

    With ``R_r`` taken against ``beta`` this gives a Rota-Baxter operator of
    weight 1 with ``R_r + R_r^* + id = 0``.  (The inverse without the sign
    gives weight -1 under the tensor-to-map convention used here.)
    """
    from .rota import rb_check

    r = exact(r, L.field)
    S = r + r.T
    if rank(S) != L.dim:
        raise ValueError("symmetric part of r is degenerate")
    if not tensor_invariance_check(L, S):
        raise ValueError("symmetric part of r is not invariant")
    if not is_zero(cybe_residual(L, r)):
        raise ValueError("r does not solve the CYBE")
    beta = -inverse(S)
    R = map_from_tensor(r, beta)
    I = identity(L.dim, L.field)
    assert invariance_check(L, beta)
    assert array_equal(R + adjoint_map(R, beta) + I, zeros((L.dim, L.dim), L.field))
    assert rb_check(L, R, I)
    return beta
