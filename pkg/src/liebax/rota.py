"""Rota-Baxter operators whose weight is a centroid element.

``R`` is a Rota-Baxter operator of weight ``mu`` when

    [R x, R y] = R([R x, y] + [x, R y] + mu([x, y]))

for all ``x, y``.  The module also builds the double ``D_{R,mu}`` on
``L + L_bar`` and the ideals ``I(L)`` (graph of ``mu + R``) and ``J(L)``.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Tuple

import numpy as np

from .centroid import is_centrum
from .liealg import LieAlgebra, apply_to_table, bracket_table, contract, is_homomorphism, is_subalgebra
from .linalg import Subspace, array_equal, exact, identity, inverse, is_zero, rank, zeros


def _op(L: LieAlgebra, M) -> np.ndarray:
    M = exact(M, L.field)
    if M.shape != (L.dim, L.dim):
        raise ValueError(f"expected a {L.dim}x{L.dim} map, got shape {M.shape}")
    return M


def theta_table(L: LieAlgebra, R) -> np.ndarray:
    """``theta(x, y) = [R x, R y] - R([R x, y] + [x, R y])`` on basis pairs."""
    R = _op(L, R)
    return bracket_table(L, R, R) - apply_to_table(R, bracket_table(L, R, None) + bracket_table(L, None, R))


def rb_residual(L: LieAlgebra, R, mu) -> np.ndarray:
    R, mu = _op(L, R), _op(L, mu)
    inner = bracket_table(L, R, None) + bracket_table(L, None, R) + apply_to_table(mu, L.structure)
    return bracket_table(L, R, R) - apply_to_table(R, inner)


def rb_check(L: LieAlgebra, R, mu) -> bool:
    return is_zero(rb_residual(L, R, mu))


def mcybe_residual(L: LieAlgebra, R, lam) -> np.ndarray:
    """``[R x, R y] - R([R x, y] + [x, R y]) + lam^2 [x, y]``."""
    return theta_table(L, R) + (lam * lam) * L.structure


def rb_from_mcybe(L: LieAlgebra, R, lam) -> np.ndarray:
    """``(R - lam id) / 2``, a Rota-Baxter operator of weight ``lam`` when R solves mCYBE."""
    R = _op(L, R)
    return (R - lam * identity(L.dim, L.field)) * Fraction(1, 2)


def r_matrix_check(L: LieAlgebra, R) -> bool:
    """Cyclic condition ``[theta(x,y),z] + [theta(y,z),x] + [theta(z,x),y] = 0``."""
    th = theta_table(L, R)
    c = L.structure
    # term[i, j, k] = [theta(e_i, e_j), e_k]
    term = np.einsum("ijm,mkl->ijkl", th, c)
    cyc = term + term.transpose(2, 0, 1, 3) + term.transpose(1, 2, 0, 3)
    return is_zero(cyc)


def rb_transform(L: LieAlgebra, R, mu, kind: str, operand=None) -> Tuple[np.ndarray, np.ndarray]:
    """Transform a weighted Rota-Baxter pair ``(R, mu)``.

    ``kind`` is one of

    * ``"compose"``: ``(R gamma, mu gamma)`` for a centrum map ``gamma``;
    * ``"conjugate"``: ``(phi R phi^-1, phi mu phi^-1)`` for an (anti-)automorphism ``phi``;
    * ``"reflect"``: ``(-mu - R, mu)``;
    * ``"from_modified"``: ``((Q - mu) / 2, mu)`` where ``Q`` satisfies
      ``theta_Q = -mu^2 o bracket``; ``R`` is ignored.
    """
    mu = _op(L, mu)
    if kind == "compose":
        gamma = _op(L, operand)
        if not is_centrum(L, gamma):
            raise ValueError("gamma is not a centrum map")
        R = _op(L, R)
        return R @ gamma, mu @ gamma
    if kind == "conjugate":
        phi = _op(L, operand)
        if rank(phi) != L.dim:
            raise ValueError("phi is not invertible")
        anti = array_equal(bracket_table(L, phi, phi), -apply_to_table(phi, L.structure))
        if not (is_homomorphism(L, phi) or anti):
            raise ValueError("phi is neither an automorphism nor an anti-automorphism")
        pinv = inverse(phi)
        return phi @ _op(L, R) @ pinv, phi @ mu @ pinv
    if kind == "reflect":
        return -mu - _op(L, R), mu
    if kind == "from_modified":
        Q = _op(L, operand)
        if not is_zero(theta_table(L, Q) + apply_to_table(mu @ mu, L.structure)):
            raise ValueError("Q does not satisfy theta_Q = -mu^2 o bracket")
        return (Q - mu) * Fraction(1, 2), mu
    raise ValueError(f"unknown transform {kind!r}")


def _projection(A1: Subspace, A2: Subspace) -> np.ndarray:
    """Projection onto ``A1`` along ``A2``."""
    n = A1.ambient
    vecs = [v for v in A1.basis] + [v for v in A2.basis]
    P = np.stack(vecs, axis=1) if vecs else zeros((n, 0))
    D = zeros((n, n))
    for k in range(A1.dim):
        D[k, k] = Fraction(1)
    return P @ D @ inverse(P)


def split_rb(L: LieAlgebra, A1: Subspace, A2: Subspace, mu) -> np.ndarray:
    """``R(x + a) = -mu(x)`` for ``x`` in ``A1``, ``a`` in ``A2``.

    Requires ``L = A1 + A2`` as subalgebras and ``mu(A_k A_k)`` inside ``A_k``;
    the returned operator is re-checked against the Rota-Baxter identity.
    """
    mu = _op(L, mu)
    if A1.dim + A2.dim != L.dim:
        raise ValueError("dimensions of the summands do not add up")
    if A1.dim and A2.dim and rank(np.vstack([A1.basis, A2.basis])) != L.dim:
        raise ValueError("summands intersect")
    for k, S in enumerate((A1, A2)):
        if not is_subalgebra(L, S):
            raise ValueError(f"summand {k + 1} is not a subalgebra")
        for u in S.basis:
            for v in S.basis:
                if not S.contains(mu @ contract(L.structure, u, v)):
                    raise ValueError(f"mu does not keep the square of summand {k + 1} inside it")
    if A1.dim == 0:
        R = zeros((L.dim, L.dim), L.field)
    elif A2.dim == 0:
        R = -mu
    else:
        R = -mu @ exact(_projection(A1, A2), L.field)
    if not rb_check(L, R, mu):
        raise ArithmeticError("split operator fails the Rota-Baxter identity")
    return R


def derived_product(L: LieAlgebra, R, mu) -> LieAlgebra:
    """``x . y = [R x, y] + [x, R y] + mu([x, y])``."""
    R, mu = _op(L, R), _op(L, mu)
    if not rb_check(L, R, mu):
        raise ValueError("R is not a Rota-Baxter operator of weight mu")
    c = bracket_table(L, R, None) + bracket_table(L, None, R) + apply_to_table(mu, L.structure)
    return LieAlgebra(c, L.basis, L.field)


class DoubleAlgebra(LieAlgebra):
    """``D_{R,mu}(L) = L + L_bar``; coordinates are ``(a, b)`` for ``a + b_bar``."""

    def __init__(self, base: LieAlgebra, R, mu):
        R, mu = _op(base, R), _op(base, mu)
        n = base.dim
        c = base.structure
        RC = apply_to_table(R, c)
        C_RI = bracket_table(base, R, None)
        C_IR = bracket_table(base, None, R)
        c2 = zeros((2 * n, 2 * n, 2 * n), base.field)
        # a x
        c2[:n, :n, :n] = c
        # a * y_bar = R(ay) - a R(y) + bar(ay)
        c2[:n, n:, :n] = RC - C_IR
        c2[:n, n:, n:] = c
        # b_bar * x = R(bx) - R(b) x + bar(bx)
        c2[n:, :n, :n] = RC - C_RI
        c2[n:, :n, n:] = c
        # b_bar * y_bar = bar(-R(b) y - b R(y) - mu(by))
        c2[n:, n:, n:] = -C_RI - C_IR - apply_to_table(mu, c)
        names = list(base.basis) + [f"{b}_bar" for b in base.basis]
        super().__init__(c2, names, base.field)
        self.base = base
        self.R = R
        self.mu = mu

    def lift(self, x) -> np.ndarray:
        """``x`` in L as an element of the double."""
        return np.concatenate([np.asarray(x, dtype=object), zeros(self.base.dim, self.base.field)])

    def bar(self, y) -> np.ndarray:
        return np.concatenate([zeros(self.base.dim, self.base.field), np.asarray(y, dtype=object)])

    def i(self, x) -> np.ndarray:
        """``i(x) = x_bar + mu(x) + R(x)``."""
        x = np.asarray(x, dtype=object)
        return np.concatenate([(self.mu + self.R) @ x, x])

    def j(self, x) -> np.ndarray:
        """``j(x) = mu(x) - i(x)``."""
        x = np.asarray(x, dtype=object)
        return self.lift(self.mu @ x) - self.i(x)

    def product(self, u, v) -> np.ndarray:
        return contract(self.structure, np.asarray(u, dtype=object), np.asarray(v, dtype=object))

    def i_matrix(self) -> np.ndarray:
        """Columns ``i(e_1), ..., i(e_n)``."""
        return np.concatenate([self.mu + self.R, identity(self.base.dim, self.base.field)], axis=0)

    def j_matrix(self) -> np.ndarray:
        n = self.base.dim
        return np.concatenate([-self.R, -identity(n, self.base.field)], axis=0)

    def ideal_I(self) -> Subspace:
        return Subspace.span(list(self.i_matrix().T), 2 * self.base.dim)

    def ideal_J(self) -> Subspace:
        return Subspace.span(list(self.j_matrix().T), 2 * self.base.dim)


def build_double(L: LieAlgebra, R, mu) -> DoubleAlgebra:
    return DoubleAlgebra(L, R, mu)


def _closed_under_products(D: DoubleAlgebra, S: Subspace) -> bool:
    units = identity(D.dim, D.field)
    for u in S.basis:
        for e in units:
            if not (S.contains(D.product(u, e)) and S.contains(D.product(e, u))):
                return False
    return True


def ideal_check_I(L: LieAlgebra, R, mu) -> bool:
    """Is ``I(L) = {x_bar + mu(x) + R(x)}`` an ideal of ``D_{R,mu}(L)``?"""
    D = build_double(L, R, mu)
    return _closed_under_products(D, D.ideal_I())


def double_decompose(L: LieAlgebra, R, mu) -> Tuple[Subspace, Subspace]:
    """Split ``D_{R,mu}(L) = I(L) + J(L)`` into commuting ideals, each isomorphic to L.

    Every claim is verified; a failure raises ``ArithmeticError``.
    """
    R, mu = _op(L, R), _op(L, mu)
    if rank(mu) != L.dim:
        raise ValueError("weight is not invertible")
    if not rb_check(L, R, mu):
        raise ValueError("R is not a Rota-Baxter operator of weight mu")
    D = build_double(L, R, mu)
    I, J = D.ideal_I(), D.ideal_J()
    if I.dim != L.dim or J.dim != L.dim or rank(np.vstack([I.basis, J.basis])) != D.dim:
        raise ArithmeticError("I and J do not span the double")
    if not (_closed_under_products(D, I) and _closed_under_products(D, J)):
        raise ArithmeticError("I or J is not an ideal")
    for u in I.basis:
        for v in J.basis:
            if not (is_zero(D.product(u, v)) and is_zero(D.product(v, u))):
                raise ArithmeticError("I and J do not annihilate each other")
    if not (is_isomorphism_into(L, D, D.i_matrix() @ inverse(mu)) and is_isomorphism_into(L, D, D.j_matrix() @ inverse(mu))):
        raise ArithmeticError("i o mu^-1 or j o mu^-1 is not a bracket isomorphism")
    return I, J


def is_isomorphism_into(L: LieAlgebra, D: LieAlgebra, F) -> bool:
    """``F`` (columns = images of basis vectors) is injective and preserves brackets."""
    F = np.asarray(F, dtype=object)
    if rank(F) != L.dim:
        return False
    lhs = np.einsum("ai,bj,abk->ijk", F, F, D.structure)
    rhs = np.einsum("ka,ija->ijk", F, L.structure)
    return array_equal(lhs, rhs)
