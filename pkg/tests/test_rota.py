from fractions import Fraction

import numpy as np
import pytest

from liebax.liealg import direct_sum, is_antisymmetric, jacobi_check
from liebax.linalg import Subspace, array_equal, exact, identity, is_zero, rank, zeros
from liebax.rota import (
    build_double,
    derived_product,
    double_decompose,
    ideal_check_I,
    mcybe_residual,
    r_matrix_check,
    rb_check,
    rb_from_mcybe,
    rb_residual,
    rb_transform,
    split_rb,
)
from conftest import INSTANCES, named_map


def test_residual_examples(sl2q, sl2c6):
    L = sl2q.algebra
    Z, I = zeros((3, 3)), identity(3)
    assert rb_check(sl2c6.algebra, sl2c6.maps["B"], sl2c6.maps["2phi"])
    assert rb_check(L, Z, Z)
    T = rb_residual(L, I, Z)
    # (h, x): [h, x] - 2[h, x] = -2x
    assert list(T[L.index("h"), L.index("x")]) == [-2, 0, 0]


def test_transforms_six_dim(sl2c6):
    L, m = sl2c6.algebra, sl2c6.maps
    R2, mu2 = rb_transform(L, m["B"], m["2phi"], "reflect")
    assert array_equal(R2, -m["2phi"] - m["B"]) and array_equal(mu2, m["2phi"])
    assert rb_check(L, R2, mu2)
    conj, _ = rb_transform(L, m["phi"], zeros((6, 6)), "conjugate", m["psi"])
    assert array_equal(conj, -m["phi"])
    R3, mu3 = rb_transform(L, m["B"], m["2phi"], "compose", 2 * identity(6))
    assert array_equal(mu3, 2 * m["2phi"]) and rb_check(L, R3, mu3)
    # Q = R_r solves theta_Q = -(2 phi)^2 o bracket
    R4, mu4 = rb_transform(L, None, m["2phi"], "from_modified", m["R"])
    assert array_equal(R4, m["B"]) and mu4 is not None


def test_transform_errors(sl2q):
    L = sl2q.algebra
    I = identity(3)
    ad_h = exact(np.diag([2, 0, -2]))
    with pytest.raises(ValueError):
        rb_transform(L, I, I, "compose", ad_h)
    with pytest.raises(ValueError):
        rb_transform(L, I, I, "conjugate", ad_h)
    with pytest.raises(ValueError):
        rb_transform(L, I, I, "spin")


def test_split(sl2q):
    sl2 = sl2q.algebra
    two = direct_sum(sl2, sl2)
    I6 = identity(6)
    A1, A2 = Subspace.span(list(I6[:3]), 6), Subspace.span(list(I6[3:]), 6)
    R = split_rb(two, A1, A2, I6)
    P = zeros((6, 6))
    for k in range(3):
        P[k, k] = Fraction(1)
    assert array_equal(R, -P) and rb_check(two, R, I6)
    Z = Subspace.span([], 3)
    full = Subspace.span(list(identity(3)), 3)
    assert is_zero(split_rb(sl2, Z, full, 5 * identity(3)))
    borel = Subspace.span([sl2.vector({"x": 1}), sl2.vector({"h": 1})], 3)
    nil = Subspace.span([sl2.vector({"y": 1})], 3)
    assert rb_check(sl2, split_rb(sl2, borel, nil, identity(3)), identity(3))
    with pytest.raises(ValueError):
        split_rb(sl2, Subspace.span([sl2.vector({"x": 1}), sl2.vector({"y": 1})], 3), nil, identity(3))


def test_derived_product(sl2q, sl2c6):
    L = sl2q.algebra
    I, Z = identity(3), zeros((3, 3))
    assert derived_product(L, Z, I) == L
    neg = derived_product(L, -I, I)
    assert array_equal(neg.structure, -L.structure) and jacobi_check(neg)
    assert jacobi_check(derived_product(sl2c6.algebra, sl2c6.maps["B"], sl2c6.maps["2phi"]))
    with pytest.raises(ValueError):
        derived_product(L, I, Z)


def test_double_examples(sl2q, sl2c6):
    L = sl2q.algebra
    Z = zeros((3, 3))
    D = build_double(L, Z, Z)
    assert jacobi_check(D)
    D6 = build_double(sl2c6.algebra, sl2c6.maps["B"], sl2c6.maps["2phi"])
    assert D6.dim == 12 and jacobi_check(D6)
    bad = INSTANCES["non_rb_nonlie_double"]
    R = named_map(L, bad["map"])
    assert not rb_check(L, R, Z) and is_antisymmetric(build_double(L, R, Z))
    assert not jacobi_check(build_double(L, R, Z))


def test_identity_weight_zero_double_is_lie(sl2q):
    # R = id is not Rota-Baxter of weight 0, yet its double is the Lie algebra
    # L semidirect (L with bracket -2[,]); only the ideal criterion detects it
    L = sl2q.algebra
    Z = zeros((3, 3))
    R = named_map(L, INSTANCES["non_rb_lie_double"]["map"])
    assert array_equal(R, identity(3))
    assert not rb_check(L, R, Z) and not ideal_check_I(L, R, Z)
    assert jacobi_check(build_double(L, R, Z))


def test_i_map_identities(sl2c6):
    L = sl2c6.algebra
    B, mu = sl2c6.maps["B"], sl2c6.maps["2phi"]
    D = build_double(L, B, mu)
    E = identity(6)
    for a in E:
        for b in E:
            ab = np.einsum("i,j,ijk->k", a, b, L.structure)
            assert array_equal(D.product(D.i(a), D.lift(b)), D.i(ab))
            assert array_equal(D.product(D.i(a), D.i(b)), D.i(mu @ ab))
    I = D.ideal_I()
    A = Subspace.span(list(np.concatenate([E, zeros((6, 6))], axis=1)), 12)
    assert I.dim == 6 and rank(np.vstack([I.basis, A.basis])) == 12


def test_ideal_check(sl2q):
    L = sl2q.algebra
    Z = zeros((3, 3))
    assert ideal_check_I(L, sl2q.maps["R1"], Z)
    D = build_double(L, Z, Z)
    for a in identity(3):
        for b in identity(3):
            assert is_zero(D.product(D.i(a), D.i(b)))


def test_decompose(sl2q, sl2c6):
    L = sl2q.algebra
    I3 = identity(3)
    I, J = double_decompose(L, -I3, I3)
    D = build_double(L, -I3, I3)
    x = L.vector({"x": 1})
    assert array_equal(D.i(x), D.bar(x)) and array_equal(D.j(x), D.lift(x) - D.bar(x))
    I6, J6 = double_decompose(sl2c6.algebra, sl2c6.maps["B"], sl2c6.maps["2phi"])
    assert I6.dim == J6.dim == 6
    with pytest.raises(ValueError):
        double_decompose(L, zeros((3, 3)), zeros((3, 3)))


def test_mcybe(sl2q):
    L, m = sl2q.algebra, sl2q.maps
    for lam in (1, 2, Fraction(-3, 2)):
        assert is_zero(mcybe_residual(L, lam * identity(3), lam))
    assert is_zero(mcybe_residual(L, m["R2"], 1))
    assert not is_zero(mcybe_residual(L, m["R1"], 1))
    B = rb_from_mcybe(L, m["R2"], 1)
    assert array_equal(B, m["B2"]) and rb_check(L, B, identity(3))


def test_r_matrix(sl2q, sl2c6):
    L, m = sl2q.algebra, sl2q.maps
    assert r_matrix_check(L, m["R1"])
    assert r_matrix_check(L, m["R2"])
    assert r_matrix_check(L, m["R3"])
    assert r_matrix_check(sl2c6.algebra, sl2c6.maps["R"])
