import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from liebax.forms import adjoint_map, invariance_check, is_nondegenerate, map_from_tensor, tensor_from_map
from liebax.linalg import exact, identity, zeros

mat3 = st.lists(st.integers(-3, 3), min_size=9, max_size=9).map(lambda v: exact(np.array(v).reshape(3, 3)))


def test_invariance_examples(sl2q, sl2c6):
    L, G = sl2q.algebra, sl2q.form
    assert invariance_check(L, G)
    assert not invariance_check(L, identity(3))
    assert invariance_check(L, zeros((3, 3)))
    assert invariance_check(sl2c6.algebra, sl2c6.form)


def test_nondegenerate(sl2q, sl2c6):
    assert is_nondegenerate(sl2q.form) and is_nondegenerate(sl2c6.form)
    assert not is_nondegenerate(zeros((3, 3)))
    with pytest.raises(ValueError):
        adjoint_map(identity(3), zeros((3, 3)))


def test_fixture_operators(sl2q):
    G, m = sl2q.form, sl2q.maps
    for k in "123":
        assert (map_from_tensor(sl2q.tensors["r" + k], G) == m["R" + k]).all()
    assert (adjoint_map(m["R1"], G) == -m["R1"]).all()
    assert (adjoint_map(identity(3), G) == identity(3)).all()
    assert (map_from_tensor(zeros((3, 3)), G) == 0).all()
    assert (tensor_from_map(zeros((3, 3)), G) == 0).all()


def test_map_from_tensor_defining_sum(sl2c6):
    # R_r(e_j) = sum_pq r[p, q] omega(e_p, e_j) e_q, evaluated term by term
    G, r = sl2c6.form, sl2c6.tensors["r_B"]
    R = map_from_tensor(r, G)
    n = 6
    for j in range(n):
        img = [sum(r[p, q] * G[p, j] for p in range(n)) for q in range(n)]
        assert list(R[:, j]) == img


@given(mat3)
def test_adjoint_and_roundtrip(sl2q, R):
    G = sl2q.form
    Rs = adjoint_map(R, G)
    assert (adjoint_map(Rs, G) == R).all()
    assert (R.T @ G == G @ Rs).all()
    r = tensor_from_map(R, G)
    assert (map_from_tensor(r, G) == R).all()
    # adjoint of R_r is the map of the flipped tensor
    assert (map_from_tensor(r.T, G) == Rs).all()
    skew = r - r.T
    assert (adjoint_map(map_from_tensor(skew, G), G) == -map_from_tensor(skew, G)).all()
