"""sl2(C) viewed as a 6-dimensional algebra over Q.

Its centroid is Q[phi] with phi^2 = -id (multiplication by i), so the
algebra is simple but not absolutely simple.  A Rota-Baxter operator B of
weight 2 phi produces a factorizable r-matrix, and the double splits into
two copies of the algebra.

Run: python3 demos/six_dim_pipeline.py
"""
from liebax import absolute_simplicity, centroid_basis, classify_nonskew, fixture, rb_check
from liebax.forms import adjoint_map, tensor_from_map
from liebax.linalg import array_equal, identity, inverse, is_zero
from liebax.rota import double_decompose, rb_transform
from liebax.tensor import cybe_residual, tensor_invariance_check

F = fixture("sl2c6")
L, G, m = F.algebra, F.form, F.maps
phi, psi, B, w = m["phi"], m["psi"], m["B"], m["2phi"]

print("centroid dimension:", centroid_basis(L).dim)
print("phi^2 = -id:", array_equal(phi @ phi, -identity(6)))
print("simplicity:", absolute_simplicity(L).value)

# complex conjugation flips the sign of phi
print("psi^-1 phi psi = -phi:", array_equal(inverse(psi) @ phi @ psi, -phi))

print("B is Rota-Baxter of weight 2phi:", rb_check(L, B, w))
print("B + B* + 2phi = 0:", is_zero(B + adjoint_map(B, G) + w))
R2, w2 = rb_transform(L, B, w, "reflect")
print("reflected operator -2phi - B also Rota-Baxter:", rb_check(L, R2, w2))

r_B = tensor_from_map(B, G)
print("tensor of B matches the fixture r_B:", array_equal(r_B, F.tensors["r_B"]))
print("CYBE residual zero:", is_zero(cybe_residual(L, r_B)))
print("symmetric part invariant:", tensor_invariance_check(L, r_B + r_B.T))
rep = classify_nonskew(L, G, r_B)
print("verdict:", rep.verdict.value, "| weight recovered as 2phi:", array_equal(rep.mu, w))

I, J = double_decompose(L, B, w)
print("double splits as", I.dim, "+", J.dim)
