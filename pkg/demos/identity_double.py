"""When does the double D_{R,mu} detect that R is not Rota-Baxter?

The subspace I = {x_bar + mu(x) + R(x)} is an ideal exactly for Rota-Baxter
R, but the Jacobi identity of the double is weaker.  For R = id and mu = 0
on sl2 the double is still Lie: it is sl2 acting on a second copy of sl2
whose bracket is -2 times the original.  A rank-one R breaks Jacobi.

Run: python3 demos/identity_double.py
"""
from liebax import build_double, fixture, ideal_check_I, jacobi_check, rb_check
from liebax.linalg import identity, zeros

L = fixture("sl2q").algebra
Z = zeros((3, 3))

E = zeros((3, 3))
E[0, 0] = 1
for label, R in [("R = id", identity(3)), ("R = E_xx", E)]:
    D = build_double(L, R, Z)
    print(f"{label}: rota-baxter={rb_check(L, R, Z)} ideal={ideal_check_I(L, R, Z)} jacobi={jacobi_check(D)}")
