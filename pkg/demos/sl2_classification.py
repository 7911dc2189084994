"""Classify three cobrackets on sl2 over Q and look at their doubles.

Run: python3 demos/sl2_classification.py
"""
from liebax import classify, fixture, theta
from liebax.bialg import double_diagnostics

F = fixture("sl2q")
L, G = F.algebra, F.form
x, h = L.index("x"), L.index("h")

for name in ("r1", "r2", "r3"):
    r = F.tensors[name]
    th = theta(L, G, r)
    print(f"== {name}")
    print("theta(x, h) =", " + ".join(f"{v}*{b}" for v, b in zip(th[x, h], L.basis) if v) or "0")
    rep = classify(L, G, r)
    print(rep.to_text())
    # the double carries the verdict: abelian ideal, split, or a 2-dim centroid
    print("double:", double_diagnostics(L, G, r, rep))
    print()
