"""Seeded samplers of operators and tensors on sl2, shared by property and acceptance tests.

Uniformly random operators are almost never Rota-Baxter and random tensors
almost never solve the CYBE, so each sampler mixes three pools: uniform
draws, known positives moved by a random automorphism, and near misses
(a known positive plus one elementary matrix).
"""
from fractions import Fraction

import numpy as np

from liebax.liealg import adjoint, killing_form
from liebax.linalg import exact, identity, inverse, zeros
from liebax.rota import split_rb
from liebax.linalg import Subspace


def small(rng, lo=-3, hi=3):
    return Fraction(int(rng.integers(lo, hi + 1)))


def random_matrix(rng, n, lo=-3, hi=3):
    return exact([[small(rng, lo, hi) for _ in range(n)] for _ in range(n)])


def exp_nilpotent(A):
    """``exp(A)`` for nilpotent ``A`` (finite sum)."""
    n = A.shape[0]
    out, term = identity(n), identity(n)
    for k in range(1, n + 1):
        term = term @ A * Fraction(1, k)
        out = out + term
    return out


def random_automorphism(L, rng):
    """Product of ``exp(t ad_x)`` and ``exp(s ad_y)`` on sl2 with small t, s."""
    x, y = L.vector({"x": 1}), L.vector({"y": 1})
    phi = identity(L.dim)
    for _ in range(int(rng.integers(1, 3))):
        phi = exp_nilpotent(small(rng, -2, 2) * adjoint(L, x)) @ phi
        phi = exp_nilpotent(small(rng, -2, 2) * adjoint(L, y)) @ phi
    return phi


def elementary(n, i, j):
    E = zeros((n, n))
    E[i, j] = Fraction(1)
    return E


def rb_positives(fx, lam):
    """Rota-Baxter operators of weight ``lam * id`` on sl2."""
    L, m = fx.algebra, fx.maps
    I = identity(3)
    borel = Subspace.span([L.vector({"x": 1}), L.vector({"h": 1})], 3)
    nil = Subspace.span([L.vector({"y": 1})], 3)
    out = [zeros((3, 3)), -lam * I, lam * m["B2"], -lam * I - lam * m["B2"]]
    if lam == 0:
        out += [k * m["R1"] for k in (1, 2, -3)]
    else:
        out.append(split_rb(L, borel, nil, lam * I))
    return out


def sample_rb(fx, rng):
    """``(R, lam, kind)`` with kind in {"uniform", "positive", "near"}."""
    L = fx.algebra
    lam = small(rng)
    pick = rng.random()
    if pick < 0.4:
        return random_matrix(rng, 3), lam, "uniform"
    pos = rb_positives(fx, lam)
    R = pos[int(rng.integers(len(pos)))]
    phi = random_automorphism(L, rng)
    R = phi @ R @ inverse(phi)
    if pick < 0.75:
        return R, lam, "positive"
    i, j = int(rng.integers(3)), int(rng.integers(3))
    return R + small(rng, 1, 2) * elementary(3, i, j), lam, "near"


def casimir_killing(L):
    return inverse(killing_form(L))


def skew_basis(L):
    e = identity(L.dim)
    return [np.outer(e[p], e[q]) - np.outer(e[q], e[p]) for p in range(L.dim) for q in range(p + 1, L.dim)]


def sample_skew(L, rng, lo=-3, hi=3):
    r = zeros((L.dim, L.dim))
    for w in skew_basis(L):
        r = r + small(rng, lo, hi) * w
    return r


def cybe_positives(fx):
    """Tensors ``skew + s * t_kappa`` on sl2 that solve the CYBE."""
    L = fx.algebra
    t = casimir_killing(L)
    t1, t2 = fx.tensors["r1"], fx.tensors["r2"]
    hy = np.outer(L.vector({"h": 1}), L.vector({"y": 1}))
    return [t1, hy - hy.T, t2 + 4 * t, t2 - 4 * t, zeros((3, 3))]


def sample_cybe(fx, rng):
    """``(r, kind)`` with ``r = skew + s * t_kappa``."""
    L = fx.algebra
    pick = rng.random()
    t = casimir_killing(L)
    if pick < 0.4:
        return sample_skew(L, rng) + small(rng) * t, "uniform"
    pos = cybe_positives(fx)
    r = small(rng, 1, 3) * pos[int(rng.integers(len(pos)))]
    phi = random_automorphism(L, rng)
    r = phi @ r @ phi.T
    if pick < 0.75:
        return r, "positive"
    return r + small(rng, 1, 2) * skew_basis(L)[int(rng.integers(3))], "near"
