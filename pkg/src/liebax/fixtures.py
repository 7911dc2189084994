"""Built-in quadratic Lie algebras with named tensors and operators.

Fixture files live in ``liebax/data`` and name everything by basis labels:
a form is a list of ``[a, b, value]`` (filled symmetrically), a tensor a list
of ``[a, b, coeff]`` for ``coeff * a (x) b``, and a map a table of images.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from importlib import resources
from typing import Dict, List

import numpy as np

from .io import InputError, algebra_from_doc
from .liealg import LieAlgebra
from .linalg import zeros
from .scalars import parse_scalar

FIXTURES = ("sl2q", "sl2c6")


@dataclass(eq=False)
class RBCase:
    map: str
    weight: str
    verified: bool


@dataclass(eq=False)
class Fixture:
    name: str
    description: str
    algebra: LieAlgebra
    form: np.ndarray
    tensors: Dict[str, np.ndarray] = field(default_factory=dict)
    maps: Dict[str, np.ndarray] = field(default_factory=dict)
    rb_instances: List[RBCase] = field(default_factory=list)


def _form(L: LieAlgebra, terms, where):
    G = zeros((L.dim, L.dim), L.field)
    for k, (a, b, v) in enumerate(terms):
        s = parse_scalar(v, L.field)
        i, j = _idx(L, a, f"{where}[{k}]"), _idx(L, b, f"{where}[{k}]")
        G[i, j] = s
        G[j, i] = s
    return G


def _idx(L: LieAlgebra, name, where):
    try:
        return L.index(name)
    except ValueError:
        raise InputError(f"{where}: unknown basis element {name!r}") from None


def _tensor(L: LieAlgebra, terms, where):
    r = zeros((L.dim, L.dim), L.field)
    for k, (a, b, v) in enumerate(terms):
        r[_idx(L, a, f"{where}[{k}]"), _idx(L, b, f"{where}[{k}]")] += parse_scalar(v, L.field)
    return r


def _map(L: LieAlgebra, images, where):
    M = zeros((L.dim, L.dim), L.field)
    for src, img in images.items():
        j = _idx(L, src, where)
        for dst, v in img.items():
            M[_idx(L, dst, f"{where}.{src}"), j] = parse_scalar(v, L.field)
    return M


def fixture_from_doc(doc) -> Fixture:
    name = doc["name"]
    L = algebra_from_doc(doc["algebra"], f"{name}.algebra")
    return Fixture(
        name=name,
        description=doc.get("description", ""),
        algebra=L,
        form=_form(L, doc["form"]["terms"], f"{name}.form"),
        tensors={k: _tensor(L, v["terms"], f"{name}.tensors.{k}") for k, v in doc.get("tensors", {}).items()},
        maps={k: _map(L, v["images"], f"{name}.maps.{k}") for k, v in doc.get("maps", {}).items()},
        rb_instances=[RBCase(**c) for c in doc.get("rb_instances", [])],
    )


def fixture(name: str) -> Fixture:
    if name not in FIXTURES:
        raise KeyError(f"unknown fixture {name!r}; available: {', '.join(FIXTURES)}")
    text = resources.files("liebax").joinpath("data", f"{name}.json").read_text(encoding="utf-8")
    return fixture_from_doc(json.loads(text))
