"""JSON documents for algebras, matrices (forms and maps) and tensors.

Algebra::

    {"dim": 3, "basis": ["x", "h", "y"],
     "brackets": [{"i": 0, "j": 1, "coeffs": ["-2", "0", "0"]}, ...],
     "field": {"kind": "Q"}}

Indices are 0-based and every entry needs ``i < j``; unlisted pairs bracket
to zero.  Forms and maps are ``{"matrix": [[...], ...]}`` (row-major; for a
map, column ``j`` is the image of ``e_j``).  Tensors are ``{"coeffs": ...}``
with the row index in the first tensor slot.  Scalars are ``"p/q"`` strings,
integers, or ``{"a": "p/q", "b": "p/q", "d": int}``.

Every parse error is an :class:`InputError` whose message starts with the
path of the offending value, e.g. ``algebra.brackets[2].coeffs[0]``.
"""
from __future__ import annotations

import json
from typing import Optional

import numpy as np

from .liealg import LieAlgebra
from .linalg import zeros
from .scalars import QuadScalar, format_scalar, parse_scalar


class InputError(ValueError):
    pass


def _scalar(obj, d, where):
    try:
        return parse_scalar(obj, d)
    except ValueError as exc:
        raise InputError(f"{where}: {exc}") from None


def _require(doc, key, where, kind=None):
    if not isinstance(doc, dict):
        raise InputError(f"{where}: expected an object")
    if key not in doc:
        raise InputError(f"{where}: missing key {key!r}")
    val = doc[key]
    if kind is not None and (not isinstance(val, kind) or isinstance(val, bool)):
        raise InputError(f"{where}.{key}: expected {kind.__name__}")
    return val


def parse_field(doc, where="field") -> Optional[int]:
    if doc is None:
        return None
    kind = _require(doc, "kind", where, str)
    if kind == "Q":
        return None
    if kind == "QuadExt":
        d = _require(doc, "d", where, int)
        try:
            QuadScalar(0, 0, d)
        except ValueError as exc:
            raise InputError(f"{where}.d: {exc}") from None
        return d
    raise InputError(f"{where}.kind: unknown field kind {kind!r}")


def field_doc(d: Optional[int]) -> dict:
    return {"kind": "Q"} if d is None else {"kind": "QuadExt", "d": d}


def algebra_from_doc(doc, where="algebra") -> LieAlgebra:
    n = _require(doc, "dim", where, int)
    if n <= 0:
        raise InputError(f"{where}.dim: must be positive")
    d = parse_field(doc.get("field"), f"{where}.field")
    basis = doc.get("basis")
    if basis is not None:
        if not isinstance(basis, list) or len(basis) != n or not all(isinstance(b, str) for b in basis):
            raise InputError(f"{where}.basis: expected {n} strings")
        if len(set(basis)) != n:
            raise InputError(f"{where}.basis: names must be distinct")
    entries = _require(doc, "brackets", where, list)
    c = zeros((n, n, n), d)
    seen = set()
    for k, entry in enumerate(entries):
        loc = f"{where}.brackets[{k}]"
        i = _require(entry, "i", loc, int)
        j = _require(entry, "j", loc, int)
        if not (0 <= i < n and 0 <= j < n):
            raise InputError(f"{loc}: index out of range 0..{n - 1}")
        if i >= j:
            raise InputError(f"{loc}: need i < j (got i={i}, j={j}); antisymmetry supplies the rest")
        if (i, j) in seen:
            raise InputError(f"{loc}: duplicate pair ({i}, {j})")
        seen.add((i, j))
        coeffs = _require(entry, "coeffs", loc, list)
        if len(coeffs) != n:
            raise InputError(f"{loc}.coeffs: expected {n} entries, got {len(coeffs)}")
        for m, v in enumerate(coeffs):
            s = _scalar(v, d, f"{loc}.coeffs[{m}]")
            c[i, j, m] = s
            c[j, i, m] = -s
    return LieAlgebra(c, basis, d)


def algebra_to_doc(L: LieAlgebra) -> dict:
    brackets = []
    for i in range(L.dim):
        for j in range(i + 1, L.dim):
            v = L.structure[i, j]
            if any(x != 0 for x in v):
                brackets.append({"i": i, "j": j, "coeffs": [format_scalar(x) for x in v]})
    return {"dim": L.dim, "basis": list(L.basis), "brackets": brackets, "field": field_doc(L.field)}


def _square(rows, n, d, where):
    if not isinstance(rows, list) or len(rows) != n:
        raise InputError(f"{where}: expected {n} rows")
    out = zeros((n, n), d)
    for i, row in enumerate(rows):
        if not isinstance(row, list) or len(row) != n:
            raise InputError(f"{where}[{i}]: expected {n} entries")
        for j, v in enumerate(row):
            out[i, j] = _scalar(v, d, f"{where}[{i}][{j}]")
    return out


def matrix_from_doc(doc, n: int, d: Optional[int] = None, where="matrix") -> np.ndarray:
    return _square(_require(doc, "matrix", where), n, d, f"{where}.matrix")


def matrix_to_doc(M) -> dict:
    return {"matrix": [[format_scalar(v) for v in row] for row in M]}


def tensor_from_doc(doc, n: int, d: Optional[int] = None, where="tensor") -> np.ndarray:
    return _square(_require(doc, "coeffs", where), n, d, f"{where}.coeffs")


def tensor_to_doc(r) -> dict:
    return {"coeffs": [[format_scalar(v) for v in row] for row in r]}


def load_json(path: str):
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}:{exc.lineno}:{exc.colno}: {exc.msg}") from None
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror}") from None
