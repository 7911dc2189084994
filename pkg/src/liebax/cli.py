"""``liebax`` command line.

Exit status: 0 for accepted inputs and bialgebra verdicts, 1 for rejections
(failed checks, nonzero residuals, NOT_BIALGEBRA), 2 for input errors.
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import Optional


from . import io
from .bialg import Verdict, absolute_simplicity, classify, classify_nonskew
from .centroid import centroid_basis
from .fixtures import FIXTURES, fixture
from .forms import invariance_check, is_nondegenerate, is_symmetric
from .liealg import extend_scalars, jacobi_check, killing_form
from .linalg import array_equal, exact, identity, is_zero
from .rota import build_double, rb_residual
from .scalars import format_scalar, parse_scalar
from .tensor import drinfeld_double


class Context:
    def __init__(self, args):
        self.args = args
        self.fixture = None
        if args.fixture:
            try:
                self.fixture = fixture(args.fixture)
            except KeyError as exc:
                raise io.InputError(str(exc.args[0])) from None
        if args.algebra:
            self.algebra = io.algebra_from_doc(io.load_json(args.algebra), args.algebra)
        elif self.fixture is not None:
            self.algebra = self.fixture.algebra
        else:
            raise io.InputError("need --algebra FILE or --fixture NAME")
        self.d = args.extend
        if self.d is not None:
            try:
                self.algebra = extend_scalars(self.algebra, self.d)
            except ValueError as exc:
                raise io.InputError(f"--extend: {exc}") from None

    @property
    def n(self):
        return self.algebra.dim

    def _named(self, value, table, loader):
        if self.fixture is not None and value in getattr(self.fixture, table):
            return exact(getattr(self.fixture, table)[value], self.algebra.field)
        return loader(io.load_json(value), self.n, self.algebra.field, value)

    def form(self, required=True):
        if self.args.form:
            return io.matrix_from_doc(io.load_json(self.args.form), self.n, self.algebra.field, self.args.form)
        if self.fixture is not None and not self.args.algebra:
            return exact(self.fixture.form, self.algebra.field)
        K = killing_form(self.algebra)
        if required and not is_nondegenerate(K):
            raise io.InputError("no --form given and the Killing form is degenerate")
        return K

    def tensor(self):
        if not self.args.tensor:
            raise io.InputError("need --tensor FILE|NAME")
        return self._named(self.args.tensor, "tensors", io.tensor_from_doc)

    def map(self):
        if not self.args.map:
            raise io.InputError("need --map FILE|NAME")
        return self._named(self.args.map, "maps", io.matrix_from_doc)

    def weight(self):
        w = self.args.weight
        if w is None:
            raise io.InputError("need --weight FILE|NAME|SCALAR")
        if self.fixture is not None and w in self.fixture.maps:
            return exact(self.fixture.maps[w], self.algebra.field)
        try:
            lam = parse_scalar(w, self.algebra.field)
        except ValueError:
            return io.matrix_from_doc(io.load_json(w), self.n, self.algebra.field, w)
        return lam * identity(self.n, self.algebra.field)

    def require_lie(self):
        if not jacobi_check(self.algebra):
            raise io.InputError("structure constants violate antisymmetry or the Jacobi identity")


def _emit(args, doc: dict, text: str):
    if args.format == "structured":
        print(json.dumps(doc, indent=2))
    else:
        print(text)


def _table_summary(T):
    bad = [(i, j) for i in range(T.shape[0]) for j in range(T.shape[1]) if not is_zero(T[i, j])]
    return bad


def cmd_check(ctx: Context, args) -> int:
    L = ctx.algebra
    res = {"jacobi": jacobi_check(L)}
    if args.form or ctx.fixture is not None:
        G = ctx.form()
        res["form_symmetric"] = is_symmetric(G)
        res["form_invariant"] = invariance_check(L, G)
        res["form_nondegenerate"] = is_nondegenerate(G)
    if args.tensor:
        r = ctx.tensor()
        res["tensor_skew"] = array_equal(r, -r.T)
    # skewness is informational: non-skew tensors are classified too
    ok = all(v for k, v in res.items() if k != "tensor_skew")
    _emit(args, res, "\n".join(f"{k}: {v}" for k, v in res.items()))
    return 0 if ok else 1


def cmd_centroid(ctx: Context, args) -> int:
    ctx.require_lie()
    cb = centroid_basis(ctx.algebra)
    doc = {
        "dimension": cb.dim,
        "basis": [io.matrix_to_doc(el)["matrix"] for el in cb.elements],
        "simplicity": absolute_simplicity(ctx.algebra).value,
    }
    lines = [f"dimension: {cb.dim}", f"simplicity: {doc['simplicity']}"]
    for k, el in enumerate(cb.elements):
        lines.append(f"basis[{k}]: " + "[" + "; ".join(" ".join(str(v) for v in row) for row in el) + "]")
    _emit(args, doc, "\n".join(lines))
    return 0


def cmd_rb(ctx: Context, args) -> int:
    ctx.require_lie()
    L = ctx.algebra
    T = rb_residual(L, ctx.map(), ctx.weight())
    bad = _table_summary(T)
    names = L.basis
    doc = {
        "residual_zero": not bad,
        "nonzero_entries": [
            {"x": names[i], "y": names[j], "value": [format_scalar(v) for v in T[i, j]]} for i, j in bad
        ],
    }
    lines = [f"residual_zero: {not bad}"]
    for i, j in bad:
        lines.append(f"  ({names[i]}, {names[j]}): " + " ".join(str(v) for v in T[i, j]))
    _emit(args, doc, "\n".join(lines))
    return 0 if not bad else 1


def cmd_classify(ctx: Context, args) -> int:
    ctx.require_lie()
    L = ctx.algebra
    G, r = ctx.form(), ctx.tensor()
    try:
        rep = classify(L, G, r) if array_equal(r, -r.T) else classify_nonskew(L, G, r)
    except ValueError as exc:
        raise io.InputError(str(exc)) from None
    _emit(args, rep.to_dict(), rep.to_text())
    return 1 if (rep.verdict == Verdict.NOT_BIALGEBRA or rep.rejected) else 0


def cmd_double(ctx: Context, args) -> int:
    ctx.require_lie()
    L = ctx.algebra
    if args.tensor:
        try:
            D = drinfeld_double(L, ctx.form(), ctx.tensor())
        except ValueError as exc:
            print(f"rejected: {exc}", file=sys.stderr)
            return 1
    else:
        D = build_double(L, ctx.map(), ctx.weight())
    print(json.dumps(io.algebra_to_doc(D), indent=2))
    return 0


def cmd_fixtures(args) -> int:
    if not args.name:
        for name in FIXTURES:
            print(f"{name}: {fixture(name).description}")
        return 0
    try:
        F = fixture(args.name)
    except KeyError as exc:
        raise io.InputError(str(exc.args[0])) from None
    doc = {
        "name": F.name,
        "algebra": io.algebra_to_doc(F.algebra),
        "form": io.matrix_to_doc(F.form),
        "tensors": {k: io.tensor_to_doc(v) for k, v in F.tensors.items()},
        "maps": {k: io.matrix_to_doc(v) for k, v in F.maps.items()},
    }
    print(json.dumps(doc, indent=2))
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="liebax", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("--algebra", help="algebra JSON file")
        sp.add_argument("--fixture", help="built-in fixture name")
        sp.add_argument("--form", help="form JSON file (default: fixture form, else Killing form)")
        sp.add_argument("--tensor", help="tensor JSON file or fixture tensor name")
        sp.add_argument("--map", help="map JSON file or fixture map name")
        sp.add_argument("--weight", help="weight map: JSON file, fixture map name, or scalar")
        sp.add_argument("--format", choices=["text", "structured"], default="text")
        sp.add_argument("--extend", type=int, help="work over Q(sqrt d)")

    for name, help_ in [
        ("check", "verify Jacobi, form invariance and nondegeneracy"),
        ("centroid", "centroid basis and dimension"),
        ("rb", "Rota-Baxter residual of --map with --weight"),
        ("classify", "classify the cobracket of --tensor"),
        ("double", "emit D_{R,mu} (--map/--weight) or the classical double (--tensor)"),
    ]:
        common(sub.add_parser(name, help=help_))
    fx = sub.add_parser("fixtures", help="list built-in fixtures or emit one")
    fx.add_argument("name", nargs="?")
    return p


COMMANDS = {
    "check": cmd_check,
    "centroid": cmd_centroid,
    "rb": cmd_rb,
    "classify": cmd_classify,
    "double": cmd_double,
}


def main(argv: Optional[list] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "fixtures":
            return cmd_fixtures(args)
        return COMMANDS[args.command](Context(args), args)
    except io.InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
