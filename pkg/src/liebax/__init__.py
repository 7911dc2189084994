"""Exact computations with Lie algebras, Rota-Baxter operators of centroid weight, and Lie bialgebras."""
from .scalars import QuadScalar, Rational, quad_inverse, rational_sqrt, squarefree_part
from .liealg import LieAlgebra, bracket, center, derived_subalgebra, jacobi_check, killing_form
from .centroid import centroid_basis, centroid_sqrt, is_centrum
from .rota import build_double, double_decompose, ideal_check_I, rb_check, rb_residual, rb_transform
from .tensor import cobracket, cybe_residual, drinfeld_double, dual_algebra
from .bialg import ClassificationReport, Verdict, absolute_simplicity, classify, classify_nonskew, theta
from .fixtures import fixture

__all__ = [
    "QuadScalar", "Rational", "quad_inverse", "rational_sqrt", "squarefree_part",
    "LieAlgebra", "bracket", "center", "derived_subalgebra", "jacobi_check", "killing_form",
    "centroid_basis", "centroid_sqrt", "is_centrum",
    "build_double", "double_decompose", "ideal_check_I", "rb_check", "rb_residual", "rb_transform",
    "cobracket", "cybe_residual", "drinfeld_double", "dual_algebra",
    "ClassificationReport", "Verdict", "absolute_simplicity", "classify", "classify_nonskew", "theta",
    "fixture",
]

__version__ = "0.1.0"
