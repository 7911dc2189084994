"""Exact scalars: rationals and elements of a single quadratic extension Q(sqrt d).

Rationals are plain :class:`fractions.Fraction` values (ints are accepted
wherever a rational is).  :class:`QuadScalar` carries its discriminant, and
arithmetic between elements of different extensions raises ``ValueError``.
"""
from __future__ import annotations

import math
from fractions import Fraction
from numbers import Rational as _RationalABC
from typing import Optional, Tuple, Union

from sympy import factorint

Rational = Fraction
Scalar = Union[int, Fraction, "QuadScalar"]


def rational_sqrt(q) -> Optional[Fraction]:
    """Non-negative rational square root of ``q``, or ``None`` if irrational."""
    q = Fraction(q)
    if q < 0:
        return None
    num, den = q.numerator, q.denominator
    rn, rd = math.isqrt(num), math.isqrt(den)
    if rn * rn == num and rd * rd == den:
        return Fraction(rn, rd)
    return None


def _squarefree_int(n: int) -> Tuple[int, int]:
    # n = f**2 * d with d square-free (sign kept in d)
    sign = -1 if n < 0 else 1
    d, f = 1, 1
    for p, e in factorint(abs(n)).items():
        f *= p ** (e // 2)
        if e % 2:
            d *= p
    return sign * d, f


def squarefree_part(q) -> Tuple[int, Fraction]:
    """Write ``q = f**2 * d`` with ``d`` a square-free integer.

    Returns ``(d, f)`` with ``f > 0``.  Raises ``ValueError`` for ``q == 0``.
    """
    q = Fraction(q)
    if q == 0:
        raise ValueError("squarefree_part of zero is undefined")
    # p/s = p*s / s**2
    d, f = _squarefree_int(q.numerator * q.denominator)
    return d, Fraction(f, q.denominator)


class QuadScalar:
    """The element ``a + b*sqrt(d)`` of Q(sqrt d), ``d`` square-free, ``d != 0, 1``."""

    __slots__ = ("a", "b", "d")

    def __init__(self, a=0, b=0, d: int = -1):
        d = int(d)
        if d in (0, 1) or _squarefree_int(d)[1] != 1:
            raise ValueError(f"discriminant must be square-free and not 0 or 1, got {d}")
        object.__setattr__(self, "a", Fraction(a))
        object.__setattr__(self, "b", Fraction(b))
        object.__setattr__(self, "d", d)

    def __setattr__(self, name, value):
        raise AttributeError("QuadScalar is immutable")

    @classmethod
    def sqrt_of(cls, d: int) -> "QuadScalar":
        return cls(0, 1, d)

    def _coerce(self, other) -> Optional["QuadScalar"]:
        if isinstance(other, QuadScalar):
            if other.d != self.d:
                raise ValueError(f"cannot mix Q(sqrt {self.d}) and Q(sqrt {other.d})")
            return other
        if isinstance(other, (int, _RationalABC)):
            return QuadScalar(other, 0, self.d)
        return None

    def conjugate(self) -> "QuadScalar":
        return QuadScalar(self.a, -self.b, self.d)

    def norm(self) -> Fraction:
        return self.a * self.a - self.d * self.b * self.b

    @property
    def is_rational(self) -> bool:
        return self.b == 0

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadScalar(self.a + o.a, self.b + o.b, self.d)

    __radd__ = __add__

    def __neg__(self):
        return QuadScalar(-self.a, -self.b, self.d)

    def __pos__(self):
        return self

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadScalar(self.a - o.a, self.b - o.b, self.d)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadScalar(
            self.a * o.a + self.d * self.b * o.b,
            self.a * o.b + self.b * o.a,
            self.d,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * quad_inverse(o)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * quad_inverse(self)

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return quad_inverse(self) ** (-k)
        out = QuadScalar(1, 0, self.d)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, QuadScalar):
            if other.d != self.d:
                # distinct fields meet only in Q
                return self.b == 0 and other.b == 0 and self.a == other.a
            return self.a == other.a and self.b == other.b
        if isinstance(other, (int, _RationalABC)):
            return self.b == 0 and self.a == other
        return NotImplemented

    def __hash__(self):
        if self.b == 0:
            return hash(self.a)
        return hash((self.a, self.b, self.d))

    def __bool__(self):
        return self.a != 0 or self.b != 0

    def __repr__(self):
        return f"QuadScalar({self.a}, {self.b}, {self.d})"

    def __str__(self):
        if self.b == 0:
            return str(self.a)
        root = f"sqrt({self.d})"
        coeff = "" if self.b == 1 else "-" if self.b == -1 else f"{self.b}*"
        if self.a == 0:
            return f"{coeff}{root}"
        sign = "+" if self.b > 0 else "-"
        mag = abs(self.b)
        coeff = "" if mag == 1 else f"{mag}*"
        return f"{self.a}{sign}{coeff}{root}"


def quad_inverse(z: QuadScalar) -> QuadScalar:
    """Inverse of a nonzero element, via conjugate over the norm."""
    if not z:
        raise ZeroDivisionError("inverse of zero")
    n = z.norm()
    assert n != 0, "norm of nonzero element vanished; d is not square-free"
    return QuadScalar(z.a / n, -z.b / n, z.d)


def field_of(x) -> Optional[int]:
    """Discriminant of the field holding ``x`` (``None`` for Q)."""
    return x.d if isinstance(x, QuadScalar) else None


def to_field(x, d: Optional[int]):
    """Coerce ``x`` into Q (``d is None``) or Q(sqrt d)."""
    if d is None:
        if isinstance(x, QuadScalar):
            if x.b != 0:
                raise ValueError(f"{x} is not rational")
            return x.a
        return Fraction(x)
    if isinstance(x, QuadScalar):
        if x.d != d and x.b != 0:
            raise ValueError(f"cannot move {x} into Q(sqrt {d})")
        return QuadScalar(x.a, x.b, d)
    return QuadScalar(x, 0, d)


def field_sqrt(z, d: Optional[int] = None):
    """Square root of ``z`` inside its own field, or ``None``.

    For rational ``z`` and ``d`` given, the root is searched in Q(sqrt d).
    Solving ``(s + t sqrt d)**2 = a + b sqrt d`` gives ``s**2 + d t**2 = a``
    and ``2 s t = b``; eliminating ``s`` leaves a quadratic in ``t**2``.
    """
    if isinstance(z, QuadScalar):
        d = z.d
        a, b = z.a, z.b
    else:
        a, b = Fraction(z), Fraction(0)
    if d is None:
        return rational_sqrt(a)
    if b == 0:
        s = rational_sqrt(a)
        if s is not None:
            return QuadScalar(s, 0, d)
        t = rational_sqrt(a / d)
        if t is not None:
            return QuadScalar(0, t, d)
        return None
    # t != 0 and s = b / (2t):  4 d u**2 - 4 a u + b**2 = 0 with u = t**2
    disc = rational_sqrt(16 * a * a - 16 * d * b * b)
    if disc is None:
        return None
    for u in ((4 * a + disc) / (8 * d), (4 * a - disc) / (8 * d)):
        t = rational_sqrt(u)
        if t is not None and t != 0:
            return QuadScalar(b / (2 * t), t, d)
    return None


def parse_scalar(obj, d: Optional[int] = None):
    """Parse ``"p/q"``, ``"p"``, ints, or ``{"a":..,"b":..,"d":..}``."""
    if isinstance(obj, dict):
        try:
            z = QuadScalar(Fraction(str(obj["a"])), Fraction(str(obj.get("b", 0))), int(obj["d"]))
        except KeyError as exc:
            raise ValueError(f"quadratic scalar missing key {exc}") from None
        return to_field(z, d) if d is not None else z
    if isinstance(obj, bool):
        raise ValueError(f"not a scalar: {obj!r}")
    if isinstance(obj, int):
        value = Fraction(obj)
    elif isinstance(obj, str):
        try:
            value = Fraction(obj.strip())
        except (ValueError, ZeroDivisionError):
            raise ValueError(f"not a rational: {obj!r}") from None
    else:
        raise ValueError(f"not a scalar: {obj!r}")
    return to_field(value, d) if d is not None else value


def format_scalar(x):
    """Serialize: rationals as ``"p/q"``/``"p"``, quad scalars as dicts."""
    if isinstance(x, QuadScalar):
        return {"a": str(x.a), "b": str(x.b), "d": x.d}
    return str(Fraction(x))
