"""2x2 matrices viewed as split quaternions over a field.

With the basis

    i = [[0, 1], [-1, 0]],  j = [[0, 1], [1, 0]],  k = [[1, 0], [0, -1]]

we have i^2 = -1, j^2 = k^2 = 1 and ij = -ji = k. A matrix decomposes as
``A = a0 + a1 i + a2 j + a3 k``; the vector part (a1, a2, a3) is a
:class:`Traceless`. The determinant is the quadratic form
``a0^2 + a1^2 - a2^2 - a3^2`` and its polarisation is :func:`dot`.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Optional, Tuple, Union

from .errors import SingularMatrix, ZeroInput
from .field import Field, Scalar, parse_field


class Mat2:
    """Immutable 2x2 matrix over a :class:`~quatswitch.field.Field`."""

    __slots__ = ("e11", "e12", "e21", "e22")

    def __init__(self, e11: Scalar, e12: Scalar, e21: Scalar, e22: Scalar):
        self.e11, self.e12, self.e21, self.e22 = e11, e12, e21, e22

    @classmethod
    def from_rows(cls, field: Field, rows) -> "Mat2":
        (a, b), (c, d) = rows
        return cls(field(a), field(b), field(c), field(d))

    @classmethod
    def identity(cls, field: Field) -> "Mat2":
        return cls.scalar(field, 1)

    @classmethod
    def zero(cls, field: Field) -> "Mat2":
        return cls.scalar(field, 0)

    @classmethod
    def scalar(cls, field: Field, x) -> "Mat2":
        x = field(x)
        z = field.zero
        return cls(x, z, z, x)

    @classmethod
    def diag(cls, field: Field, x, y) -> "Mat2":
        z = field.zero
        return cls(field(x), z, z, field(y))

    @property
    def field(self) -> Field:
        return self.e11.field

    @property
    def rows(self):
        return ((self.e11, self.e12), (self.e21, self.e22))

    def entries(self):
        return (self.e11, self.e12, self.e21, self.e22)

    def __eq__(self, other):
        if not isinstance(other, Mat2):
            return NotImplemented
        return self.entries() == other.entries()

    def __hash__(self):
        return hash(tuple(e.value for e in self.entries()))

    def __repr__(self):
        rows = [[str(e) for e in row] for row in self.rows]
        return f"Mat2({rows})"

    def __add__(self, other):
        if not isinstance(other, Mat2):
            other = Mat2.scalar(self.field, other)
        return Mat2(self.e11 + other.e11, self.e12 + other.e12,
                    self.e21 + other.e21, self.e22 + other.e22)

    __radd__ = __add__

    def __sub__(self, other):
        if not isinstance(other, Mat2):
            other = Mat2.scalar(self.field, other)
        return Mat2(self.e11 - other.e11, self.e12 - other.e12,
                    self.e21 - other.e21, self.e22 - other.e22)

    def __rsub__(self, other):
        return Mat2.scalar(self.field, other) - self

    def __neg__(self):
        return Mat2(-self.e11, -self.e12, -self.e21, -self.e22)

    def __mul__(self, other):
        if isinstance(other, Mat2):
            a, b, c, d = self.e11, self.e12, self.e21, self.e22
            p, q, r, s = other.e11, other.e12, other.e21, other.e22
            return Mat2(a * p + b * r, a * q + b * s, c * p + d * r, c * q + d * s)
        return Mat2(self.e11 * other, self.e12 * other, self.e21 * other, self.e22 * other)

    def __rmul__(self, other):
        return self * other

    def is_zero(self) -> bool:
        return all(e.is_zero() for e in self.entries())

    def is_scalar(self) -> bool:
        return self.e12.is_zero() and self.e21.is_zero() and self.e11 == self.e22

    def det(self) -> Scalar:
        return self.e11 * self.e22 - self.e12 * self.e21

    def tr(self) -> Scalar:
        return self.e11 + self.e22

    def conjugate(self) -> "Mat2":
        return Mat2(self.e22, -self.e12, -self.e21, self.e11)

    adjugate = conjugate

    def inverse(self) -> "Mat2":
        d = self.det()
        if d.is_zero():
            raise SingularMatrix(f"{self!r} has determinant 0")
        return self.conjugate() * d.inv()

    def is_invertible(self) -> bool:
        return not self.det().is_zero()

    def scalar_part(self) -> Scalar:
        return (self.e11 + self.e22) / 2

    def traceless(self) -> "Traceless":
        return to_pauli(self).vector

    def to_json(self) -> dict:
        return {"field": str(self.field),
                "rows": [[str(e) for e in row] for row in self.rows]}

    @classmethod
    def from_json(cls, obj: dict, field: Optional[Field] = None) -> "Mat2":
        f = field or parse_field(obj["field"])
        return cls.from_rows(f, obj["rows"])


@dataclass(frozen=True)
class Traceless:
    """Vector part a1 i + a2 j + a3 k of a 2x2 matrix."""

    a1: Scalar
    a2: Scalar
    a3: Scalar

    @classmethod
    def of(cls, field: Field, a1, a2, a3) -> "Traceless":
        return cls(field(a1), field(a2), field(a3))

    @classmethod
    def zero(cls, field: Field) -> "Traceless":
        z = field.zero
        return cls(z, z, z)

    @property
    def field(self) -> Field:
        return self.a1.field

    def components(self):
        return (self.a1, self.a2, self.a3)

    def __add__(self, other: "Traceless"):
        return Traceless(self.a1 + other.a1, self.a2 + other.a2, self.a3 + other.a3)

    def __sub__(self, other: "Traceless"):
        return Traceless(self.a1 - other.a1, self.a2 - other.a2, self.a3 - other.a3)

    def __neg__(self):
        return Traceless(-self.a1, -self.a2, -self.a3)

    def __mul__(self, c):
        return Traceless(self.a1 * c, self.a2 * c, self.a3 * c)

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return self.a1.is_zero() and self.a2.is_zero() and self.a3.is_zero()

    def to_mat(self) -> Mat2:
        a1, a2, a3 = self.a1, self.a2, self.a3
        return Mat2(a3, a2 + a1, a2 - a1, -a3)

    def det(self) -> Scalar:
        return self.a1 * self.a1 - self.a2 * self.a2 - self.a3 * self.a3

    def __repr__(self):
        return f"Traceless({self.a1}, {self.a2}, {self.a3})"


@dataclass(frozen=True)
class PauliVec:
    a0: Scalar
    a1: Scalar
    a2: Scalar
    a3: Scalar

    @property
    def vector(self) -> Traceless:
        return Traceless(self.a1, self.a2, self.a3)

    def components(self):
        return (self.a0, self.a1, self.a2, self.a3)


def to_pauli(m: Mat2) -> PauliVec:
    a, b, c, d = m.entries()
    return PauliVec((a + d) / 2, (b - c) / 2, (b + c) / 2, (a - d) / 2)


def from_pauli(v: Union[PauliVec, Tuple]) -> Mat2:
    a0, a1, a2, a3 = v.components() if isinstance(v, PauliVec) else v
    return Mat2(a0 + a3, a2 + a1, a2 - a1, a0 - a3)


def pauli_basis(field: Field):
    """The matrices (1, i, j, k) over ``field``."""
    o, z = field.one, field.zero
    return (Mat2(o, z, z, o), Mat2(z, o, -o, z), Mat2(z, o, o, z), Mat2(o, z, z, -o))


def split(m: Mat2) -> Tuple[Scalar, Traceless]:
    v = to_pauli(m)
    return v.a0, v.vector


def compose(a0: Scalar, a: Traceless) -> Mat2:
    return Mat2.scalar(a.field, a0) + a.to_mat()


# ---------------------------------------------------------------------------
# Products
# ---------------------------------------------------------------------------


def conjugate(m: Mat2) -> Mat2:
    return m.conjugate()


def det(m: Union[Mat2, Traceless]) -> Scalar:
    return m.det()


def tr(m: Mat2) -> Scalar:
    return m.tr()


def inverse(m: Mat2) -> Mat2:
    return m.inverse()


def dot(x, y) -> Scalar:
    """Symmetric bilinear form 1/2 tr(A conj(B)); on traceless parts a1b1 - a2b2 - a3b3."""
    if isinstance(x, Traceless):
        return x.a1 * y.a1 - x.a2 * y.a2 - x.a3 * y.a3
    a1, a2, a3, a4 = x.entries()
    b1, b2, b3, b4 = y.entries()
    return (a1 * b4 - a2 * b3 - a3 * b2 + a4 * b1) / 2


def cross(a: Traceless, b: Traceless) -> Traceless:
    """Hyperbolic cross product, the traceless part of ab (equal to (ab - ba)/2)."""
    return Traceless(a.a3 * b.a2 - a.a2 * b.a3,
                     a.a3 * b.a1 - a.a1 * b.a3,
                     a.a1 * b.a2 - a.a2 * b.a1)


def cross_via_matrices(a: Traceless, b: Traceless) -> Traceless:
    """Same product read off the displayed 2x2 component formula."""
    am, bm = a.to_mat(), b.to_mat()
    al1, al2, al3 = am.e11, am.e12, am.e21
    be1, be2, be3 = bm.e11, bm.e12, bm.e21
    d = (al2 * be3 - al3 * be2) / 2
    m = Mat2(d, al1 * be2 - al2 * be1, al3 * be1 - al1 * be3, -d)
    return to_pauli(m).vector


def dot_e(a: Traceless, b: Traceless) -> Scalar:
    return a.a1 * b.a1 + a.a2 * b.a2 + a.a3 * b.a3


def cross_e(a: Traceless, b: Traceless) -> Traceless:
    return Traceless(a.a2 * b.a3 - a.a3 * b.a2,
                     a.a3 * b.a1 - a.a1 * b.a3,
                     a.a1 * b.a2 - a.a2 * b.a1)


def rho(a: Traceless) -> Traceless:
    return Traceless(-a.a1, a.a2, a.a3)


def triple(a: Traceless, b: Traceless, c: Traceless) -> Scalar:
    """Scalar triple product, minus the determinant of the component rows."""
    d = (a.a1 * (b.a2 * c.a3 - b.a3 * c.a2)
         - a.a2 * (b.a1 * c.a3 - b.a3 * c.a1)
         + a.a3 * (b.a1 * c.a2 - b.a2 * c.a1))
    return -d


# ---------------------------------------------------------------------------
# Dependency predicates
# ---------------------------------------------------------------------------


def is_isotropic(a: Traceless) -> bool:
    return not a.is_zero() and a.det().is_zero()


def pair_dependent(a: Traceless, b: Traceless) -> bool:
    return cross(a, b).is_zero()


def triple_dependent(a: Traceless, b: Traceless) -> bool:
    """Whether a, b, a x b are linearly dependent, i.e. det(a)det(b) = (a.b)^2."""
    ab = dot(a, b)
    return a.det() * b.det() == ab * ab


def commutes(x: Mat2, y: Mat2) -> bool:
    return pair_dependent(x.traceless(), y.traceless())


# ---------------------------------------------------------------------------
# Group conjugation
# ---------------------------------------------------------------------------


def group_conjugate(m, c: Mat2):
    """C^-1 M C; accepts a Mat2 or a Traceless (returned in kind)."""
    ci = c.inverse()
    if isinstance(m, Traceless):
        return (ci * m.to_mat() * c).traceless()
    return ci * m * c


class NeedsExtension(Exception):
    """A square root required by the canonicalisation is missing from the field.

    Returned (not raised) by :func:`canonicalize_traceless`.
    """

    def __init__(self, radicand: Scalar):
        self.radicand = radicand
        super().__init__(f"no square root of {radicand} in {radicand.field}")

    def __repr__(self):
        return f"NeedsExtension({self.radicand})"


def canonicalize_traceless(a: Traceless):
    """Conjugate ``a`` into the (i, j) plane.

    Returns ``(C, a2)`` with ``C^-1 a C == a2`` and ``a2.a3 == 0``, or a
    :class:`NeedsExtension` when the square root of a2^2 + a3^2 is not in
    the field.

    When a2^2 + a3^2 = r^2 != 0 the conjugator is ``(r - a2) - a3 i`` and the
    image is ``a1 i - r j``. When a2^2 + a3^2 = 0 with a2, a3 != 0 a unipotent
    shear clears the diagonal (``1 + I i`` is singular there since I^2 = -1).
    """
    f = a.field
    if a.is_zero():
        raise ZeroInput("cannot canonicalise the zero vector")
    if a.a3.is_zero():
        return Mat2.identity(f), a
    s = a.a2 * a.a2 + a.a3 * a.a3
    if not s.is_zero():
        r = f.sqrt_opt(s)
        if r is None:
            return NeedsExtension(s)
        one, i_mat = Mat2.identity(f), pauli_basis(f)[1]
        c = one * (r - a.a2) - i_mat * a.a3
        if c.det().is_zero():
            raise AssertionError("conjugator is singular")
    else:
        c = _diagonal_clearing_shear(a)
    image = group_conjugate(a, c)
    if not image.a3.is_zero():
        raise AssertionError("canonicalisation left a k component")
    return c, image


def _diagonal_clearing_shear(a: Traceless) -> Mat2:
    f = a.field
    m = a.to_mat()
    alpha, beta, gamma = m.e11, m.e12, m.e21
    one, zero = f.one, f.zero
    if not beta.is_zero():
        return Mat2(one, zero, -alpha / beta, one)
    if not gamma.is_zero():
        return Mat2(one, alpha / gamma, zero, one)
    raise AssertionError("diagonal traceless vector has a2^2 + a3^2 != 0")


def mat2_to_json(m: Mat2) -> str:
    return json.dumps(m.to_json())
