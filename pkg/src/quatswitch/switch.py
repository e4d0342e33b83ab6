"""Linear switches S = [[A, B], [C, D]] built from solutions of the fundamental equation.

A switch acts on pairs of 2-vectors, ``S(x, y) = (Ax + By, Cx + Dy)``. The
non-commutative construction takes a pair (A, B) with

    A^-1 B^-1 A B - B^-1 A B - B A^-1 B^-1 A + A = 0

and sets ``C = A^-1 B^-1 A (1 - A)``, ``D = 1 - A^-1 B^-1 A B``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Optional

from . import linalg
from .errors import CommutingPair, NonCommutingInputs, NotASolution, SingularInput
from .field import Field, parse_field
from .quat2 import Mat2, Traceless, cross, dot, split


class Tag(str, enum.Enum):
    COMMUTATIVE_TYPE0 = "CommutativeType0"
    COMMUTATIVE_TYPE1 = "CommutativeType1"
    NONCOMMUTATIVE = "NonCommutative"
    RAW = "Raw"


@dataclass(frozen=True)
class FEReport:
    residual: Mat2
    is_solution: bool
    is_matching: bool
    commuting: bool


def _require_invertible(**mats: Mat2):
    for name, m in mats.items():
        if not m.is_invertible():
            raise SingularInput(name)


def fe_residual(a: Mat2, b: Mat2) -> FEReport:
    """Residual of the fundamental equation moved to one side."""
    one = Mat2.identity(a.field)
    _require_invertible(A=a, B=b, A_minus_1=a - one)
    ai, bi = a.inverse(), b.inverse()
    bi_a_b = bi * a * b
    residual = ai * bi_a_b - bi_a_b - b * ai * bi * a + a
    return FEReport(
        residual=residual,
        is_solution=residual.is_zero(),
        is_matching=is_matching(a, b),
        commuting=a * b == b * a,
    )


def is_matching(a: Mat2, b: Mat2) -> bool:
    """det(A) = tr(A) and A.B = 0."""
    return a.det() == a.tr() and dot(a, b).is_zero()


def linear_relation_residual(a: Mat2, b: Mat2) -> Traceless:
    """Left side of the linear relation implied by the fundamental equation.

    (tr A - det A) det(b) a + (det A - tr A)(a.b) b + (b0 (det A - tr A) + 2 A.B) a x b
    """
    one = Mat2.identity(a.field)
    _require_invertible(A=a, B=b, A_minus_1=a - one)
    _, av = split(a)
    b0, bv = split(b)
    gap = a.det() - a.tr()
    return (av * (-gap * bv.det())
            + bv * (gap * dot(av, bv))
            + cross(av, bv) * (b0 * gap + 2 * dot(a, b)))


@dataclass(frozen=True)
class Switch:
    A: Mat2
    B: Mat2
    C: Mat2
    D: Mat2
    tag: Tag = Tag.RAW

    @property
    def field(self) -> Field:
        return self.A.field

    def matrix(self) -> linalg.Matrix:
        """The 4x4 scalar matrix [[A, B], [C, D]]."""
        return linalg.from_blocks([[self.A, self.B], [self.C, self.D]])

    def apply(self, x, y):
        """Image of a pair of 2x2 blocks (or column pairs) under S."""
        return self.A * x + self.B * y, self.C * x + self.D * y

    def to_json(self) -> dict:
        return {
            "field": str(self.field),
            "A": self.A.to_json(),
            "B": self.B.to_json(),
            "C": self.C.to_json(),
            "D": self.D.to_json(),
            "tag": self.tag.value,
        }

    @classmethod
    def from_json(cls, obj: dict) -> "Switch":
        f = parse_field(obj["field"])
        mats = [Mat2.from_json(obj[k], f) for k in "ABCD"]
        return cls(*mats, tag=Tag(obj.get("tag", "Raw")))


def raw_switch(a: Mat2, b: Mat2, c: Mat2, d: Mat2) -> Switch:
    return Switch(a, b, c, d, Tag.RAW)


def _checked(s: Switch) -> Switch:
    if not yang_baxter_check(s):
        raise AssertionError(f"constructed {s.tag.value} switch fails the Yang-Baxter equation")
    return s


def make_noncommutative_switch(a: Mat2, b: Mat2) -> Switch:
    report = fe_residual(a, b)
    if report.commuting:
        raise CommutingPair("A and B commute")
    if not report.is_solution:
        raise NotASolution(f"fundamental equation residual is {report.residual!r}")
    one = Mat2.identity(a.field)
    ai_bi_a = a.inverse() * b.inverse() * a
    c = ai_bi_a * (one - a)
    d = one - ai_bi_a * b
    return _checked(Switch(a, b, c, d, Tag.NONCOMMUTATIVE))


def make_commutative_switch(b: Mat2, c: Mat2, variant: str = "Type0") -> Switch:
    """``[[0, B], [C, 1 - BC]]`` (Type0) or ``[[1 - BC, B], [C, 0]]`` (Type1)."""
    _require_invertible(B=b, C=c)
    if b * c != c * b:
        raise NonCommutingInputs("B and C must commute")
    one, zero = Mat2.identity(b.field), Mat2.zero(b.field)
    rest = one - b * c
    if variant in ("Type0", "0", 0, Tag.COMMUTATIVE_TYPE0):
        return _checked(Switch(zero, b, c, rest, Tag.COMMUTATIVE_TYPE0))
    if variant in ("Type1", "1", 1, Tag.COMMUTATIVE_TYPE1):
        return _checked(Switch(rest, b, c, zero, Tag.COMMUTATIVE_TYPE1))
    raise ValueError(f"unknown variant {variant!r}")


def transpose_variant(s: Switch) -> Switch:
    """The twin with A, D and B, C interchanged (conjugation by the swap)."""
    return _checked(Switch(s.D, s.C, s.B, s.A, s.tag))


def yang_baxter_check(s: Switch) -> bool:
    """(S x id)(id x S)(S x id) == (id x S)(S x id)(id x S) as 6x6 matrices."""
    f = s.field
    m = s.matrix()
    i2 = linalg.identity(f, 2)
    left_s = linalg.direct_sum(m, i2)
    right_s = linalg.direct_sum(i2, m)
    lhs = linalg.matmul(linalg.matmul(left_s, right_s), left_s)
    rhs = linalg.matmul(linalg.matmul(right_s, left_s), right_s)
    return lhs == rhs


@dataclass(frozen=True)
class InvertibilityReport:
    A: bool
    B: bool
    AminusI: bool
    S: bool
    DeltaPrime: bool
    delta_prime_forms_agree: Optional[bool]

    def all_true(self) -> bool:
        return all((self.A, self.B, self.AminusI, self.S, self.DeltaPrime,
                    self.delta_prime_forms_agree is not False))


def delta_prime(s: Switch):
    """Delta' = C^-1 D - A^-1 B and its closed form (1-A)^-1 A^-1 B (A-1).

    Either entry is None when the matrices it needs are singular.
    """
    one = Mat2.identity(s.field)
    by_def = closed = None
    if s.C.is_invertible() and s.A.is_invertible():
        by_def = s.C.inverse() * s.D - s.A.inverse() * s.B
    if s.A.is_invertible() and (one - s.A).is_invertible():
        closed = (one - s.A).inverse() * s.A.inverse() * s.B * (s.A - one)
    return by_def, closed


def invertibility_report(s: Switch) -> InvertibilityReport:
    one = Mat2.identity(s.field)
    by_def, closed = delta_prime(s)
    dp = by_def if by_def is not None else closed
    agree = None
    if by_def is not None and closed is not None:
        agree = by_def == closed
    return InvertibilityReport(
        A=s.A.is_invertible(),
        B=s.B.is_invertible(),
        AminusI=(s.A - one).is_invertible(),
        S=not linalg.det(s.matrix()).is_zero(),
        DeltaPrime=dp is not None and dp.is_invertible(),
        delta_prime_forms_agree=agree,
    )


def identity_switch(field: Field) -> Switch:
    one, zero = Mat2.identity(field), Mat2.zero(field)
    return Switch(one, zero, zero, one, Tag.RAW)


def swap_switch(field: Field) -> Switch:
    one, zero = Mat2.identity(field), Mat2.zero(field)
    return Switch(zero, one, one, zero, Tag.RAW)
