"""Exact scalar fields: Q, F_p (p odd) and Q(t), plus univariate polynomials over Q.

Every value is brought to canonical form when it is built, so equality and
hashing compare representations directly:

* Q: :class:`fractions.Fraction` (always reduced).
* F_p: an ``int`` in ``[0, p)``.
* Q(t): a :class:`RatFunc` whose numerator and denominator are coprime and
  whose denominator is monic.

Literals follow one small grammar for every field: integers, ``/``, ``*``
(or juxtaposition), ``^`` with a non-negative integer exponent, parentheses,
and the variable ``t`` (Q(t) only). Examples: ``-3/4``, ``(3/2)t^2 - t + 1``,
``(t^2 - 1)/(t - 1)``.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from .errors import DescriptorMismatch, DivisionByZero, ScalarParseError

NEG_INF = float("-inf")  # degree of the zero polynomial

MAX_PRIME = 2**16


# ---------------------------------------------------------------------------
# Polynomials over Q
# ---------------------------------------------------------------------------


class Poly:
    """Dense univariate polynomial with rational coefficients, lowest degree first."""

    __slots__ = ("coeffs", "_hash")

    def __init__(self, coeffs: Iterable = ()):
        cs = [c if type(c) is Fraction else Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)
        self._hash = None

    @classmethod
    def constant(cls, c) -> "Poly":
        return cls((c,))

    @classmethod
    def monomial(cls, degree: int, c=1) -> "Poly":
        return cls([0] * degree + [c])

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    @property
    def lc(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == Poly.constant(other).coeffs
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(("Poly", self.coeffs))
        return self._hash

    def __repr__(self):
        return f"Poly({self.format()!r})"

    def __str__(self):
        return self.format()

    def __neg__(self):
        return Poly(-c for c in self.coeffs)

    def __add__(self, other):
        other = _as_poly(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Poly(out)

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-_as_poly(other))

    def __rsub__(self, other):
        return _as_poly(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return Poly()
            return Poly(c * other for c in self.coeffs)
        other = _as_poly(other)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly()
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        result = Poly.constant(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __divmod__(self, other):
        other = _as_poly(other)
        if other.is_zero():
            raise DivisionByZero("polynomial division by zero")
        rem = list(self.coeffs)
        dq = len(other.coeffs) - 1
        if len(rem) - 1 < dq:
            return Poly(), self
        inv_lc = 1 / other.lc
        quot = [Fraction(0)] * (len(rem) - dq)
        for k in range(len(rem) - 1, dq - 1, -1):
            c = rem[k]
            if c:
                q = c * inv_lc
                quot[k - dq] = q
                for j, d in enumerate(other.coeffs):
                    rem[k - dq + j] -= q * d
        return Poly(quot), Poly(rem[:dq])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def exact_div(self, other) -> "Poly":
        q, r = divmod(self, other)
        if r:
            raise ValueError(f"{other} does not divide {self}")
        return q

    def divides(self, other: "Poly") -> bool:
        """True when ``self`` divides ``other`` in Q[t]."""
        if self.is_zero():
            return other.is_zero()
        return (other % self).is_zero()

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def monic(self) -> "Poly":
        if self.is_zero():
            return self
        return self * (1 / self.lc)

    def content(self) -> Fraction:
        """Positive rational c with self / c integer-primitive."""
        if self.is_zero():
            return Fraction(0)
        den = 1
        for c in self.coeffs:
            den = den * c.denominator // math.gcd(den, c.denominator)
        num = 0
        for c in self.coeffs:
            num = math.gcd(num, c.numerator * (den // c.denominator))
        return Fraction(num, den)

    def primitive(self) -> "Poly":
        """Integer coefficients with gcd 1 and positive leading coefficient."""
        if self.is_zero():
            return self
        p = self * (1 / self.content())
        return -p if p.lc < 0 else p

    def derivative(self) -> "Poly":
        return Poly(i * c for i, c in enumerate(self.coeffs) if i)

    def format(self, var: str = "t") -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if not c:
                continue
            sign = "-" if c < 0 else "+"
            mag = -c if c < 0 else c
            if k == 0:
                body = _format_coeff(mag)
            else:
                mono = var if k == 1 else f"{var}^{k}"
                body = mono if mag == 1 else _format_coeff(mag) + mono
            parts.append((sign, body))
        first_sign, first_body = parts[0]
        out = ("-" if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out


def _format_coeff(c: Fraction) -> str:
    if c.denominator == 1:
        return str(c.numerator)
    return f"({c.numerator}/{c.denominator})"


def _as_poly(x) -> Poly:
    if isinstance(x, Poly):
        return x
    if isinstance(x, (int, Fraction)):
        return Poly.constant(x)
    raise TypeError(f"cannot treat {x!r} as a polynomial")


T = Poly((0, 1))


def poly_gcd(p: Poly, q: Poly) -> Poly:
    """Monic gcd in Q[t]; ``poly_gcd(0, 0) == 0``."""
    a, b = p, q
    while b:
        a, b = b, (a % b).monic()
    return a.monic()


def poly_lcm(p: Poly, q: Poly) -> Poly:
    if p.is_zero() or q.is_zero():
        return Poly()
    return (p * q).exact_div(poly_gcd(p, q)).monic()


def poly_normalize(p: Poly, unit_factors: Sequence[Poly] = ()) -> Poly:
    """Strip every factor shared with ``unit_factors`` and rational content.

    Factors are removed to full multiplicity, so the unit list need not be
    irreducible or square-free. The result is integer-primitive with a
    positive leading coefficient; zero stays zero.
    """
    if p.is_zero():
        return p
    for u in unit_factors:
        if u.is_constant():
            continue
        g = poly_gcd(p, u)
        while not g.is_constant():
            p = p.exact_div(g)
            g = poly_gcd(p, g)
    return p.primitive()


def squarefree_part(p: Poly) -> Poly:
    if p.is_constant():
        return Poly.constant(1) if p else p
    return p.exact_div(poly_gcd(p, p.derivative())).monic()


def coprime_basis(polys: Iterable[Poly]) -> list:
    """Pairwise coprime monic square-free polynomials generating the same radical."""
    basis = []
    for p in polys:
        if p.is_constant():
            continue
        pending = [squarefree_part(p)]
        while pending:
            f = pending.pop()
            if f.is_constant():
                continue
            for idx, b in enumerate(basis):
                g = poly_gcd(f, b)
                if not g.is_constant():
                    basis.pop(idx)
                    pending.extend([g, b.exact_div(g).monic(), f.exact_div(g).monic()])
                    break
            else:
                basis.append(f)
    return sorted(basis, key=lambda b: (b.degree, b.coeffs))


def _rational_sqrt(x: Fraction) -> Optional[Fraction]:
    if x < 0:
        return None
    n, d = x.numerator, x.denominator
    rn, rd = math.isqrt(n), math.isqrt(d)
    if rn * rn == n and rd * rd == d:
        return Fraction(rn, rd)
    return None


def poly_sqrt(p: Poly) -> Optional[Poly]:
    """Square root in Q[t] with positive leading coefficient, or None."""
    if p.is_zero():
        return p
    if p.degree % 2:
        return None
    lead = _rational_sqrt(p.lc)
    if lead is None:
        return None
    m = p.degree // 2
    # solve for root coefficients from the top down
    root = [Fraction(0)] * (m + 1)
    root[m] = lead
    for k in range(m - 1, -1, -1):
        # coefficient of t^(m+k) in root^2 must match p
        acc = p.coeffs[m + k]
        for i in range(k + 1, m):
            j = m + k - i
            if k < j <= m:
                acc -= root[i] * root[j]
        root[k] = acc / (2 * lead)
    r = Poly(root)
    return r if r * r == p else None


# ---------------------------------------------------------------------------
# Rational functions
# ---------------------------------------------------------------------------


class RatFunc:
    """Reduced quotient num/den of polynomials over Q with den monic."""

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num: Poly, den: Poly = None, _reduced: bool = False):
        if den is None:
            den = Poly.constant(1)
        if den.is_zero():
            raise DivisionByZero("rational function with zero denominator")
        if not _reduced:
            if num.is_zero():
                den = Poly.constant(1)
            else:
                g = poly_gcd(num, den)
                if not g.is_constant():
                    num = num.exact_div(g)
                    den = den.exact_div(g)
                lc = den.lc
                if lc != 1:
                    num = num * (1 / lc)
                    den = den * (1 / lc)
        self.num = num
        self.den = den
        self._hash = None

    def __eq__(self, other):
        return isinstance(other, RatFunc) and self.num == other.num and self.den == other.den

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(("RatFunc", self.num.coeffs, self.den.coeffs))
        return self._hash

    def __repr__(self):
        return f"RatFunc({self.format()!r})"

    def format(self, var: str = "t") -> str:
        if self.den == 1:
            return self.num.format(var)
        return f"({self.num.format(var)})/({self.den.format(var)})"


# ---------------------------------------------------------------------------
# Field descriptors
# ---------------------------------------------------------------------------


class Field:
    """Common behaviour of the three field descriptors.

    Subclasses operate on raw canonical values; :class:`Scalar` wraps them.
    """

    characteristic: int = 0

    def __call__(self, x) -> "Scalar":
        if isinstance(x, Scalar):
            if x.field != self:
                raise DescriptorMismatch(f"{x.field} element given to {self}")
            return x
        if isinstance(x, str):
            return self.parse(x)
        return Scalar(self, self.convert(x))

    @property
    def zero(self) -> "Scalar":
        return self(0)

    @property
    def one(self) -> "Scalar":
        return self(1)

    def parse(self, text: str) -> "Scalar":
        return Scalar(self, _LiteralParser(self, text).parse())

    def sqrt_opt(self, x: "Scalar") -> Optional["Scalar"]:
        v = self.sqrt_value(self(x).value)
        return None if v is None else Scalar(self, v)

    # raw-value arithmetic, overridden where a cheaper form exists
    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def is_zero(self, a) -> bool:
        return a == self.convert(0)


@dataclass(frozen=True)
class Rationals(Field):
    characteristic = 0

    def __str__(self):
        return "q"

    def convert(self, x):
        if isinstance(x, Fraction):
            return x
        if isinstance(x, int):
            return Fraction(x)
        raise TypeError(f"cannot convert {x!r} to a rational")

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        if not a:
            raise DivisionByZero("inverse of 0 in Q")
        return 1 / a

    def div(self, a, b):
        if not b:
            raise DivisionByZero("division by 0 in Q")
        return a / b

    def is_zero(self, a):
        return not a

    def format(self, a) -> str:
        return str(a)

    def sqrt_value(self, a):
        return _rational_sqrt(a)

    def random(self, rng: random.Random, bound: int = 9, den_bound: int = 4) -> "Scalar":
        return Scalar(self, Fraction(rng.randint(-bound, bound), rng.randint(1, den_bound)))

    def variable(self):
        raise ScalarParseError("the variable t is only available in Q(t)")


@dataclass(frozen=True)
class PrimeField(Field):
    p: int

    def __post_init__(self):
        p = self.p
        if p == 2:
            raise ValueError("characteristic 2 is not supported")
        if p < 3 or p > MAX_PRIME or any(p % d == 0 for d in range(2, math.isqrt(p) + 1)):
            raise ValueError(f"{p} is not an odd prime <= {MAX_PRIME}")

    @property
    def characteristic(self):
        return self.p

    def __str__(self):
        return f"fp:{self.p}"

    def convert(self, x):
        if isinstance(x, int):
            return x % self.p
        if isinstance(x, Fraction):
            return self.div(x.numerator % self.p, x.denominator % self.p)
        raise TypeError(f"cannot convert {x!r} to F_{self.p}")

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return a * b % self.p

    def neg(self, a):
        return -a % self.p

    def inv(self, a):
        if not a:
            raise DivisionByZero(f"inverse of 0 in F_{self.p}")
        return pow(a, self.p - 2, self.p)

    def div(self, a, b):
        return a * self.inv(b) % self.p

    def is_zero(self, a):
        return not a

    def format(self, a) -> str:
        return str(a)

    def sqrt_value(self, a):
        return _tonelli_shanks(a, self.p)

    def random(self, rng: random.Random, **_) -> "Scalar":
        return Scalar(self, rng.randrange(self.p))

    def elements(self):
        return [Scalar(self, v) for v in range(self.p)]

    def variable(self):
        raise ScalarParseError("the variable t is only available in Q(t)")


def _tonelli_shanks(a: int, p: int) -> Optional[int]:
    a %= p
    if a == 0:
        return 0
    if pow(a, (p - 1) // 2, p) != 1:
        return None
    q, s = p - 1, 0
    while q % 2 == 0:
        q //= 2
        s += 1
    z = 2
    while pow(z, (p - 1) // 2, p) != p - 1:
        z += 1
    m, c, t, r = s, pow(z, q, p), pow(a, q, p), pow(a, (q + 1) // 2, p)
    while t != 1:
        i, t2 = 0, t
        while t2 != 1:
            t2 = t2 * t2 % p
            i += 1
        b = pow(c, 1 << (m - i - 1), p)
        m, c, t, r = i, b * b % p, t * b * b % p, r * b % p
    return min(r, p - r)


@dataclass(frozen=True)
class RationalFunctions(Field):
    var: str = "t"
    characteristic = 0

    def __str__(self):
        return "qt"

    def convert(self, x):
        if isinstance(x, RatFunc):
            return x
        if isinstance(x, Poly):
            return RatFunc(x, _reduced=False)
        if isinstance(x, (int, Fraction)):
            return RatFunc(Poly.constant(x), Poly.constant(1), _reduced=True)
        raise TypeError(f"cannot convert {x!r} to Q({self.var})")

    def add(self, a, b):
        if a.den == b.den:
            return RatFunc(a.num + b.num, a.den)
        return RatFunc(a.num * b.den + b.num * a.den, a.den * b.den)

    def neg(self, a):
        return RatFunc(-a.num, a.den, _reduced=True)

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        if a.num.is_zero() or b.num.is_zero():
            return RatFunc(Poly(), _reduced=False)
        if a.den == 1 and b.den == 1:
            return RatFunc(a.num * b.num, a.den, _reduced=True)
        return RatFunc(a.num * b.num, a.den * b.den)

    def inv(self, a):
        if a.num.is_zero():
            raise DivisionByZero("inverse of 0 in Q(t)")
        return RatFunc(a.den, a.num)

    def is_zero(self, a):
        return a.num.is_zero()

    def format(self, a) -> str:
        return a.format(self.var)

    def sqrt_value(self, a):
        # reduced + monic denominator: a square iff num and den are squares
        rn = poly_sqrt(a.num)
        if rn is None:
            return None
        rd = poly_sqrt(a.den)
        if rd is None:
            return None
        return RatFunc(rn, rd)

    def random(self, rng: random.Random, degree: int = 2, bound: int = 4) -> "Scalar":
        num = Poly(rng.randint(-bound, bound) for _ in range(rng.randint(0, degree) + 1))
        den = Poly([rng.randint(-bound, bound) for _ in range(rng.randint(0, 1))] + [1])
        return Scalar(self, RatFunc(num, den))

    def variable(self):
        return RatFunc(T, _reduced=True)

    def poly(self, p: Poly) -> "Scalar":
        return Scalar(self, RatFunc(p, _reduced=True))


QQ = Rationals()
QT = RationalFunctions()


def parse_field(spec: str) -> Field:
    """Parse a field token: ``q``, ``fp:<p>`` or ``qt``."""
    s = spec.strip().lower()
    if s in ("q", "qq", "rationals"):
        return QQ
    if s in ("qt", "q(t)"):
        return QT
    m = re.fullmatch(r"(?:fp|f|gf)[:_]?(\d+)", s)
    if m:
        try:
            return PrimeField(int(m.group(1)))
        except ValueError as exc:
            raise ScalarParseError(str(exc)) from exc
    raise ScalarParseError(f"unknown field {spec!r}; expected q, fp:<p> or qt")


# ---------------------------------------------------------------------------
# Scalars
# ---------------------------------------------------------------------------


class Scalar:
    """Immutable field element."""

    __slots__ = ("field", "value")

    def __init__(self, field: Field, value):
        self.field = field
        self.value = value

    def _other(self, other):
        if isinstance(other, Scalar):
            if other.field is not self.field and other.field != self.field:
                raise DescriptorMismatch(f"{self.field} and {other.field} do not mix")
            return other.value
        if isinstance(other, (int, Fraction)):
            return self.field.convert(other)
        return None

    def __add__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return Scalar(self.field, self.field.add(self.value, o))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return Scalar(self.field, self.field.sub(self.value, o))

    def __rsub__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return Scalar(self.field, self.field.sub(o, self.value))

    def __mul__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return Scalar(self.field, self.field.mul(self.value, o))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return Scalar(self.field, self.field.div(self.value, o))

    def __rtruediv__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return Scalar(self.field, self.field.div(o, self.value))

    def __neg__(self):
        return Scalar(self.field, self.field.neg(self.value))

    def __pow__(self, n: int):
        if n < 0:
            return self.inv() ** (-n)
        result = self.field.one
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def inv(self) -> "Scalar":
        return Scalar(self.field, self.field.inv(self.value))

    def is_zero(self) -> bool:
        return self.field.is_zero(self.value)

    def __bool__(self):
        return not self.is_zero()

    def __eq__(self, other):
        if isinstance(other, Scalar):
            return self.value == other.value and self.field == other.field
        if isinstance(other, (int, Fraction)):
            return self.value == self.field.convert(other)
        return NotImplemented

    def __hash__(self):
        return hash(self.value)

    def __repr__(self):
        return f"Scalar({self.field}, {self.field.format(self.value)!r})"

    def __str__(self):
        return self.field.format(self.value)

    def sqrt_opt(self) -> Optional["Scalar"]:
        return self.field.sqrt_opt(self)


def arith(x: Scalar, y: Optional[Scalar], op: str):
    """Dispatch one of add/sub/mul/div/neg/inv/eq by name."""
    if op in ("add", "sub", "mul", "div", "eq") and x.field != y.field:
        raise DescriptorMismatch(f"{x.field} and {y.field} do not mix")
    if op == "add":
        return x + y
    if op == "sub":
        return x - y
    if op == "mul":
        return x * y
    if op == "div":
        return x / y
    if op == "neg":
        return -x
    if op == "inv":
        return x.inv()
    if op == "eq":
        return x == y
    raise ValueError(f"unknown operation {op!r}")


def sqrt_opt(x: Scalar) -> Optional[Scalar]:
    return x.field.sqrt_opt(x)


# ---------------------------------------------------------------------------
# Literal parser
# ---------------------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_]\w*)|(.))")


class _LiteralParser:
    """Recursive-descent evaluator for scalar literals in a given field."""

    def __init__(self, field: Field, text: str):
        self.field = field
        self.text = text
        self.tokens = []
        for m in _TOKEN.finditer(text):
            num, name, sym = m.groups()
            if num is not None:
                self.tokens.append(("num", int(num)))
            elif name is not None:
                self.tokens.append(("name", name))
            elif sym is not None and not sym.isspace():
                self.tokens.append(("sym", sym))
        self.pos = 0

    def error(self, msg):
        return ScalarParseError(f"{msg} in literal {self.text!r} for field {self.field}")

    def peek(self):
        return self.tokens[self.pos] if self.pos < len(self.tokens) else (None, None)

    def take(self):
        tok = self.peek()
        self.pos += 1
        return tok

    def parse(self):
        if not self.tokens:
            raise self.error("empty literal")
        value = self.expr()
        if self.pos != len(self.tokens):
            raise self.error(f"unexpected {self.peek()[1]!r}")
        return value

    def expr(self):
        f = self.field
        kind, tok = self.peek()
        negate = False
        if (kind, tok) in (("sym", "+"), ("sym", "-")):
            self.take()
            negate = tok == "-"
        value = self.term()
        if negate:
            value = f.neg(value)
        while self.peek() in (("sym", "+"), ("sym", "-")):
            _, op = self.take()
            rhs = self.term()
            value = f.add(value, rhs) if op == "+" else f.sub(value, rhs)
        return value

    def term(self):
        f = self.field
        value = self.power()
        while True:
            kind, tok = self.peek()
            if (kind, tok) == ("sym", "*"):
                self.take()
                value = f.mul(value, self.power())
            elif (kind, tok) == ("sym", "/"):
                self.take()
                value = f.div(value, self.power())
            elif kind in ("num", "name") or (kind, tok) == ("sym", "("):
                value = f.mul(value, self.power())
            else:
                return value

    def power(self):
        base = self.atom()
        if self.peek() == ("sym", "^"):
            self.take()
            kind, n = self.take()
            if kind != "num":
                raise self.error("exponent must be a non-negative integer")
            result = self.field.convert(1)
            for _ in range(n):
                result = self.field.mul(result, base)
            return result
        return base

    def atom(self):
        kind, tok = self.take()
        if kind == "num":
            return self.field.convert(tok)
        if kind == "name":
            if tok != getattr(self.field, "var", "t"):
                raise self.error(f"unknown symbol {tok!r}")
            return self.field.variable()
        if (kind, tok) == ("sym", "("):
            value = self.expr()
            if self.take() != ("sym", ")"):
                raise self.error("missing ')'")
            return value
        raise self.error(f"unexpected {tok!r}")
