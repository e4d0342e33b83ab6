"""Elementary ideals of a presented module.

For an N x N presentation matrix P the i-th elementary ideal E_i is generated
by the (N - i)-minors of P. Over Q(t) we clear row denominators (multiplying a
row by a nonzero polynomial only changes minors by units once the cleared
denominators are inverted) and work in Q[t], where every ideal is principal,
so E_i is the gcd of those minors. Over Q or F_p an ideal is either 0 or the
whole field, reported as "0" or "1".

Two routes compute the same gcds: Smith normal form over Q[t] (default, the
product of the first k invariant factors is the gcd of the k-minors) and a
direct enumeration of minors by fraction-free elimination.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import List, Sequence, Tuple

from .. import linalg
from ..errors import DepthExceedsDimension
from ..field import Poly, RationalFunctions, poly_gcd, poly_lcm, poly_normalize
from .presentation import Presentation

ONE = Poly.constant(1)
ZERO = Poly()


@dataclass(frozen=True)
class InvariantResult:
    field: str
    dimension: int
    matrix_rank: int
    ideals: Tuple[Poly, ...]  # E_0, E_1, ... normalized
    units_stripped: Tuple[Poly, ...]

    @property
    def rank(self) -> int:
        """Rank of the module: generators minus the rank of the relations."""
        return self.dimension - self.matrix_rank

    def ideal(self, i: int) -> Poly:
        return self.ideals[i]

    def to_json(self, source: str = "") -> dict:
        return {
            "input": source,
            "rank": self.rank,
            "ideals": [{"i": i, "poly": e.format()} for i, e in enumerate(self.ideals)],
            "units_stripped": [u.format() for u in self.units_stripped],
        }


def clear_denominators(matrix: linalg.Matrix) -> List[List[Poly]]:
    """Scale each row of a Q(t) matrix by the lcm of its denominators."""
    out = []
    for row in matrix:
        den = ONE
        for x in row:
            den = poly_lcm(den, x.value.den)
        out.append([x.value.num * den.exact_div(x.value.den) for x in row])
    return out


def bareiss_det(m: Sequence[Sequence[Poly]]) -> Poly:
    """Determinant by fraction-free (Bareiss) elimination over Q[t]."""
    n = len(m)
    if n == 0:
        return ONE
    a = [list(r) for r in m]
    sign = 1
    prev = ONE
    for k in range(n - 1):
        if a[k][k].is_zero():
            swap = next((i for i in range(k + 1, n) if not a[i][k].is_zero()), None)
            if swap is None:
                return ZERO
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]).exact_div(prev)
        prev = a[k][k]
    return a[n - 1][n - 1] if sign > 0 else -a[n - 1][n - 1]


def minors_gcd(m: Sequence[Sequence[Poly]], k: int) -> Poly:
    """Monic gcd of all k x k minors (1 for k = 0)."""
    if k == 0:
        return ONE
    rows, cols = len(m), len(m[0]) if m else 0
    g = ZERO
    for rs in itertools.combinations(range(rows), k):
        for cs in itertools.combinations(range(cols), k):
            d = bareiss_det([[m[r][c] for c in cs] for r in rs])
            if d:
                g = poly_gcd(g, d)
                if g == ONE:
                    return g
    return g


def smith_invariant_factors(m: Sequence[Sequence[Poly]]) -> List[Poly]:
    """Monic invariant factors d_1 | d_2 | ... of a matrix over Q[t]."""
    a = [list(r) for r in m]
    rows, cols = len(a), len(a[0]) if a else 0
    diag = []
    for s in range(min(rows, cols)):
        piv = _min_degree(a, [(i, j) for i in range(s, rows) for j in range(s, cols)])
        if piv is None:
            break
        _move_pivot(a, s, piv)
        while True:
            done = True
            p = a[s][s]
            for i in range(s + 1, rows):
                if a[i][s]:
                    q, r = divmod(a[i][s], p)
                    a[i] = [x - q * y for x, y in zip(a[i], a[s])]
                    done = done and r.is_zero()
            for j in range(s + 1, cols):
                if a[s][j]:
                    q, r = divmod(a[s][j], p)
                    for row in a:
                        row[j] = row[j] - q * row[s]
                    done = done and r.is_zero()
            if done:
                break
            cells = [(i, s) for i in range(s, rows)] + [(s, j) for j in range(s + 1, cols)]
            _move_pivot(a, s, _min_degree(a, cells))
        diag.append(a[s][s].monic())
    # enforce the divisibility chain; (gcd, lcm) compare-exchange sorts each prime's exponents
    for i in range(len(diag)):
        for j in range(i + 1, len(diag)):
            g = poly_gcd(diag[i], diag[j])
            diag[i], diag[j] = g, poly_lcm(diag[i], diag[j])
    return diag


def _min_degree(a, cells):
    best = None
    for i, j in cells:
        x = a[i][j]
        if x and (best is None or x.degree < a[best[0]][best[1]].degree):
            best = (i, j)
    return best


def _move_pivot(a, s, cell):
    i, j = cell
    a[s], a[i] = a[i], a[s]
    for row in a:
        row[s], row[j] = row[j], row[s]


def invariants(p: Presentation, depth: int = 2, method: str = "snf") -> InvariantResult:
    """E_0 .. E_{depth-1} of the module presented by ``p``."""
    n = p.dimension
    if depth < 1:
        raise ValueError("depth must be at least 1")
    if depth > n + 1:
        raise DepthExceedsDimension(f"depth {depth} exceeds {n + 1} for a {n}x{n} presentation")
    if not isinstance(p.field, RationalFunctions):
        r = linalg.rank(p.matrix)
        ideals = tuple(ONE if r >= n - i else ZERO for i in range(depth))
        return InvariantResult(str(p.field), n, r, ideals, ())
    polys = clear_denominators(p.matrix)
    if method == "snf":
        factors = smith_invariant_factors(polys)
        r = len(factors)
        divisors = [ONE]
        for d in factors:
            divisors.append(divisors[-1] * d)
        raw = [divisors[n - i] if n - i <= r else ZERO for i in range(depth)]
    elif method == "minors":
        raw = [minors_gcd(polys, n - i) for i in range(depth)]
        r = linalg.rank(p.matrix)
    else:
        raise ValueError(f"unknown method {method!r}")
    ideals = tuple(poly_normalize(e, p.units) for e in raw)
    for bigger, smaller in zip(ideals[1:], ideals):
        if not bigger.divides(smaller):
            raise AssertionError("elementary ideals are not nested")
    return InvariantResult(str(p.field), n, r, ideals, tuple(p.units))
