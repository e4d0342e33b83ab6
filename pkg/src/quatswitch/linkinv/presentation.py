"""Presentation matrices of the module a linear switch assigns to a diagram.

Each semi-arc (or braid strand) carries a label in F^2; each crossing
imposes that the outgoing labels are the image of the incoming ones under S.
The module is the cokernel of the resulting square scalar matrix.

Crossing convention (``"fjk"``): with both strands oriented upwards, S maps
the labels entering at the bottom, ordered left to right, to the labels
leaving at the top, ordered left to right. At a positive crossing the over
strand enters on the left and leaves on the right, so

    positive:  S(o_in, u_in) = (u_out, o_out)
    negative:  S(o_out, u_out) = (u_in, o_in)   (i.e. S^-1 read bottom-up)

This is the convention under which R1 and R2 moves leave the invariants
unchanged (see the test suite); the two alternatives are kept for that
comparison.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Tuple

from .. import linalg
from ..errors import NonInvertibleSwitch
from ..field import Field, Poly, RationalFunctions, coprime_basis
from ..quat2 import Mat2
from ..switch import Switch
from .diagrams import BraidWord, GaussCode

# rule = ((inputs to S), (outputs of S))
CONVENTIONS: Dict[str, Tuple[tuple, tuple]] = {
    "fjk": ((("o_in", "u_in"), ("u_out", "o_out")), (("o_out", "u_out"), ("u_in", "o_in"))),
    "over-under": ((("o_in", "u_in"), ("o_out", "u_out")), (("o_out", "u_out"), ("o_in", "u_in"))),
    "under-over": ((("u_in", "o_in"), ("o_out", "u_out")), (("o_out", "u_out"), ("u_in", "o_in"))),
}
DEFAULT_CONVENTION = "fjk"


@dataclass(frozen=True)
class Presentation:
    """Square scalar matrix (flattened 2x2 blocks) presenting the module."""

    field: Field
    matrix: linalg.Matrix
    units: Tuple[Poly, ...] = ()
    source: str = ""

    @property
    def dimension(self) -> int:
        return len(self.matrix)

    @property
    def blocks(self) -> int:
        return self.dimension // 2

    def block(self, i: int, j: int) -> Mat2:
        return linalg.block(self.matrix, i, j)


def switch_units(s: Switch) -> Tuple[Poly, ...]:
    """Polynomials inverted in the coefficient ring of a Q(t) switch.

    These are the denominators of the entries of A, B, C, D together with the
    determinants of A, B, A - 1 and S (whichever are nonzero), reduced to a
    coprime square-free basis.
    """
    if not isinstance(s.field, RationalFunctions):
        return ()
    polys = []
    for m in (s.A, s.B, s.C, s.D):
        polys.extend(e.value.den for e in m.entries())
    one = Mat2.identity(s.field)
    dets = [s.A.det(), s.B.det(), (s.A - one).det(), linalg.det(s.matrix())]
    for d in dets:
        if not d.is_zero():
            polys.extend((d.value.num, d.value.den))
    return tuple(coprime_basis(polys))


def _sigma_block(s_mat: linalg.Matrix, n: int, i: int) -> linalg.Matrix:
    """I (+) S (+) I with S on strands i, i+1 (1-based i)."""
    f = s_mat[0][0].field
    parts = []
    if i > 1:
        parts.append(linalg.identity(f, 2 * (i - 1)))
    parts.append(s_mat)
    if n - i - 1 > 0:
        parts.append(linalg.identity(f, 2 * (n - i - 1)))
    return linalg.direct_sum(*parts)


def _tau_block(f: Field, n: int, i: int) -> linalg.Matrix:
    one, zero = Mat2.identity(f), Mat2.zero(f)
    blocks = [[one if r == c else zero for c in range(n)] for r in range(n)]
    a, b = i - 1, i
    blocks[a][a] = blocks[b][b] = zero
    blocks[a][b] = blocks[b][a] = one
    return linalg.from_blocks(blocks)


def braid_rep(s: Switch, word: BraidWord) -> linalg.Matrix:
    """rho(w) = rho(w_1) ... rho(w_k) as a 2n x 2n scalar matrix.

    The rightmost letter acts first, so rho(w) maps the labels at the bottom
    of the braid (rightmost letter) to those at the top.
    """
    f, n = s.field, word.strands
    s_mat = s.matrix()
    s_inv = None
    result = linalg.identity(f, 2 * n)
    for letter in word.letters:
        if letter.kind == "s":
            m = _sigma_block(s_mat, n, letter.index)
        elif letter.kind == "S":
            if s_inv is None:
                if linalg.det(s_mat).is_zero():
                    raise NonInvertibleSwitch("sigma^-1 needs an invertible switch")
                s_inv = linalg.inverse(s_mat)
            m = _sigma_block(s_inv, n, letter.index)
        else:
            m = _tau_block(f, n, letter.index)
        result = linalg.matmul(result, m)
    return result


def presentation_from_braid(s: Switch, word: BraidWord) -> Presentation:
    """rho(w) - I: the closure identifies top and bottom labels."""
    rho = braid_rep(s, word)
    mat = linalg.matsub(rho, linalg.identity(s.field, 2 * word.strands))
    return Presentation(s.field, mat, switch_units(s), f"braid:{word.strands}:{word}")


def presentation_from_gauss(s: Switch, code: GaussCode, convention: str = DEFAULT_CONVENTION) -> Presentation:
    f = s.field
    units = switch_units(s)
    m = len(code.passages)
    if m == 0:
        # unknot: one free generator, one trivial relation
        return Presentation(f, linalg.zeros(f, 2, 2), units, "gauss:")
    if any(p.sign < 0 for p in code.passages) and linalg.det(s.matrix()).is_zero():
        raise NonInvertibleSwitch("negative crossings need an invertible switch")
    pos_rule, neg_rule = CONVENTIONS[convention]
    one, zero = Mat2.identity(f), Mat2.zero(f)
    blocks: List[List[Mat2]] = []
    where: Dict[int, Dict[str, int]] = {}
    for j, p in enumerate(code.passages):
        arcs = where.setdefault(p.crossing, {})
        role = "o" if p.over else "u"
        arcs[f"{role}_in"] = (j - 1) % m
        arcs[f"{role}_out"] = j
        arcs["sign"] = p.sign
    for cid in sorted(where):
        arcs = where[cid]
        (x1, x2), (y1, y2) = pos_rule if arcs["sign"] > 0 else neg_rule
        for target, coeffs in ((y1, (s.A, s.B)), (y2, (s.C, s.D))):
            row = [zero] * m
            row[arcs[target]] = row[arcs[target]] + one
            row[arcs[x1]] = row[arcs[x1]] - coeffs[0]
            row[arcs[x2]] = row[arcs[x2]] - coeffs[1]
            blocks.append(row)
    return Presentation(f, linalg.from_blocks(blocks), units, f"gauss:{code}")
