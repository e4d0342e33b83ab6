"""Mismatching (hyperbolic) solutions of the fundamental equation.

For non-commuting A = a0 + a, B = b0 + b whose vector parts satisfy
``lambda1 a + lambda2 b + a x b = 0``, the scalar part of B is forced:

    b0 = lambda1 (1 - 2 / (a0 - lambda2))

Up to group-conjugation every such pair is

    A = [[a0 + a3, 2 a1], [0, a0 - a3]],  B = b0 + [[b3, 2 b1], [0, -b3]]

with b0 = b3 (1 - 2 / (a0 + a3)). :func:`classify_pair` recovers these
parameters together with an explicit conjugating matrix, and
:func:`enumerate_solutions` checks over small prime fields that every
non-commuting solution is matching or hyperbolic.
"""

from __future__ import annotations

import enum
import itertools
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field as dc_field
from typing import Dict, Optional, Tuple

import numpy as np

from .errors import (CommutingPair, InvalidParams, PoleAtA0,
                     SingularInput, TripleIndependent)
from .field import Field, PrimeField, Scalar
from .quat2 import (Mat2, NeedsExtension, Traceless, canonicalize_traceless, compose,
                    cross, dot, group_conjugate, is_isotropic, pauli_basis, split,
                    triple_dependent)
from .switch import fe_residual


@dataclass(frozen=True)
class Lambdas:
    lambda1: Scalar
    lambda2: Scalar


def solve_lambdas(a: Traceless, b: Traceless) -> Lambdas:
    """The unique lambda1, lambda2 with lambda1 a + lambda2 b + a x b = 0."""
    c = cross(a, b)
    if c.is_zero():
        raise CommutingPair("a and b are linearly dependent")
    if not triple_dependent(a, b):
        raise TripleIndependent("a x b is anisotropic, so a, b, a x b are independent")
    av, bv, cv = a.components(), b.components(), c.components()
    for r, s in itertools.combinations(range(3), 2):
        minor = av[r] * bv[s] - av[s] * bv[r]
        if not minor.is_zero():
            break
    lam1 = (bv[r] * cv[s] - cv[r] * bv[s]) / minor
    lam2 = (av[s] * cv[r] - av[r] * cv[s]) / minor
    if not (a * lam1 + b * lam2 + c).is_zero():
        raise AssertionError("lambda system is inconsistent for a dependent triple")
    if not (lam1 * lam2 == dot(a, b) and lam2 * lam2 == -a.det() and lam1 * lam1 == -b.det()):
        raise AssertionError("lambda identities fail")
    return Lambdas(lam1, lam2)


def b0_from(a: Traceless, b: Traceless, a0: Scalar) -> Scalar:
    """Scalar part of B making (a0 + a, b0 + b) a solution."""
    lam = solve_lambdas(a, b)
    denom = a0 - lam.lambda2
    if denom.is_zero():
        raise PoleAtA0(f"a0 = {a0} equals lambda2")
    return lam.lambda1 * (1 - 2 / denom)


def b0_printed(a: Traceless, b: Traceless, a0: Scalar) -> Scalar:
    """The form lambda1 (2 / (a0 + lambda2) - 1); kept for comparison only."""
    lam = solve_lambdas(a, b)
    denom = a0 + lam.lambda2
    if denom.is_zero():
        raise PoleAtA0(f"a0 = {a0} equals -lambda2")
    return lam.lambda1 * (2 / denom - 1)


@dataclass(frozen=True)
class HyperbolicParams:
    a0: Scalar
    a1: Scalar
    a3: Scalar
    b1: Scalar
    b3: Scalar

    @classmethod
    def of(cls, field: Field, a0, a1, a3, b1, b3) -> "HyperbolicParams":
        return cls(field(a0), field(a1), field(a3), field(b1), field(b3))

    @property
    def field(self) -> Field:
        return self.a0.field

    def vectors(self) -> Tuple[Traceless, Traceless]:
        """a = a1 (i + j) + a3 k and b = b1 (i + j) + b3 k."""
        return Traceless(self.a1, self.a1, self.a3), Traceless(self.b1, self.b1, self.b3)

    def violations(self):
        a0, a1, a3, b1, b3 = self.a0, self.a1, self.a3, self.b1, self.b3
        out = []
        if b3.is_zero():
            out.append("b3 = 0 (B singular)")
        if (a3 * b1 - a1 * b3).is_zero():
            out.append("a3*b1 - a1*b3 = 0 (A, B commute)")
        for bad, why in ((a3, "A singular"), (-a3, "A singular"),
                         (1 + a3, "A - 1 singular"), (1 - a3, "A - 1 or B singular")):
            if a0 == bad:
                out.append(f"a0 = {bad} ({why})")
        return out

    def as_strings(self) -> Dict[str, str]:
        return {k: str(v) for k, v in asdict(self).items()}


def hyperbolic_family(p: HyperbolicParams) -> Tuple[Mat2, Mat2]:
    bad = p.violations()
    if bad:
        raise InvalidParams(bad)
    f = p.field
    a, b = p.vectors()
    a_mat = compose(p.a0, a)
    b_mat = compose(b0_from(a, b, p.a0), b)
    report = fe_residual(a_mat, b_mat)
    if not report.is_solution or report.commuting:
        raise AssertionError(f"family member {p} fails the fundamental equation")
    if not a_mat.e21.is_zero() or a_mat != Mat2(p.a0 + p.a3, 2 * p.a1, f.zero, p.a0 - p.a3):
        raise AssertionError("family matrix A is not in the triangular chart")
    return a_mat, b_mat


def printed_b_forms(p: HyperbolicParams) -> Dict[str, Mat2]:
    """Two published closed forms of B: "summary_form" and "example_form".

    Neither solves the equation in general; they are kept for the census
    comparison. Both share the upper row [2 b3 / (a0 - a3), 2 b1]; the lower-right entries
    are 2 b3 (1/(a0 - a3) - 2) and 2 b3 (1/(a0 - a3) - 1) respectively.
    """
    f = p.field
    if (p.a0 - p.a3).is_zero():
        raise PoleAtA0("a0 = a3")
    inv = 1 / (p.a0 - p.a3)
    top = 2 * p.b3 * inv
    return {
        "summary_form": Mat2(top, 2 * p.b1, f.zero, 2 * p.b3 * (inv - 2)),
        "example_form": Mat2(top, 2 * p.b1, f.zero, 2 * p.b3 * (inv - 1)),
    }


def printed_b_solves(p: HyperbolicParams) -> Dict[str, bool]:
    """Whether each printed B, paired with the family A, solves the equation."""
    a_mat = compose(p.a0, p.vectors()[0])
    out = {}
    for name, b_mat in printed_b_forms(p).items():
        try:
            out[name] = fe_residual(a_mat, b_mat).is_solution
        except SingularInput:
            out[name] = False
    return out


# ---------------------------------------------------------------------------
# Classification
# ---------------------------------------------------------------------------


class Kind(str, enum.Enum):
    COMMUTING = "Commuting"
    NOT_A_SOLUTION = "NotASolution"
    MATCHING = "Matching"
    HYPERBOLIC = "Hyperbolic"
    UNRESOLVED = "Unresolved"


@dataclass(frozen=True)
class Classification:
    kind: Kind
    witness: Optional[Mat2] = None
    params: Optional[HyperbolicParams] = None
    reason: Optional[str] = None

    def to_json(self) -> dict:
        out = {"kind": self.kind.value}
        if self.witness is not None:
            out["witness"] = self.witness.to_json()
        if self.params is not None:
            out["params"] = self.params.as_strings()
        if self.reason is not None:
            out["reason"] = self.reason
        return out


def classify_pair(a: Mat2, b: Mat2) -> Classification:
    one = Mat2.identity(a.field)
    for name, m in (("A", a), ("B", b), ("A_minus_1", a - one)):
        if not m.is_invertible():
            raise SingularInput(name)
    if a * b == b * a:
        return Classification(Kind.COMMUTING)
    if not fe_residual(a, b).is_solution:
        return Classification(Kind.NOT_A_SOLUTION)
    if a.det() == a.tr() and (a * b.inverse()).tr().is_zero():
        return Classification(Kind.MATCHING)
    return hyperbolic_witness(a, b)


def hyperbolic_witness(a: Mat2, b: Mat2) -> Classification:
    """Conjugate a mismatching solution into the triangular chart.

    Stage 1 moves the isotropic a x b into the (i, j) plane, stage 2 turns
    x (i - j) into x (i + j), after which A and B are upper triangular.
    """
    f = a.field
    _, av = split(a)
    _, bv = split(b)
    c = cross(av, bv)
    if not is_isotropic(c):
        return Classification(Kind.UNRESOLVED,
                              reason="a x b is anisotropic but the matching conditions fail")
    stage1 = canonicalize_traceless(c)
    if isinstance(stage1, NeedsExtension):
        return Classification(Kind.UNRESOLVED, reason=f"NeedsExtension: sqrt({stage1.radicand})")
    c1_conj, c1 = stage1
    if c1.a2 == c1.a1:
        witness = c1_conj
    elif c1.a2 == -c1.a1:
        witness = c1_conj * pauli_basis(f)[2]
    else:
        raise AssertionError("isotropic vector left the cone")
    ac, bc = group_conjugate(a, witness), group_conjugate(b, witness)
    if not (ac.e21.is_zero() and bc.e21.is_zero()):
        return Classification(Kind.UNRESOLVED, reason="pair is not triangular after conjugation")
    params = HyperbolicParams(
        a0=ac.scalar_part(),
        a1=ac.e12 / 2,
        a3=(ac.e11 - ac.e22) / 2,
        b1=bc.e12 / 2,
        b3=(bc.e11 - bc.e22) / 2,
    )
    bad = params.violations()
    if bad:
        return Classification(Kind.UNRESOLVED, params=params,
                              reason="canonical parameters violate: " + "; ".join(bad))
    fam_a, fam_b = hyperbolic_family(params)
    if (fam_a, fam_b) != (ac, bc):
        return Classification(Kind.UNRESOLVED, params=params,
                              reason="conjugated pair differs from the canonical family")
    return Classification(Kind.HYPERBOLIC, witness=witness, params=params)


def conjugate_pair(a: Mat2, b: Mat2, c: Mat2) -> Tuple[Mat2, Mat2]:
    return group_conjugate(a, c), group_conjugate(b, c)


# ---------------------------------------------------------------------------
# Finite-field census
# ---------------------------------------------------------------------------

CENSUS_KEYS = ("p", "pairs_scanned", "fe_solutions", "commuting", "matching", "hyperbolic",
               "unresolved", "theorem11_B_discrepancies")


@dataclass
class CensusReport:
    p: int
    pairs_scanned: int = 0
    fe_solutions: int = 0
    commuting: int = 0
    matching: int = 0
    hyperbolic: int = 0
    unresolved: int = 0
    theorem11_B_discrepancies: int = 0
    # diagnostics beyond the fixed schema
    example_B_discrepancies: int = 0
    commuting_invertible_pairs: int = 0
    matching_with_isotropic_cross: int = 0
    nonmatching_with_anisotropic_cross: int = 0
    a0_2_plus_a3_tuples: int = 0
    a0_2_plus_a3_singular: int = 0
    unresolved_reasons: Dict[str, int] = dc_field(default_factory=dict)

    def merge(self, other: "CensusReport") -> None:
        for k, v in asdict(other).items():
            if k in ("p", "a0_2_plus_a3_tuples", "a0_2_plus_a3_singular"):
                continue
            if k == "unresolved_reasons":
                merged = Counter(self.unresolved_reasons)
                merged.update(v)
                self.unresolved_reasons = dict(sorted(merged.items()))
            else:
                setattr(self, k, getattr(self, k) + v)

    def to_json(self) -> dict:
        data = asdict(self)
        out = {k: data[k] for k in CENSUS_KEYS}
        out.update({k: v for k, v in data.items() if k not in CENSUS_KEYS})
        return out

    @classmethod
    def from_json(cls, obj: dict) -> "CensusReport":
        return cls(**obj)


def _all_matrices(p: int) -> np.ndarray:
    grid = np.array(list(itertools.product(range(p), repeat=4)), dtype=np.int64)
    return grid.reshape(-1, 2, 2)


def _det(m: np.ndarray, p: int) -> np.ndarray:
    return (m[..., 0, 0] * m[..., 1, 1] - m[..., 0, 1] * m[..., 1, 0]) % p


def _inverse(m: np.ndarray, p: int) -> np.ndarray:
    inv_table = np.array([0] + [pow(x, p - 2, p) for x in range(1, p)], dtype=np.int64)
    d_inv = inv_table[_det(m, p)]
    adj = np.empty_like(m)
    adj[..., 0, 0] = m[..., 1, 1]
    adj[..., 0, 1] = -m[..., 0, 1]
    adj[..., 1, 0] = -m[..., 1, 0]
    adj[..., 1, 1] = m[..., 0, 0]
    return (adj * d_inv[..., None, None]) % p


def fe_residual_mod_p(a: np.ndarray, bs: np.ndarray, p: int) -> np.ndarray:
    """Vectorised residual for one A against a stack of invertible B."""
    a_inv = _inverse(a, p)
    b_inv = _inverse(bs, p)
    bab = (b_inv @ a % p) @ bs % p
    t1 = a_inv @ bab % p
    t3 = (bs @ a_inv % p) @ b_inv % p @ a % p
    return (t1 - bab - t3 + a) % p


def _census_chunk(p: int, a_indices) -> CensusReport:
    f = PrimeField(p)
    mats = _all_matrices(p)
    gl = mats[_det(mats, p) != 0]
    report = CensusReport(p)
    eye = np.eye(2, dtype=np.int64)
    for idx in a_indices:
        a = gl[idx]
        if _det(a - eye, p) == 0:
            continue
        report.pairs_scanned += len(gl)
        res = fe_residual_mod_p(a, gl, p)
        solution = ~res.reshape(len(gl), 4).any(axis=1)
        comm = ((a @ gl) % p == (gl @ a) % p).reshape(len(gl), 4).all(axis=1)
        report.fe_solutions += int(solution.sum())
        report.commuting += int((solution & comm).sum())
        report.commuting_invertible_pairs += int(comm.sum())
        a_mat = _to_mat2(f, a)
        for bidx in np.nonzero(solution & ~comm)[0]:
            _tally(report, a_mat, _to_mat2(f, gl[bidx]))
    return report


def _to_mat2(f: Field, m: np.ndarray) -> Mat2:
    return Mat2.from_rows(f, [[int(m[0, 0]), int(m[0, 1])], [int(m[1, 0]), int(m[1, 1])]])


def _tally(report: CensusReport, a: Mat2, b: Mat2) -> None:
    result = classify_pair(a, b)
    _, av = split(a)
    _, bv = split(b)
    isotropic_cross = cross(av, bv).det().is_zero()
    if result.kind is Kind.MATCHING:
        report.matching += 1
        report.matching_with_isotropic_cross += isotropic_cross
    elif result.kind is Kind.HYPERBOLIC:
        report.hyperbolic += 1
        solves = printed_b_solves(result.params)
        report.theorem11_B_discrepancies += not solves["summary_form"]
        report.example_B_discrepancies += not solves["example_form"]
    elif result.kind is Kind.UNRESOLVED:
        report.unresolved += 1
        reasons = Counter(report.unresolved_reasons)
        reasons[result.reason] += 1
        report.unresolved_reasons = dict(reasons)
    else:
        raise AssertionError(f"non-commuting solution classified as {result.kind}")
    if result.kind is not Kind.MATCHING and not isotropic_cross:
        report.nonmatching_with_anisotropic_cross += 1


def exclusion_sweep(p: int) -> Tuple[int, int]:
    """Over F_p, count parameter tuples with a0 = 2 + a3 that pass every other
    exclusion, and how many of those give a singular A, A - 1 or B."""
    f = PrimeField(p)
    total = singular = 0
    for a1, a3, b1, b3 in itertools.product(range(p), repeat=4):
        params = HyperbolicParams.of(f, 2 + a3, a1, a3, b1, b3)
        if params.violations():
            continue
        total += 1
        a_mat, b_mat = hyperbolic_family(params)
        if not (a_mat.is_invertible() and b_mat.is_invertible()
                and (a_mat - 1).is_invertible()):
            singular += 1
    return total, singular


def enumerate_solutions(p: int, workers: int = 1) -> CensusReport:
    """Scan all pairs with A, B, A - 1 invertible over F_p, p in {3, 5, 7}."""
    if p not in (3, 5, 7):
        raise ValueError("enumerate_solutions supports p in {3, 5, 7}")
    mats = _all_matrices(p)
    n_gl = int((_det(mats, p) != 0).sum())
    chunks = [range(i, n_gl, workers) for i in range(workers)] if workers > 1 else [range(n_gl)]
    report = CensusReport(p)
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(_census_chunk, [p] * len(chunks), chunks))
    else:
        parts = [_census_chunk(p, chunks[0])]
    for part in parts:
        report.merge(part)
    report.unresolved_reasons = dict(sorted(report.unresolved_reasons.items()))
    report.a0_2_plus_a3_tuples, report.a0_2_plus_a3_singular = exclusion_sweep(p)
    return report
