"""Sweeps of the quaternion identities and dependency lemmas.

Each check takes sampled inputs and returns True when the identity holds.
Sampling is seeded and, over a small prime field, can be exhaustive.
"""

from __future__ import annotations

import itertools
import random
from typing import Callable, Dict, Iterator, List, Tuple

from . import linalg
from .field import Field, PrimeField, Scalar
from .quat2 import (Mat2, Traceless, commutes, cross, cross_e, cross_via_matrices, dot,
                    from_pauli, is_isotropic, pair_dependent, rho, to_pauli, triple,
                    triple_dependent)


def random_scalar(field: Field, rng: random.Random) -> Scalar:
    # a third of the draws come from {-2..2} so that degenerate cases show up
    if rng.random() < 1 / 3:
        return field(rng.randint(-2, 2))
    return field.random(rng)


def random_mat(field: Field, rng: random.Random) -> Mat2:
    return Mat2(*(random_scalar(field, rng) for _ in range(4)))


def random_traceless(field: Field, rng: random.Random) -> Traceless:
    return Traceless(*(random_scalar(field, rng) for _ in range(3)))


def _rank(*vs: Traceless) -> int:
    return linalg.rank(tuple(v.components() for v in vs))


# -- identities (criterion: exact equality) ---------------------------------

def _conj_laws(a: Mat2, b: Mat2) -> bool:
    return ((a + b).conjugate() == a.conjugate() + b.conjugate()
            and (a * b).conjugate() == b.conjugate() * a.conjugate()
            and a.conjugate().conjugate() == a)


def _norm_trace(a: Mat2, b: Mat2) -> bool:
    f = a.field
    return (a * a.conjugate() == Mat2.scalar(f, a.det())
            and a + a.conjugate() == Mat2.scalar(f, a.tr()))


def _det_multiplicative(a: Mat2, b: Mat2) -> bool:
    return (a * b).det() == a.det() * b.det()


def _pauli_round_trip(a: Mat2, b: Mat2) -> bool:
    v = to_pauli(a)
    return from_pauli(v) == a and v.a0 == a.tr() / 2 and a.det() == v.a0 ** 2 + dot(v.vector, v.vector)


def _dot_is_polar(a: Mat2, b: Mat2) -> bool:
    return dot(a, b) == dot(b, a) and dot(a, a) == a.det() and dot(a, b) == (a * b.conjugate()).tr() / 2


def _cross_forms(a: Traceless, b: Traceless, c: Traceless) -> bool:
    prod = a.to_mat() * b.to_mat()
    return (cross(a, b) == cross_via_matrices(a, b)
            and prod == Mat2.scalar(a.field, -dot(a, b)) + cross(a, b).to_mat()
            and cross(a, b) == -cross(b, a))


def _triple_cross(a: Traceless, b: Traceless, c: Traceless) -> bool:
    return cross(a, cross(b, c)) == b * dot(c, a) - c * dot(b, a)


def _cross_dot(a: Traceless, b: Traceless, c: Traceless) -> bool:
    return dot(cross(a, c), cross(b, c)) == c.det() * dot(a, b) - dot(a, c) * dot(b, c)


def _det_cross(a: Traceless, b: Traceless, c: Traceless) -> bool:
    ab = dot(a, b)
    return cross(a, b).det() == a.det() * b.det() - ab * ab


def _rho_cross(a: Traceless, b: Traceless, c: Traceless) -> bool:
    return rho(cross(a, b)) == cross_e(a, b)


def _triple_alternating(a: Traceless, b: Traceless, c: Traceless) -> bool:
    t = triple(a, b, c)
    return (t == dot(a, cross(b, c)) and triple(b, a, c) == -t and triple(a, c, b) == -t
            and triple(a, a, b).is_zero())


# -- dependency lemmas (biconditionals) ----------------------------------------

def _pair_lemma(a: Traceless, b: Traceless, c: Traceless) -> bool:
    return pair_dependent(a, b) == (_rank(a, b) < 2)


def _commute_lemma(x: Mat2, y: Mat2) -> bool:
    direct = x * y == y * x
    return commutes(x, y) == direct == (_rank(x.traceless(), y.traceless()) < 2)


def _triple_lemma(a: Traceless, b: Traceless, c: Traceless) -> bool:
    ab = cross(a, b)
    dependent = _rank(a, b, ab) < 3
    return (dependent == triple_dependent(a, b) == (is_isotropic(ab) or ab.is_zero())
            == ab.det().is_zero())


MatCheck = Callable[[Mat2, Mat2], bool]
VecCheck = Callable[[Traceless, Traceless, Traceless], bool]

IDENTITIES: Dict[str, Tuple[str, Callable]] = {
    "conjugation_anti_isomorphism": ("mat", _conj_laws),
    "norm_and_trace": ("mat", _norm_trace),
    "det_multiplicative": ("mat", _det_multiplicative),
    "pauli_round_trip": ("mat", _pauli_round_trip),
    "dot_polarises_det": ("mat", _dot_is_polar),
    "cross_product_forms": ("vec", _cross_forms),
    "triple_cross_expansion": ("vec", _triple_cross),
    "cross_dot_identity": ("vec", _cross_dot),
    "det_of_cross": ("vec", _det_cross),
    "rho_intertwines_cross": ("vec", _rho_cross),
    "triple_product_alternating": ("vec", _triple_alternating),
}

LEMMAS: Dict[str, Tuple[str, Callable]] = {
    "pair_dependent_iff_cross_zero": ("vec", _pair_lemma),
    "commute_iff_traceless_dependent": ("mat", _commute_lemma),
    "triple_dependent_iff_cross_degenerate": ("vec", _triple_lemma),
}


def _exhaustive(field: PrimeField, kind: str) -> Iterator[tuple]:
    els = field.elements()
    if kind == "mat":
        mats = [Mat2(*e) for e in itertools.product(els, repeat=4)]
        return itertools.product(mats, repeat=2)
    vecs = [Traceless(*e) for e in itertools.product(els, repeat=3)]
    if kind == "pair":
        return ((a, b, b) for a, b in itertools.product(vecs, repeat=2))
    return itertools.product(vecs, repeat=3)


def _sampled(field: Field, kind: str, samples: int, seed: int) -> Iterator[tuple]:
    rng = random.Random(f"{seed}:{kind}")
    for _ in range(samples):
        if kind == "mat":
            yield random_mat(field, rng), random_mat(field, rng)
        else:
            yield tuple(random_traceless(field, rng) for _ in range(3))


def run_checks(field: Field, checks: Dict[str, Tuple[str, Callable]], samples: int = 1000,
               seed: int = 0, exhaustive: bool = False) -> Dict[str, int]:
    """Number of counterexamples per named check.

    Exhaustive mode enumerates all matrix pairs and all traceless triples
    (traceless pairs for the biconditionals, whose third slot is unused).
    """
    failures = {}
    for name, (kind, fn) in checks.items():
        if exhaustive:
            if not isinstance(field, PrimeField):
                raise ValueError("exhaustive sweeps need a prime field")
            ek = "pair" if checks is LEMMAS and kind == "vec" else kind
            inputs = _exhaustive(field, ek)
        else:
            inputs = _sampled(field, kind, samples, seed)
        failures[name] = sum(1 for args in inputs if not fn(*args))
    return failures


def verify_all(field: Field, samples: int = 1000, seed: int = 0,
               exhaustive: bool = False) -> Dict[str, Dict[str, int]]:
    return {
        "identities": run_checks(field, IDENTITIES, samples, seed, exhaustive),
        "lemmas": run_checks(field, LEMMAS, samples, seed, exhaustive),
    }


def failing(report: Dict[str, Dict[str, int]]) -> List[str]:
    return [name for group in report.values() for name, n in group.items() if n]
