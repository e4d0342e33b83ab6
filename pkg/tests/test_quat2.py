import itertools
import random

import pytest

from quatswitch import checks
from quatswitch.errors import SingularMatrix, ZeroInput
from quatswitch.field import QQ, QT, PrimeField
from quatswitch.quat2 import (Mat2, NeedsExtension, PauliVec, Traceless, canonicalize_traceless,
                              commutes, cross, cross_e, det, dot, dot_e, from_pauli,
                              group_conjugate, is_isotropic, pair_dependent, pauli_basis, rho,
                              to_pauli, triple, triple_dependent)

F3, F5 = PrimeField(3), PrimeField(5)
ONE, I, J, K = pauli_basis(QQ)


def M(rows, field=QQ):
    return Mat2.from_rows(field, rows)


def V(a1, a2, a3, field=QQ):
    return Traceless.of(field, a1, a2, a3)


def test_pauli_matrices():
    assert from_pauli((QQ(0), QQ(1), QQ(0), QQ(0))) == M([[0, 1], [-1, 0]])
    assert from_pauli((QQ(0), QQ(0), QQ(0), QQ(1))) == M([[1, 0], [0, -1]])
    assert to_pauli(Mat2.identity(QQ)) == PauliVec(QQ(1), QQ(0), QQ(0), QQ(0))


def test_multiplication_table():
    assert I * I == -ONE and J * J == ONE and K * K == ONE
    assert I * J == K and J * I == -K


def test_conjugate_examples():
    assert M([[1, 2], [3, 4]]).conjugate() == M([[4, -2], [-3, 1]])
    assert ONE.conjugate() == ONE


def test_det_and_trace_examples():
    assert I.det() == 1 and J.det() == -1
    assert ONE.tr() == 2
    a = M([[2, 3], [5, 7]])
    p = to_pauli(a)
    assert a.det() == p.a0 ** 2 + p.a1 ** 2 - p.a2 ** 2 - p.a3 ** 2


def test_inverse_examples():
    assert ONE.inverse() == ONE
    assert M([[4, 2], [0, 2]]).inverse() == M([["1/4", "-1/4"], [0, "1/2"]])
    with pytest.raises(SingularMatrix):
        M([[1, 1], [1, 1]]).inverse()


def test_dot_examples():
    assert dot(ONE, ONE) == 1
    assert dot(I, J) == 0
    assert dot(J, J) == -1


def test_cross_examples():
    i, j, k = V(1, 0, 0), V(0, 1, 0), V(0, 0, 1)
    assert cross(i, j) == k
    assert cross(j, k) == -i
    a = V(2, -1, 3)
    assert cross(a, a).is_zero()


def test_euclidean_products():
    i, j = V(1, 0, 0), V(0, 1, 0)
    assert dot_e(i, i) == 1 and dot(i, i) == 1
    assert dot_e(j, j) == 1 and dot(j, j) == -1
    assert rho(V(1, 2, 3)) == V(-1, 2, 3)


def test_triple_examples():
    i, j, k = V(1, 0, 0), V(0, 1, 0), V(0, 0, 1)
    assert triple(i, j, k) == -1
    a, b = V(1, 2, 3), V(4, 5, 6)
    assert triple(a, a, b) == 0
    assert triple(V(1, 0, 0, F5), V(0, 1, 0, F5), V(0, 0, 2, F5)) == F5(3)


def test_dependency_examples():
    assert pair_dependent(V(1, 0, 0), V(2, 0, 0))
    assert triple_dependent(V(1, 1, 0), V(0, 0, 1))
    assert cross(V(1, 1, 0), V(0, 0, 1)).det() == 0
    assert not triple_dependent(V(1, 0, 0), V(0, 1, 0))
    assert is_isotropic(V(1, 1, 0)) and not is_isotropic(V(0, 0, 0))


def test_commutes_examples():
    rng = random.Random(3)
    for _ in range(50):
        m = checks.random_mat(QQ, rng)
        assert commutes(m, m * m)
        assert commutes(m, ONE)
    assert not commutes(I, J)


def test_commutes_matches_direct_product_exhaustively_over_f3():
    mats = [Mat2(*e) for e in itertools.product(F3.elements(), repeat=4)]
    for a, b in itertools.product(mats, repeat=2):
        assert commutes(a, b) == (a * b == b * a)


def test_group_conjugation():
    rng = random.Random(11)
    c = M([[1, 2], [3, 5]])
    a = checks.random_mat(QQ, rng)
    assert group_conjugate(a, ONE) == a
    assert group_conjugate(ONE, c) == ONE
    for _ in range(200):
        x, y = checks.random_traceless(QQ, rng), checks.random_traceless(QQ, rng)
        c = checks.random_mat(QQ, rng)
        if not c.is_invertible():
            continue
        assert dot(group_conjugate(x, c), group_conjugate(y, c)) == dot(x, y)
    with pytest.raises(SingularMatrix):
        group_conjugate(a, M([[1, 1], [1, 1]]))


def test_mat2_json_round_trip():
    for f in (QQ, F5, QT):
        rng = random.Random(str(f))
        m = checks.random_mat(f, rng)
        assert Mat2.from_json(m.to_json()) == m
    assert M([[1, "1/2"], [0, -3]]).to_json() == {"field": "q", "rows": [["1", "1/2"], ["0", "-3"]]}


# -- canonicalisation ----------------------------------------------------------


def test_canonicalize_already_in_plane():
    a = V(1, 2, 0)
    c, image = canonicalize_traceless(a)
    assert c == ONE and image == a


def test_canonicalize_case_one():
    # conjugator (r - a2) - a3 i with r = 5
    c, image = canonicalize_traceless(V(1, 3, 4))
    assert c == Mat2.scalar(QQ, 2) - I * 4
    assert c == M([[2, -4], [4, 2]])
    assert image == V(1, -5, 0)
    assert group_conjugate(V(1, 3, 4), c) == image


def test_canonicalize_needs_extension():
    result = canonicalize_traceless(V(0, 1, 1))
    assert isinstance(result, NeedsExtension)
    assert result.radicand == QQ(2)


def test_canonicalize_isotropic_plane_over_f5():
    # 1 + 2^2 = 0 mod 5: the sum-of-squares branch that needs a shear
    a = V(1, 1, 2, F5)
    c, image = canonicalize_traceless(a)
    assert c.is_invertible()
    assert image.a3 == 0 and group_conjugate(a, c) == image


def test_canonicalize_zero_input():
    with pytest.raises(ZeroInput):
        canonicalize_traceless(V(0, 0, 0))


@pytest.mark.parametrize("field", [F3, F5, PrimeField(7)], ids=str)
def test_canonicalize_all_vectors_over_small_fields(field):
    for e in itertools.product(field.elements(), repeat=3):
        a = Traceless(*e)
        if a.is_zero():
            continue
        out = canonicalize_traceless(a)
        if isinstance(out, NeedsExtension):
            assert field.sqrt_opt(a.a2 * a.a2 + a.a3 * a.a3) is None
            continue
        c, image = out
        assert image.a3 == 0
        assert group_conjugate(a, c) == image
        assert image.det() == a.det()


def test_canonicalize_random_rationals():
    rng = random.Random(5)
    hits = 0
    for _ in range(300):
        a2, a3 = rng.randint(-6, 6), rng.randint(-6, 6)
        r = rng.choice([1, 2, 5, 13])
        # pythagorean-ish draws so the square root often exists
        a = V(rng.randint(-4, 4), a2 * r, a3 * r)
        if a.is_zero():
            continue
        out = canonicalize_traceless(a)
        if isinstance(out, NeedsExtension):
            continue
        hits += 1
        c, image = out
        assert image.a3 == 0 and group_conjugate(a, c) == image
    assert hits > 20


# -- identity sweeps -------------------------------------------------------------


@pytest.mark.parametrize("field", [QQ, F5], ids=str)
def test_identities_on_samples(field):
    report = checks.verify_all(field, samples=300, seed=2)
    assert checks.failing(report) == []


def test_identities_exhaustive_over_f3():
    report = checks.verify_all(F3, exhaustive=True)
    assert checks.failing(report) == []


def test_sweep_detects_a_wrong_cross_product(monkeypatch):
    def bad(a, b):
        return Traceless(a.a2 * b.a3 - a.a3 * b.a2, a.a3 * b.a1 - a.a1 * b.a3,
                         a.a1 * b.a2 - a.a2 * b.a1)
    monkeypatch.setattr(checks, "cross", bad)
    report = checks.run_checks(QQ, checks.IDENTITIES, samples=50, seed=0)
    assert report["triple_cross_expansion"] > 0
    assert report["rho_intertwines_cross"] > 0


def test_rho_intertwines_products():
    rng = random.Random(8)
    for _ in range(100):
        a, b = checks.random_traceless(QQ, rng), checks.random_traceless(QQ, rng)
        assert rho(cross(a, b)) == cross_e(a, b)
        assert dot_e(rho(a), b) == -a.a1 * b.a1 + a.a2 * b.a2 + a.a3 * b.a3
    assert det(V(1, 1, 0)) == 0
