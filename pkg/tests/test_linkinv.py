import itertools
import random

import pytest

from quatswitch import linalg
from quatswitch.errors import (BadPosition, BraidIndexError, DepthExceedsDimension,
                               DiagramSyntaxError, DiagramValidationError, NonInvertibleSwitch)
from quatswitch.field import QQ, QT, Poly, PrimeField, T
from quatswitch.linkinv import (UNKNOT, VIRTUAL_TREFOIL, BraidWord, braid_closure_gauss,
                                braid_rep, invariants, move_fixtures, parse_braid, parse_gauss,
                                presentation_from_braid, presentation_from_gauss, r1_variants,
                                r2_variants)
from quatswitch.linkinv.ideals import (bareiss_det, clear_denominators, minors_gcd,
                                       smith_invariant_factors)
from quatswitch.linkinv.presentation import CONVENTIONS, switch_units
from quatswitch.quat2 import Mat2
from quatswitch.solver import HyperbolicParams, hyperbolic_family
from quatswitch.switch import (make_commutative_switch, make_noncommutative_switch, raw_switch,
                               swap_switch)

KINK = parse_gauss("O1+U1+")


@pytest.fixture(scope="module")
def switch_q():
    return make_noncommutative_switch(*hyperbolic_family(HyperbolicParams.of(QQ, 3, 1, 1, 0, 1)))


@pytest.fixture(scope="module")
def switch_t():
    t = QT.variable()
    return make_noncommutative_switch(*hyperbolic_family(HyperbolicParams.of(QT, t, 1, 1, 0, 1)))


def pooled_switches():
    t = QT.variable()
    one = Mat2.identity(QQ)
    pool = [
        make_noncommutative_switch(*hyperbolic_family(HyperbolicParams.of(QQ, 3, 1, 1, 0, 1))),
        make_noncommutative_switch(*hyperbolic_family(HyperbolicParams.of(QQ, "1/2", 2, -1, 3, 2))),
        make_noncommutative_switch(*hyperbolic_family(HyperbolicParams.of(QT, t, 1, 1, 0, 1))),
        make_commutative_switch(one * 2, Mat2.diag(QQ, 3, 5), "Type0"),
        make_commutative_switch(one * 2, Mat2.diag(QQ, 3, 5), "Type1"),
        make_noncommutative_switch(*hyperbolic_family(HyperbolicParams.of(PrimeField(5), 4, 1, 0, 2, 1))),
    ]
    return pool


# -- parsing -------------------------------------------------------------------------


def test_parse_gauss_examples():
    assert str(KINK) == "O1+U1+"
    assert len(VIRTUAL_TREFOIL) == 4
    assert parse_gauss("O1+, U1+") == KINK
    assert parse_gauss("  ") == UNKNOT
    with pytest.raises(DiagramValidationError):
        parse_gauss("O1+U1-")


@pytest.mark.parametrize("text, message", [
    ("O1+U1+O1+", "appears 3 times"),
    ("O1+O1+", "over on both"),
    ("O1+", "appears 1 times"),
])
def test_gauss_validation(text, message):
    with pytest.raises(DiagramValidationError, match=message):
        parse_gauss(text)


def test_gauss_syntax_error_position():
    with pytest.raises(DiagramSyntaxError) as err:
        parse_gauss("O1+ X2+ U1+")
    assert err.value.position == 1
    with pytest.raises(DiagramSyntaxError):
        parse_gauss("O0+U0+")


def test_parse_braid_examples():
    w = parse_braid("s1 s1", 2)
    assert [str(x) for x in w.letters] == ["s1", "s1"]
    assert str(parse_braid("v1", 2)) == "v1"
    with pytest.raises(BraidIndexError):
        parse_braid("s3", 2)
    with pytest.raises(DiagramSyntaxError):
        parse_braid("s1 x2", 3)


def test_gauss_canonical_form():
    code = parse_gauss("O7+U5+U7+O5+")
    assert code.canonical() == VIRTUAL_TREFOIL.canonical()
    assert code.relabel().crossings == [1, 2]


# -- moves ---------------------------------------------------------------------------


def test_move_fixture_examples():
    assert str(move_fixtures("R1", UNKNOT)) == "O1+U1+"
    assert str(move_fixtures("R1", UNKNOT, sign=-1)) == "O1-U1-"
    assert str(move_fixtures("R2", UNKNOT)) == "O1+O2-U2-U1+"
    with pytest.raises(BadPosition):
        move_fixtures("R1", KINK, 5)
    with pytest.raises(ValueError):
        move_fixtures("R3", KINK)


def test_move_variants_are_valid_codes():
    for base in (UNKNOT, KINK, VIRTUAL_TREFOIL):
        variants = r1_variants(base) + r2_variants(base)
        assert len(set(map(str, variants))) == len(variants)
        for v in variants:
            assert parse_gauss(str(v)) == v
            assert len(v) == len(base) + (2 if len(v) - len(base) == 2 else 4)


# -- braid closure ---------------------------------------------------------------------


def test_closure_of_virtual_trefoil_braid():
    code = braid_closure_gauss(parse_braid("s1 s1 v1", 2))
    assert code.canonical() == VIRTUAL_TREFOIL.canonical()


def test_closure_examples():
    assert braid_closure_gauss(parse_braid("s1", 2)) == KINK
    assert braid_closure_gauss(parse_braid("S1", 2)) == parse_gauss("U1-O1-")
    assert braid_closure_gauss(BraidWord(1)) == UNKNOT
    with pytest.raises(DiagramValidationError):
        braid_closure_gauss(parse_braid("s1 s1", 2))


# -- braid representation ----------------------------------------------------------------


def test_braid_rep_examples(switch_q):
    assert braid_rep(switch_q, BraidWord(3)) == linalg.identity(QQ, 6)
    assert braid_rep(switch_q, parse_braid("s1 S1", 2)) == linalg.identity(QQ, 4)
    assert braid_rep(switch_q, parse_braid("s1 s2 s1", 3)) == braid_rep(switch_q, parse_braid("s2 s1 s2", 3))


def test_braid_rep_needs_invertible_switch():
    one, zero = Mat2.identity(QQ), Mat2.zero(QQ)
    singular = raw_switch(one, zero, zero, zero)
    braid_rep(singular, parse_braid("s1", 2))
    with pytest.raises(NonInvertibleSwitch):
        braid_rep(singular, parse_braid("S1", 2))
    with pytest.raises(NonInvertibleSwitch):
        presentation_from_gauss(singular, parse_gauss("O1-U1-"))


RELATIONS = [
    ("s1 s2 s1", "s2 s1 s2"),
    ("s1 S1", ""),
    ("S2 s2", ""),
    ("v1 v1", ""),
    ("v2 v2", ""),
    ("v1 v2 v1", "v2 v1 v2"),
    ("s1 v2 v1", "v2 v1 s2"),
    ("v1 v2 s1", "s2 v1 v2"),
]


@pytest.mark.parametrize("switch", pooled_switches(), ids=lambda s: f"{s.tag.value}:{s.field}")
def test_virtual_braid_relations(switch):
    for lhs, rhs in RELATIONS:
        left = braid_rep(switch, parse_braid(lhs, 3))
        right = braid_rep(switch, parse_braid(rhs, 3))
        assert left == right, (lhs, rhs)


def test_braid_relation_fails_for_a_non_switch():
    one, zero = Mat2.identity(QQ), Mat2.zero(QQ)
    bad = raw_switch(one, one, zero, one)
    assert braid_rep(bad, parse_braid("s1 s2 s1", 3)) != braid_rep(bad, parse_braid("s2 s1 s2", 3))


# -- presentations ----------------------------------------------------------------------


def test_presentation_shapes(switch_q):
    assert presentation_from_gauss(switch_q, UNKNOT).matrix == linalg.zeros(QQ, 2, 2)
    assert presentation_from_gauss(switch_q, KINK).dimension == 4
    assert presentation_from_gauss(switch_q, VIRTUAL_TREFOIL).dimension == 8
    assert presentation_from_braid(switch_q, BraidWord(1)).matrix == linalg.zeros(QQ, 2, 2)


def test_braid_presentations(switch_q):
    p = presentation_from_braid(switch_q, parse_braid("v1", 2))
    expected = linalg.matsub(swap_switch(QQ).matrix(), linalg.identity(QQ, 4))
    assert p.matrix == expected
    s = switch_q.matrix()
    p = presentation_from_braid(switch_q, parse_braid("s1 s1", 2))
    assert p.matrix == linalg.matsub(linalg.matmul(s, s), linalg.identity(QQ, 4))
    assert p.dimension == 4


def test_presentation_blocks_match_flat_matrix(switch_t):
    p = presentation_from_gauss(switch_t, VIRTUAL_TREFOIL)
    for i, j in itertools.product(range(p.blocks), repeat=2):
        b = p.block(i, j)
        assert b.rows == ((p.matrix[2 * i][2 * j], p.matrix[2 * i][2 * j + 1]),
                          (p.matrix[2 * i + 1][2 * j], p.matrix[2 * i + 1][2 * j + 1]))


def test_kink_relations(switch_q):
    # positive kink O1+U1+: semi-arcs 0 (O -> U) and 1 (U -> O)
    p = presentation_from_gauss(switch_q, KINK)
    s = switch_q
    one, zero = Mat2.identity(QQ), Mat2.zero(QQ)
    # S(o_in, u_in) = (u_out, o_out) with o_in = 1, u_in = 0, u_out = 1, o_out = 0
    assert p.block(0, 0) == -s.B and p.block(0, 1) == one - s.A
    assert p.block(1, 0) == one - s.D and p.block(1, 1) == -s.C
    assert zero.is_zero()


def test_switch_units(switch_t):
    assert switch_units(switch_t) == (T - 2, T - 1, T, T + 1)
    q_switch = make_noncommutative_switch(*hyperbolic_family(HyperbolicParams.of(QQ, 3, 1, 1, 0, 1)))
    assert switch_units(q_switch) == ()


# -- ideals --------------------------------------------------------------------------------


def cofactor_det(m):
    n = len(m)
    if n == 0:
        return Poly.constant(1)
    if n == 1:
        return m[0][0]
    total = Poly()
    for j in range(n):
        minor = [row[:j] + row[j + 1:] for row in m[1:]]
        term = m[0][j] * cofactor_det(minor)
        total = total + term if j % 2 == 0 else total - term
    return total


def test_bareiss_matches_cofactor_expansion(switch_t):
    rng = random.Random(41)
    polys = clear_denominators(presentation_from_gauss(switch_t, VIRTUAL_TREFOIL).matrix)
    for k in range(1, 7):
        for _ in range(6):
            rows = sorted(rng.sample(range(8), k))
            cols = sorted(rng.sample(range(8), k))
            sub = [[polys[r][c] for c in cols] for r in rows]
            assert bareiss_det(sub) == cofactor_det(sub)


def test_bareiss_on_random_integer_polynomial_matrices():
    rng = random.Random(43)
    for n in range(1, 6):
        for _ in range(10):
            m = [[Poly(rng.randint(-3, 3) for _ in range(rng.randint(0, 3))) for _ in range(n)]
                 for _ in range(n)]
            assert bareiss_det(m) == cofactor_det(m)


def test_smith_form_products_match_minor_gcds(switch_t):
    for code in (KINK, parse_gauss("O1-U1-"), VIRTUAL_TREFOIL):
        polys = clear_denominators(presentation_from_gauss(switch_t, code).matrix)
        factors = smith_invariant_factors(polys)
        acc = Poly.constant(1)
        for k, d in enumerate(factors, start=1):
            acc = acc * d
            if k >= len(polys) - 2:
                assert acc == minors_gcd(polys, k)
        for a, b in zip(factors, factors[1:]):
            assert a.divides(b)


def test_smith_form_of_small_matrix():
    m = [[T, Poly()], [Poly(), T * T]]
    assert smith_invariant_factors(m) == [T, T * T]
    m = [[T - 1, Poly()], [Poly(), T + 1]]
    assert smith_invariant_factors(m) == [Poly.constant(1), T * T - 1]


def test_invariant_methods_agree(switch_t):
    for code in (UNKNOT, KINK, VIRTUAL_TREFOIL):
        p = presentation_from_gauss(switch_t, code)
        assert invariants(p, 2, "snf") == invariants(p, 2, "minors")


def test_unknot_invariants(switch_t, switch_q):
    r = invariants(presentation_from_gauss(switch_t, UNKNOT), 2)
    assert (r.rank, r.ideals) == (2, (Poly(), Poly()))
    r = invariants(presentation_from_gauss(switch_q, UNKNOT), 2)
    assert (r.rank, r.ideals) == (2, (Poly(), Poly()))


def test_trefoil_invariants_over_rationals(switch_q):
    r = invariants(presentation_from_gauss(switch_q, VIRTUAL_TREFOIL), 3)
    assert r.field == "q"
    assert r.rank == 0 and r.ideals == (Poly.constant(1),) * 3


def test_depth_limits(switch_t):
    p = presentation_from_gauss(switch_t, KINK)
    assert len(invariants(p, 5).ideals) == 5
    with pytest.raises(DepthExceedsDimension):
        invariants(p, 6)
    with pytest.raises(ValueError):
        invariants(p, 0)


def test_ideals_are_nested(switch_t):
    r = invariants(presentation_from_gauss(switch_t, VIRTUAL_TREFOIL), 4)
    for bigger, smaller in zip(r.ideals[1:], r.ideals):
        assert bigger.divides(smaller)


def test_invariant_json(switch_t):
    r = invariants(presentation_from_gauss(switch_t, VIRTUAL_TREFOIL), 2)
    obj = r.to_json("O1+O2+U1+U2+")
    assert list(obj) == ["input", "rank", "ideals", "units_stripped"]
    assert obj["ideals"][0] == {"i": 0, "poly": "t^4 + 5t^3 - t^2 - 33t - 36"}
    assert obj["units_stripped"] == ["t - 2", "t - 1", "t", "t + 1"]


# -- invariance -----------------------------------------------------------------------------


def triple_of(switch, code, convention="fjk"):
    r = invariants(presentation_from_gauss(switch, code, convention), 2)
    return r.rank, r.ideals


@pytest.mark.parametrize("base", [UNKNOT, KINK, VIRTUAL_TREFOIL], ids=["unknot", "kink", "trefoil"])
def test_moves_preserve_invariants(switch_t, base):
    ref = triple_of(switch_t, base)
    variants = r1_variants(base) + r2_variants(base)[::5]
    for v in variants:
        assert triple_of(switch_t, v) == ref, str(v)


@pytest.mark.parametrize("switch", pooled_switches()[:2] + pooled_switches()[3:],
                         ids=["q-a", "q-b", "type0", "type1", "f5"])
def test_moves_preserve_invariants_for_pooled_switches(switch):
    for base in (UNKNOT, KINK, VIRTUAL_TREFOIL):
        ref = triple_of(switch, base)
        for v in r1_variants(base) + r2_variants(base)[:2]:
            assert triple_of(switch, v) == ref


def test_other_conventions_break_invariance(switch_t):
    broken = []
    for name in CONVENTIONS:
        ref = triple_of(switch_t, VIRTUAL_TREFOIL, name)
        variants = r1_variants(VIRTUAL_TREFOIL) + r2_variants(VIRTUAL_TREFOIL)[:8]
        if any(triple_of(switch_t, v, name) != ref for v in variants):
            broken.append(name)
    assert broken == ["over-under", "under-over"]


def test_braid_and_gauss_agree(switch_t):
    word = parse_braid("s1 s1 v1", 2)
    from_braid = invariants(presentation_from_braid(switch_t, word), 2)
    from_gauss = invariants(presentation_from_gauss(switch_t, braid_closure_gauss(word)), 2)
    assert (from_braid.rank, from_braid.ideals) == (from_gauss.rank, from_gauss.ideals)


def test_braid_and_gauss_agree_on_more_closures(switch_t):
    for text, n in [("s1 S2 v1 s2", 3), ("S1 v1 S1", 2), ("s1 v2 s1 v2 S1", 3)]:
        word = parse_braid(text, n)
        try:
            code = braid_closure_gauss(word)
        except DiagramValidationError:
            continue
        from_braid = invariants(presentation_from_braid(switch_t, word), 2)
        from_gauss = invariants(presentation_from_gauss(switch_t, code), 2)
        assert (from_braid.rank, from_braid.ideals) == (from_gauss.rank, from_gauss.ideals), text
