import random
from fractions import Fraction
from math import gcd, prod

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from skewprime.basering.fields import (
    QQ, CyclotomicField, FiniteField, divisors, mult_order, prime_power,
)
from skewprime.basering.monomial import MonomialRing, PatternIdeal
from skewprime.basering.ops import (
    apply_endo, contains, cyclotomic, f_omega_p, ideal_relate, preimage,
)
from skewprime.basering.points import (
    Point, PointEndo, PointIdeal, PointRing, evaluate, parse_point, vanishing_generator,
)
from skewprime.basering.poly import Poly
from skewprime.basering.predicates import Cmp, IndexMap, Mod, parse_index_map, parse_pred
from skewprime.basering.words import Rule, WordAlgebra, WordEndo, WordIdeal
from skewprime.errors import InvalidInput, UnsupportedPoint
from skewprime.pools import random_element

QT = PointRing(QQ)
F5 = PointRing(FiniteField(5))
MON = MonomialRing(QQ, False, Cmp("ge", -3))
SQZ = MonomialRing(QQ, True)
WORDS = WordAlgebra(QQ, ("s", "t"), Cmp("ge", 0), (Rule("s", "s", "le"), Rule("s", "t", "lt")))

POINT_ENDOS = [PointEndo.power(2), PointEndo.power(3), PointEndo.subst(Poly.of([1, 1])),
               PointEndo.evaluation(2), PointEndo.subst(Poly.of([0, 0, 1, 1]))]
POINT_IDEALS = [PointIdeal.zero(), PointIdeal.unit(), PointIdeal.vanishing([Point.zero()]),
                PointIdeal.vanishing([Point.rational(2), Point.rational(-1)]),
                PointIdeal.vanishing([Point.rational(Fraction(1, 2))])]
MON_ENDOS = [IndexMap.shift(1), IndexMap.shift(3),
             parse_index_map([{"when": {"mod": [2, 0]}, "map": [1, 2]},
                              {"when": True, "map": [1, 4]}])]
MON_IDEALS = [PatternIdeal.vars_where(Cmp("ge", 0)), PatternIdeal.vars_where(Mod(2, 1)),
              PatternIdeal.pair_products(), PatternIdeal.zero()]
WORD_ENDOS = [WordEndo.shift(("s", "t"), 1), WordEndo.shift(("s", "t"), 2)]
WORD_IDEALS = [WORDS.augmentation(), WordIdeal.of_letters({"t": Cmp("ge", 2)}),
               WordIdeal.zero()]

seeds = st.integers(0, 10**6)


def elements(ring, seed, n=2, degree=3):
    rng = random.Random(seed)
    return [random_element(ring, rng, degree, indices=[0, 1, 2, 3]) for _ in range(n)]


# endomorphisms are ring maps --------------------------------------------------

@given(seeds, st.sampled_from(["point", "monomial", "square-zero", "words"]))
def test_apply_endo_is_ring_map(seed, model):
    ring, endos = {"point": (QT, POINT_ENDOS), "monomial": (MON, MON_ENDOS),
                   "square-zero": (SQZ, MON_ENDOS[:2]), "words": (WORDS, WORD_ENDOS)}[model]
    a, b = elements(ring, seed)
    sigma = random.Random(seed).choice(endos)
    ap = lambda r: apply_endo(sigma, r, ring)  # noqa: E731
    assert ap(ring.add(a, b)) == ring.add(ap(a), ap(b))
    assert ap(ring.mul(a, b)) == ring.mul(ap(a), ap(b))


# preimage / membership adjunction ------------------------------------------------

@given(seeds, st.sampled_from(["point", "monomial", "words"]))
def test_preimage_adjunction(seed, model):
    ring, endos, ideals = {"point": (QT, POINT_ENDOS, POINT_IDEALS),
                           "monomial": (MON, MON_ENDOS, MON_IDEALS),
                           "words": (WORDS, WORD_ENDOS, WORD_IDEALS)}[model]
    rng = random.Random(seed)
    sigma, ideal = rng.choice(endos), rng.choice(ideals)
    pre = preimage(sigma, ideal, ring)
    r = elements(ring, seed, 1)[0]
    if model == "point" and rng.random() < 0.5:
        # land in the ideal often enough to exercise both sides
        gen = vanishing_generator(pre.points) if pre.kind == "vanishing" else ring.zero()
        r = r * gen
    assert contains(pre, r, ring) == contains(ideal, apply_endo(sigma, r, ring), ring)


@given(st.lists(st.fractions(max_denominator=4), max_size=3),
       st.lists(st.fractions(max_denominator=4), max_size=3), seeds)
def test_vanishing_union_is_intersection(A, B, seed):
    pa = PointIdeal.vanishing(Point.rational(x) for x in A)
    pb = PointIdeal.vanishing(Point.rational(x) for x in B)
    both = PointIdeal.vanishing(Point.rational(x) for x in A + B)
    assert QT.intersect(pa, pb) == both
    r = elements(QT, seed, 1)[0]
    if seed % 2:
        r = r * vanishing_generator([Point.rational(x) for x in A])
    assert contains(both, r, QT) == (contains(pa, r, QT) and contains(pb, r, QT))


# rewriting ----------------------------------------------------------------------

def naive_zero(word):
    for a, b in zip(word, word[1:]):
        if a[0] == "s" and b[0] == "s" and a[1] <= b[1]:
            return True
        if a[0] == "s" and b[0] == "t" and a[1] < b[1]:
            return True
    return False


letters = st.tuples(st.sampled_from("st"), st.integers(0, 4))


@given(st.lists(letters, max_size=4), st.lists(letters, max_size=4))
def test_word_product_matches_scanner(u, v):
    u, v = tuple(u), tuple(v)
    prod_ = WORDS.mul(WORDS.word(u), WORDS.word(v))
    assert prod_.is_zero() == naive_zero(u + v)


@given(st.sets(st.integers(-4, 4), max_size=4), st.sets(st.integers(-4, 4), max_size=4))
def test_square_zero_products(A, B):
    a = SQZ.monomial((i, 1) for i in A)
    b = SQZ.monomial((i, 1) for i in B)
    assert SQZ.is_zero(SQZ.mul(a, b)) == bool(A & B)


# cyclotomic polynomials ----------------------------------------------------------

@pytest.mark.parametrize("r", range(1, 31))
def test_cyclotomic_matches_sympy(r):
    t = sympy.symbols("t")
    ref = sympy.Poly(sympy.cyclotomic_poly(r, t), t).all_coeffs()[::-1]
    assert cyclotomic(r).coeffs == tuple(Fraction(int(c)) for c in ref)


@pytest.mark.parametrize("r", range(1, 31))
def test_cyclotomic_product_identity(r):
    lhs = prod((cyclotomic(d) for d in divisors(r)), start=Poly.const(1))
    assert lhs == Poly.t() ** r - 1


@pytest.mark.parametrize("r", [3, 4, 5, 7, 8, 9, 12, 15])
def test_cyclotomic_vanishes_at_primitive_roots(r):
    cf = CyclotomicField(r)
    phi = cyclotomic(r).map_coeffs(cf)
    for k in range(1, r):
        value = phi(cf.zeta(k))
        assert cf.is_zero(value) == (gcd(k, r) == 1)


def test_f_omega_p_examples():
    assert f_omega_p(3, 2) == Poly.of([1, 1, 1])
    assert f_omega_p(5, 2) == cyclotomic(5)
    # 4 = 2^2 has order 2 mod 7: the factor of Phi_7 through zeta_7
    f = f_omega_p(7, 2)
    assert f.degree == 3 and f.field == CyclotomicField(7)


@pytest.mark.parametrize("r", range(2, 51))
def test_f_omega_p_degree_law(r):
    for p in (2, 3, 5, 7):
        if r % p:
            assert f_omega_p(r, p).degree == mult_order(p, r)


# fields and points ---------------------------------------------------------------

def test_finite_fields():
    assert prime_power(9) == (3, 2)
    f9 = FiniteField(9)
    nonzero = [x for x in f9.elements() if not f9.is_zero(x)]
    assert len(nonzero) == 8
    for x in nonzero:
        assert f9.mul(x, f9.inv(x)) == f9.one
    with pytest.raises(InvalidInput):
        FiniteField(6)


def test_points_and_evaluation():
    assert parse_point("zeta(6,1)", QQ) == Point.root(6, 1)
    assert Point.root(4, 2) == Point.rational(-1)
    cf, v = evaluate(Poly.of([1, 1, 1]), Point.root(3, 1))
    assert cf.is_zero(v)
    with pytest.raises(UnsupportedPoint):
        QT.check_point(Point.root(3, 1))
    assert vanishing_generator([Point.ff(1, 5)], FiniteField(5)) == Poly.of([4, 1], FiniteField(5))


def test_point_map_of_power():
    sq = PointEndo.power(2)
    assert sq.point_map(Point.rational(2)) == Point.rational(4)
    assert sq.point_map(Point.root(6, 1)) == Point.root(3, 1)
    f5 = PointEndo.power(2, FiniteField(5))
    assert f5.point_map(Point.ff(2, 5)) == Point.ff(4, 5)


def test_monomial_ideal_relations():
    a = PatternIdeal.vars_where(Cmp("ge", 0))
    b = PatternIdeal.vars_where(Cmp("ge", 2))
    assert ideal_relate(b, a, MON) == "subset"
    assert ideal_relate(a, a, MON) == "equal"
    assert MON.is_prime(a)
    assert parse_pred({"and": [{"ge": 1}, {"mod": [2, 1]}]}).holds(3)


def test_word_ideal_membership():
    aug = WORDS.augmentation()
    assert contains(aug, WORDS.word("s0*t1"), WORDS)
    assert not contains(aug, WORDS.one(), WORDS)
    assert WORDS.word("s0*s1").is_zero()
    assert not WORDS.word("s1*s0").is_zero()
