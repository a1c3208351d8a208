
import pytest
from hypothesis import given
from hypothesis import strategies as st

from skewprime.assoc import (
    affine_case_analysis, annihilator_growth, ass_crossed, ass_induced, min_twist,
)
from skewprime.basering.fields import QQ, FiniteField, mult_order
from skewprime.basering.monomial import MonomialRing, PatternIdeal
from skewprime.basering.points import Point, PointEndo, PointIdeal, PointRing
from skewprime.basering.poly import Poly
from skewprime.basering.predicates import Cmp, IndexMap
from skewprime.crossed import CrossedSpec
from skewprime.dynamics import _iterate, orbit
from skewprime.monoid import MonoidSpec
from skewprime.pools import element_pool
from skewprime.primecheck import stable_core

NAT = MonoidSpec("natural")
CYC = PointRing(QQ, roots=True)


def power_spec(ring, p):
    return CrossedSpec.build(ring, NAT, {"x": PointEndo.power(p, ring.field)})


@st.composite
def root_or_ff_point(draw):
    if draw(st.booleans()):
        m = draw(st.integers(1, 60))
        return CYC, Point.root(m, draw(st.integers(0, m - 1))), draw(st.sampled_from([2, 3, 5]))
    q = draw(st.sampled_from([5, 7, 8, 9, 11, 13, 16, 25, 27]))
    return PointRing(FiniteField(q)), Point.ff(draw(st.integers(0, q - 1)), q), \
        draw(st.sampled_from([2, 3]))


@given(root_or_ff_point())
def test_orbit_exponent_arithmetic_matches_iteration(case):
    ring, a, p = case
    sigma = PointEndo.power(p, ring.field)
    fast = orbit(a, sigma)
    slow = _iterate(a, sigma, 10_000, "plain iteration")
    assert fast.kind == slow.kind == "finite"
    assert (fast.preperiod, fast.period) == (slow.preperiod, slow.period)
    assert fast.points == slow.points


@given(root_or_ff_point())
def test_ass_singleton_law(case):
    ring, a, p = case
    spec = power_spec(ring, p)
    ideal = PointIdeal.vanishing([a])
    mt = min_twist(spec, ideal)
    ass = ass_induced(spec, ideal)
    assert mt.kind == "found"
    assert len(ass.primes) == 1
    core = ass.primes[0].core
    cycle = orbit(a, spec.gen_endo("x")).cycle()
    # the intersection of the maximal ideals of the cycle points
    assert core == PointIdeal.vanishing(cycle)
    # cores are fixed points of the stable core
    again = stable_core(spec, core)
    assert again.exact and ring.relate(again.ideal, core) == "equal"


@pytest.mark.parametrize("r", [3, 5, 7, 9, 15, 21, 31])
@pytest.mark.parametrize("p", [2, 3])
def test_affine_case_b_degree(r, p):
    if r % p == 0:
        return
    rep = affine_case_analysis(CYC, Point.root(r, 1), p)
    assert rep.case == "b" and rep.ell == mult_order(p, r)
    assert rep.orbit.period == rep.ell
    assert rep.min_twist.k == 0


def test_affine_cases():
    qt = PointRing(QQ)
    a = affine_case_analysis(qt, Point.zero(), 2)
    assert a.case == "a" and a.min_twist.k == 0
    assert a.ass.primes[0].generator == "t"
    c = affine_case_analysis(CYC, Point.root(6, 1), 2)
    assert c.case == "c" and c.k == 1 and (c.orbit.preperiod, c.orbit.period) == (1, 2)
    assert c.ass.primes[0].generator == str(Poly.of([1, 1, 1]))
    d = affine_case_analysis(qt, Point.rational(2), 2)
    assert d.case == "d" and d.orbit.kind == "infinite"
    assert d.ass.primes[0].core == PointIdeal.zero()


def test_min_twist_chains():
    ring = MonomialRing(QQ, False, Cmp("ge", -2))
    spec = CrossedSpec.build(ring, NAT, {"x": IndexMap.shift(1)})
    ideal = PatternIdeal.vars_where(Cmp("ge", 0))
    assert min_twist(spec, ideal).label() == "k=2"
    zring = MonomialRing(QQ, False)
    zspec = CrossedSpec.build(zring, NAT, {"x": IndexMap.shift(1)})
    assert min_twist(zspec, ideal).label() == "NoneExistExact"
    res = ass_induced(zspec, ideal)
    assert res.status == "exact" and res.primes == ()


def test_ass_crossed_rev_simple():
    qt = PointRing(QQ)
    spec = CrossedSpec.build(qt, MonoidSpec("free", ("v", "w")),
                             {"v": PointEndo.subst(Poly.of([1, 1])), "w": PointEndo.evaluation(0)})
    res = ass_crossed(spec, PointIdeal.zero())
    assert res.label() == "{0 (twist e)}"


def test_annihilator_growth():
    ring = MonomialRing(QQ, True)
    for f in element_pool(ring, seed=11, size=20):
        g = annihilator_growth(ring, f)
        assert g["t_n kills f"] is False and g["t_n kills f*t_n"] is True
        assert g["n"] not in f.variables()
