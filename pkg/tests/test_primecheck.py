import random
from functools import lru_cache
from itertools import product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from skewprime.basering.fields import QQ, FiniteField
from skewprime.basering.monomial import MonomialRing, PatternIdeal
from skewprime.basering.points import Point, PointEndo, PointIdeal, PointRing
from skewprime.basering.poly import Poly
from skewprime.basering.predicates import Cmp, IndexMap, Mod, conj, parse_index_map
from skewprime.crossed import CrossedSpec
from skewprime.errors import NotAutomorphism, NotPrime, UnsupportedIdealClass
from skewprime.monoid import MonoidSpec
from skewprime.primecheck import (
    CERTIFICATES, invariant_pair_test, is_invariant, is_prime_base, is_stable,
    laurent_sprime, preimage_chain, reversibility, sprime_orbit, stable_core,
)

NAT = MonoidSpec("natural")
FREE = MonoidSpec("free", ("v", "w"))


def point_spec(q, p):
    fld = QQ if q is None else FiniteField(q)
    ring = PointRing(fld, roots=q is None)
    return CrossedSpec.build(ring, NAT, {"x": PointEndo.power(p, fld)})


# exhaustive oracle over F_q -------------------------------------------------------
#
# M = R/m_a twisted by sigma^k, sigma(t) = t^p.  Since R/m_a is a field and 1 lies
# in sigma^p(R), condition "m sigma^p(R) sigma^q(b) = 0 for all q >= p" with m != 0
# says that sigma^(k+q)(b) vanishes at a for every q >= p, i.e. b(a^(p^(k+q))) = 0.
# The conclusion "M sigma^j(b) = 0 for all j" says b(a^(p^(k+j))) = 0 for all j >= 0.
# Everything below uses plain integer arithmetic mod a prime q.


def _horner(coeffs, x, q):
    acc = 0
    for c in reversed(coeffs):
        acc = (acc * x + c) % q
    return acc


@lru_cache(maxsize=None)
def zero_sets(q):
    """Zero sets of every nonzero b in F_q[t] with deg b < q, by enumeration."""
    out = set()
    for coeffs in product(range(q), repeat=q):
        if any(coeffs):
            out.add(frozenset(x for x in range(q) if _horner(coeffs, x, q) == 0))
    return out


def oracle_sprime(q, a, p, k, horizon):
    x = a
    for _ in range(k):
        x = pow(x, p, q)
    pts = []
    for _ in range(horizon):
        pts.append(x)
        x = pow(x, p, q)
    for Z in zero_sets(q):
        vanish = [y in Z for y in pts]
        if all(vanish):
            continue
        # hypothesis holds from some start on, conclusion fails
        if any(all(vanish[s:]) for s in range(horizon // 2)):
            return False
    return True


@pytest.mark.parametrize("q", [3, 5, 7])
def test_orbit_criterion_matches_exhaustive_oracle(q):
    cases = 0
    for p in (2, 3):
        spec = point_spec(q, p)
        for a in range(1, q):
            ideal = PointIdeal.vanishing([Point.ff(a, q)])
            for k in range(4):
                got = sprime_orbit(spec, ideal, k).proven
                assert got == oracle_sprime(q, a, p, k, 3 * q), (q, p, a, k)
                cases += 1
    assert cases == 2 * (q - 1) * 4


# stable core ------------------------------------------------------------------

def _stable_pool_points(spec, ring, q, rng, n=30):
    out = []
    for _ in range(n):
        pts = rng.sample(range(q), rng.randint(1, q - 1))
        out.append(PointIdeal.vanishing(Point.ff(x, q) for x in pts))
    return [J for J in out if is_stable(spec, J).proven]


@given(st.sampled_from([5, 7, 11]), st.sampled_from([2, 3]), st.integers(1, 10), st.integers(0, 999))
def test_stable_core_point_model(q, p, a, seed):
    a = a % (q - 1) + 1
    spec = point_spec(q, p)
    ring = spec.ring
    ideal = PointIdeal.vanishing([Point.ff(a, q)])
    core = stable_core(spec, ideal)
    assert core.exact
    assert ring.relate(core.ideal, ideal) in ("subset", "equal")
    assert is_stable(spec, core.ideal).proven
    for J in _stable_pool_points(spec, ring, q, random.Random(seed)):
        if ring.relate(J, ideal) in ("subset", "equal"):
            assert ring.relate(J, core.ideal) in ("subset", "equal")


ZRING = MonomialRing(QQ, False)
INDEX_MAPS = [IndexMap.shift(1), IndexMap.shift(-2),
              parse_index_map([{"when": {"mod": [2, 0]}, "map": [1, 2]},
                               {"when": True, "map": [1, -2]}])]


def _random_pred(rng):
    kind = rng.choice(["ge", "le", "mod", "and"])
    if kind in ("ge", "le"):
        return Cmp(kind, rng.randint(-4, 4))
    if kind == "mod":
        m = rng.choice([2, 3])
        return Mod(m, rng.randrange(m))
    return conj(Cmp("ge", rng.randint(-4, 4)), Mod(2, rng.randrange(2)))


@given(st.integers(0, 10**6))
def test_stable_core_monomial_model(seed):
    rng = random.Random(seed)
    spec = CrossedSpec.build(ZRING, NAT, {"x": rng.choice(INDEX_MAPS)})
    ideal = PatternIdeal.vars_where(_random_pred(rng))
    try:
        core = stable_core(spec, ideal, cap=64)
    except UnsupportedIdealClass:
        # cores beyond variable and pair patterns are reported, not guessed
        return
    if not core.exact:
        return
    assert ZRING.relate(core.ideal, ideal) in ("subset", "equal")
    assert is_stable(spec, core.ideal).proven
    for _ in range(8):
        J = PatternIdeal.vars_where(_random_pred(rng))
        if is_stable(spec, J).proven and ZRING.relate(J, ideal) in ("subset", "equal"):
            assert ZRING.relate(J, core.ideal) in ("subset", "equal")


# orbit criterion --------------------------------------------------------------

AFFINE = [(None, "0", 2), (None, "1", 2), (None, "-1", 3), (None, "2", 2), (None, "1/3", 2)]
AFFINE += [(None, f"zeta({m},{e})", p) for m in (3, 5, 6, 12, 9, 20) for e in (1, 2)
           for p in (2, 3) if e < m]
AFFINE += [(q, str(a), p) for q in (5, 7, 13) for a in range(1, q) for p in (2, 3)]


@pytest.mark.parametrize("q,a,p", AFFINE)
def test_twist_monotone(q, a, p):
    from skewprime.basering.points import parse_point
    spec = point_spec(q, p)
    ideal = PointIdeal.vanishing([parse_point(a, spec.ring.field)])
    verdicts = [sprime_orbit(spec, ideal, k).proven for k in range(6)]
    for k in range(5):
        if verdicts[k]:
            assert verdicts[k + 1]


@st.composite
def affine_points(draw):
    if draw(st.booleans()):
        q = draw(st.sampled_from([5, 7, 11, 13]))
        return q, str(draw(st.integers(0, q - 1))), draw(st.sampled_from([2, 3]))
    m = draw(st.integers(1, 24))
    point = draw(st.one_of(st.sampled_from(["0", "1", "-1", "2", "1/2"]),
                           st.integers(0, m - 1).map(lambda e: f"zeta({m},{e})")))
    return None, point, draw(st.sampled_from([2, 3]))


@given(affine_points())
def test_twist_monotone_property(case):
    test_twist_monotone(*case)


def test_orbit_criterion_examples():
    spec = point_spec(None, 2)
    zeta6 = PointIdeal.vanishing([Point.root(6, 1)])
    v0 = sprime_orbit(spec, zeta6, 0)
    assert v0.refuted and v0.data["equality_form_holds"] is False
    assert sprime_orbit(spec, zeta6, 1).proven
    v = sprime_orbit(spec, PointIdeal.vanishing([Point.rational(2)]), 0)
    assert v.proven and v.data["certificate"] == "orbit-density" and "orbit-density" in CERTIFICATES
    with pytest.raises(NotPrime):
        sprime_orbit(spec, PointIdeal.vanishing([Point.rational(2), Point.rational(3)]))


def test_preimage_chain_shift():
    ring = MonomialRing(QQ, False, Cmp("ge", -2))
    ch = preimage_chain(ring, IndexMap.shift(1), PatternIdeal.vars_where(Cmp("ge", 0)))
    assert ch.kind == "increasing" and ch.stabilizes_at == 2 and ch.exact
    ch = preimage_chain(ZRING, IndexMap.shift(1), PatternIdeal.vars_where(Cmp("ge", 0)))
    assert ch.stabilizes_at is None and ch.exact
    with pytest.raises(UnsupportedIdealClass):
        preimage_chain(ZRING, IndexMap.shift(1), PatternIdeal.pair_products())


# stability, invariance, reversibility -----------------------------------------

AFFINE_AUTOS = [Poly.of([1, 1]), Poly.of([0, 2]), Poly.of([3, -1]), Poly.of([0, -1])]


@given(st.sampled_from(AFFINE_AUTOS), st.lists(st.integers(-4, 4), min_size=1, max_size=3))
def test_stable_implies_invariant_for_automorphisms(image, pts):
    # Q[t] is noetherian and t -> c t + d is an automorphism
    spec = CrossedSpec.build(PointRing(QQ), NAT, {"x": PointEndo.subst(image)})
    ideal = PointIdeal.vanishing(Point.rational(x) for x in pts)
    if is_stable(spec, ideal).proven:
        assert is_invariant(spec, ideal).proven


REV_CORPUS = [
    ({"kind": "free", "alphabet": ["v", "w"]}, {"v": {"subst": [1, 1]}, "w": {"subst": [0, -1]}},
     ["zero", {"vanishing": ["0"]}, {"vanishing": ["-1/2"]}]),
    ({"kind": "free", "alphabet": ["v", "w"]}, {"v": {"shift": 1}, "w": {"eval": 0}},
     ["zero", {"vanishing": ["0"]}]),
    ({"kind": "natural"}, {"x": {"power": 2}},
     ["zero", {"vanishing": ["0"]}, {"vanishing": ["1"]}, {"vanishing": ["-1"]},
      {"vanishing": ["2"]}]),
    ({"kind": "natural"}, {"x": {"shift": 1}}, ["zero", {"vanishing": ["0"]}]),
]


def test_reversibility_corpus():
    """Reversible + stable + S-prime ideal forces invariance on every instance here."""
    from skewprime.scenario import load_scenario, run_query
    checked = 0
    for monoid, action, ideals in REV_CORPUS:
        for ideal in ideals:
            sc = load_scenario({"schema": 1, "ring": {"model": "point", "field": "Q"},
                                "monoid": monoid, "action": action, "ideal": ideal,
                                "query": [{"op": "reversibility", "bound": 3}, {"op": "stable"},
                                          {"op": "sprime"}, {"op": "invariant"}]})
            rev, stable, sp, inv = (run_query(sc, q)["label"] for q in sc.queries)
            if rev == "Proven" and stable == "Proven" and sp.startswith("Proven"):
                assert inv == "Proven", (monoid, action, ideal)
                checked += 1
    assert checked >= 3


def test_reversibility_constant_image():
    spec = CrossedSpec.build(PointRing(QQ), FREE, {"v": PointEndo.subst(Poly.of([1, 1])),
                                                   "w": PointEndo.evaluation(0)})
    v = reversibility(spec, 2)
    assert v.refuted and v.data["certificate"] == "constant-image"
    assert is_invariant(spec, PointIdeal.zero()).refuted


def test_stability_rev_auto():
    beta = parse_index_map([
        {"when": {"ge": 0}, "map": [1, 0]},
        {"when": {"and": [{"le": -1}, {"mod": [2, 1]}]}, "map": [1, -2]},
        {"when": {"in": [-2]}, "map": [1, 1]},
        {"when": {"and": [{"le": -4}, {"mod": [2, 0]}]}, "map": [1, 2]},
    ])
    spec = CrossedSpec.build(ZRING, FREE, {"v": IndexMap.shift(2), "w": beta})
    ideal = PatternIdeal.vars_where(Cmp("ge", 0))
    assert is_stable(spec, ideal).proven
    assert is_invariant(spec, ideal).refuted


def test_base_primeness():
    qt = PointRing(QQ)
    assert is_prime_base(qt, PointIdeal.zero()).proven
    assert is_prime_base(qt, PointIdeal.vanishing([Point.rational(3)])).proven
    assert is_prime_base(qt, PointIdeal.vanishing([Point.rational(3), Point.rational(1)])).refuted
    assert is_prime_base(ZRING, PatternIdeal.vars_where(Cmp("ge", 0))).proven
    assert is_prime_base(ZRING, PatternIdeal.pair_products()).refuted


def test_pair_test_and_laurent():
    spec = CrossedSpec.build(ZRING, NAT, {"x": IndexMap.shift(1)})
    v = invariant_pair_test(spec, PatternIdeal.zero(), mode="invariant", seed=1)
    assert v.proven and v.scope == "pool"
    qt = PointRing(QQ)
    lspec = CrossedSpec.build(qt, MonoidSpec("integers"), {"x": PointEndo.subst(Poly.of([1, 1]))})
    assert laurent_sprime(lspec, PointIdeal.zero()).proven
    bad = CrossedSpec.build(qt, MonoidSpec("integers"), {"x": PointEndo.power(2)})
    with pytest.raises(NotAutomorphism):
        laurent_sprime(bad, PointIdeal.zero())
