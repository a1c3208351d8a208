"""Stability, invariance, stable cores, reversibility and S-primeness tests.

Every function returns a :class:`~skewprime.verdict.Verdict`.  Refutations
carry data that can be replayed with ``contains`` and ``apply_endo``; exact
positive answers name the certificate they rely on.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .basering.fields import FiniteField, Rationals
from .basering.monomial import MonomialRing, PatternIdeal, var_str
from .basering.ops import endo_equal
from .basering.points import Point, PointEndo, PointIdeal, PointRing, vanishing_generator
from .basering.predicates import (
    TRUE,
    Cmp,
    Mod,
    IndexMap,
    conj,
    counterexample,
    equivalent,
    implies,
    in_set,
    is_empty,
    window,
)
from .basering.words import WordAlgebra, WordIdeal, word_str
from .crossed import CrossedSpec, invert_endo
from .dynamics import orbit
from .errors import (
    InvalidInput,
    NotAutomorphism,
    NotPrime,
    UnsupportedIdealClass,
    ZeroModule,
)
from .pools import DEFAULT_CAP, DEFAULT_WORD_BOUND, element_pool
from .verdict import Verdict, proven, refuted, undecided

CERTIFICATES = {
    "image-letter-annihilation":
        "m times every generator in the image of sigma(g) lies in I and b has no constant "
        "term, so m sigma(g)(R) sigma(gh)(b) lies in I for every h",
    "middle-letter":
        "a letter that forms no forbidden pair with any letter on either side, so "
        "m1 c m2 is nonzero for all nonzero monomials m1, m2",
    "variable-disjointness":
        "sigma is a nonzero translation of the indices, so f and sigma^q(g) share no "
        "variable for large q and their product is nonzero",
    "evaluation-absorption":
        "sigma(u) evaluates at c and sigma(v) translates by d != 0, so sigma(u v^j)(b) = "
        "b(c + j d) for all j and a polynomial vanishing there is zero",
    "augmentation-line":
        "m kills every generator in the image of the twist, so the twisted submodule "
        "generated by m is the line F m with annihilator the augmentation ideal",
    "constant-image":
        "sigma(g) is an evaluation, so every sigma(h1) o sigma(g) is that same evaluation "
        "while sigma(g) o sigma(h) evaluates somewhere else",
    "chain-nonstabilization":
        "sigma is a bijection of the index domain and the first preimage differs from I, "
        "so the preimage chain grows strictly forever",
    "orbit-density":
        "the orbit is infinite, so every tail is an infinite point set and vanishing on "
        "it forces zero",
}


# ---------------------------------------------------------------------------
# helpers


def _ideal_str(ideal) -> str:
    return str(ideal)


def _difference_witness(ring, a, b) -> str | None:
    """Text of an element of ``a`` outside ``b`` (None when a is inside b)."""
    if ring.relate(a, b) in ("subset", "equal"):
        return None
    if isinstance(ring, PointRing):
        if a.kind == "unit":
            return "1"
        return str(vanishing_generator(a.points, ring.field))
    if isinstance(ring, MonomialRing):
        m = ring.subset_witness(a, b)
        return str(ring.monomial(m)) if m else "1"
    if a.kind == "unit":
        return "1"
    for f in ring.families:
        i = counterexample(a.letter_pred(f), b.letter_pred(f), ring.domain)
        if i is not None:
            return f"{f}{i}"
    return None


def _generators(spec: CrossedSpec, with_inverses: bool = True):
    """(label, endo) for each generator, plus inverses where the monoid has them."""
    out = []
    for k, g in enumerate(spec.monoid.alphabet):
        out.append((g, spec.gen_endo(g)))
        if with_inverses and spec.monoid.has_inverse(k):
            out.append((f"{g}^-1", invert_endo(spec.ring, spec.gen_endo(g))))
    return out


def is_prime_base(ring, ideal, seed: int = 0, pool: int = 24) -> Verdict:
    """Primeness of ``ideal`` in R (exact for points and variable patterns;
    for word algebras a middle letter is looked for and replayed on a pool)."""
    if isinstance(ring, PointRing):
        if ideal.kind == "zero":
            return proven("K[t] is a domain")
        if ideal.kind == "unit":
            return refuted("unit ideal")
        if len(ideal.points) == 1:
            return proven("maximal ideal of a point")
        a, b = sorted(ideal.points, key=Point.sort_key)[:2]
        return refuted("two points give a zero-divisor pair",
                       a=str(vanishing_generator([a], ring.field)),
                       b=str(vanishing_generator([b], ring.field)))
    if isinstance(ring, MonomialRing):
        ok, wit = ring.is_prime(ideal)
        return proven("variable ideal in a polynomial ring") if ok else refuted(
            "explicit zero-divisor pair", **wit)
    if ideal.kind == "unit":
        return refuted("unit ideal")
    if ideal == ring.augmentation():
        return proven("quotient is the coefficient field")
    return word_algebra_prime(ring, ideal, seed=seed, pool=pool)


def middle_letter(ring: WordAlgebra, ideal: WordIdeal):
    """A letter outside ``ideal`` that forms no forbidden pair on either side."""
    w = window(*ideal.preds(), *(r.right_pred(0) for r in ring.rules), ring.domain)
    for i in sorted((i for i in w if ring.domain.holds(i)), key=lambda i: (abs(i), i)):
        for f in ring.families:
            if ring.word_in(ideal, ((f, i),)):
                continue
            blocked = any(r.right == f and not is_empty(conj(r.left_pred(i), ring.domain))
                          for r in ring.rules)
            blocked = blocked or any(r.left == f and not is_empty(conj(r.right_pred(i), ring.domain))
                                     for r in ring.rules)
            if not blocked:
                return (f, i)
    return None


def word_algebra_prime(ring: WordAlgebra, ideal: WordIdeal, seed: int = 0, pool: int = 24) -> Verdict:
    c = middle_letter(ring, ideal)
    if c is None:
        return undecided("no middle letter found", bound=pool)
    from .pools import monomial_pool
    mons = [m for m in monomial_pool(ring, seed=seed, size=pool) if not ring.contains(ideal, m)]
    cw = ring.word((c,))
    for m1, m2 in product(mons, mons):
        if ring.contains(ideal, ring.mul(ring.mul(m1, cw), m2)):
            return undecided("middle letter failed on a pool pair", bound=pool,
                             m1=str(m1), m2=str(m2))
    return proven("m1 * c * m2 is nonzero for every pool pair", scope="pool",
                  certificate="middle-letter", letter=f"{c[0]}{c[1]}", pairs=len(mons) ** 2)


# ---------------------------------------------------------------------------
# stability and invariance


def is_stable(spec: CrossedSpec, ideal) -> Verdict:
    """sigma(g)(I) inside I for every generator g, i.e. I inside sigma(g)^{-1}(I)."""
    ring = spec.ring
    for g, e in _generators(spec):
        try:
            pre = ring.preimage(e, ideal)
        except UnsupportedIdealClass:
            if isinstance(ring, MonomialRing):
                m = ring.image_contained(e, ideal)
                if m is not None:
                    return refuted(f"sigma({g}) moves a generator out of I", generator=g,
                                   element=str(ring.monomial(m)),
                                   image=str(ring.apply(e, ring.monomial(m))))
                return undecided("generator instances on the decision window stay inside I",
                                 bound=len(ideal.preds()))
            raise
        rel = ring.relate(ideal, pre)
        if rel not in ("subset", "equal"):
            wit = _difference_witness(ring, ideal, pre)
            data = {"generator": g, "element": wit}
            if isinstance(ring, PointRing):
                moved = [a for a in ideal.points if e.point_map(a) not in ideal.points]
                data["point"] = str(moved[0])
                data["image_point"] = str(e.point_map(moved[0]))
            return refuted(f"sigma({g})(I) is not inside I", **data)
    return proven("I lies in the preimage of I under every generator",
                  certificate="preimage-containment")


def is_invariant(spec: CrossedSpec, ideal) -> Verdict:
    ring = spec.ring
    for g, e in _generators(spec):
        pre = ring.preimage(e, ideal)
        rel = ring.relate(pre, ideal)
        if rel != "equal":
            wit = _difference_witness(ring, pre, ideal) or _difference_witness(ring, ideal, pre)
            return refuted(f"sigma({g})^-1(I) differs from I", generator=g,
                           preimage=str(pre), element=wit)
    return proven("preimage under every generator equals I", certificate="preimage-equality")


# ---------------------------------------------------------------------------
# stable core


@dataclass(frozen=True)
class ClosureResult:
    ideal: object
    status: str  # "exact" | "truncated"
    cap: int | None = None
    rounds: int = 0
    rule: str = ""

    @property
    def exact(self) -> bool:
        return self.status == "exact"

    def label(self) -> str:
        return "Exact" if self.exact else f"Truncated({self.cap})"

    def to_json(self):
        return {"ideal": str(self.ideal), "status": self.label(), "rule": self.rule}


_ROUND_CAP = 256


def stable_core(spec: CrossedSpec, ideal, cap: int = DEFAULT_CAP) -> ClosureResult:
    """The largest stable ideal inside I: the intersection of all preimages."""
    ring = spec.ring
    if isinstance(ring, PointRing):
        return _point_core(spec, ideal, cap)
    gens = _generators(spec)
    cur = ideal
    # each round is an exact preimage; an infinite descent is cut off here
    cap = min(cap, _ROUND_CAP)
    for n in range(cap):
        nxt = cur
        for _, e in gens:
            nxt = ring.intersect(nxt, ring.preimage(e, cur))
        if ring.relate(nxt, cur) == "equal":
            return ClosureResult(cur, "exact", rounds=n, rule="one round adds nothing")
        cur = nxt
    return ClosureResult(cur, "truncated", cap=cap, rounds=cap)


def _point_core(spec: CrossedSpec, ideal: PointIdeal, cap: int) -> ClosureResult:
    if ideal.kind != "vanishing":
        return ClosureResult(ideal, "exact", rule="zero and unit ideals are stable")
    gens = [e for _, e in _generators(spec)]
    seen = set(ideal.points)
    frontier = list(ideal.points)
    while frontier:
        a = frontier.pop()
        for e in gens:
            rep = orbit(a, e, cap=min(cap, 64))
            if rep.kind == "infinite":
                return ClosureResult(PointIdeal.zero(), "exact",
                                     rule=f"infinite orbit of {a}: {rep.rule}")
            b = e.point_map(a)
            if b not in seen:
                seen.add(b)
                frontier.append(b)
                if len(seen) > cap:
                    return ClosureResult(PointIdeal.vanishing(seen), "truncated", cap=cap)
    return ClosureResult(PointIdeal.vanishing(seen), "exact", rule="forward point set closed")


# ---------------------------------------------------------------------------
# reversibility


def reversibility(spec: CrossedSpec, word_bound: int = DEFAULT_WORD_BOUND) -> Verdict:
    """For generator pairs (g, h) look for h1, h2 with
    sigma(g) sigma(h) = sigma(h1) sigma(g) and sigma(h) sigma(g) = sigma(g) sigma(h2)."""
    mon, ring = spec.monoid, spec.ring
    if mon.is_commutative:
        return proven("commutative monoid: take h1 = h2 = h", certificate="commutativity")
    words = mon.words_up_to(word_bound)
    sig = {w: spec.sigma(w) for w in words}
    # sigma(h1) o sigma(g) fixes the constant sigma(g)(t) when sigma(g) evaluates
    for g, h in product(mon.alphabet, repeat=2):
        sg, sh = spec.gen_endo(g), spec.gen_endo(h)
        if isinstance(sg, PointEndo) and sg.is_evaluation():
            lhs = ring.compose(sg, sh)
            if lhs.image != sg.image:
                return refuted(
                    f"sigma({g}) is an evaluation; sigma({g}) o sigma({h}) is not the same one",
                    certificate="constant-image", g=g, h=h,
                    lhs=str(lhs.image), rhs_for_every_h1=str(sg.image))
    inexact = False
    for g, h in product(mon.alphabet, repeat=2):
        sg, sh = spec.gen_endo(g), spec.gen_endo(h)
        for lhs, build, side in (
            (ring.compose(sg, sh), lambda w: ring.compose(sig[w], sg), "h1"),
            (ring.compose(sh, sg), lambda w: ring.compose(sg, sig[w]), "h2"),
        ):
            found = False
            for w in words:
                v = endo_equal(lhs, build(w), word_bound, ring=ring)
                if v.proven:
                    found = True
                    break
                if v.undecided:
                    inexact = True
            if not found:
                return undecided(f"no {side} found for (g, h) = ({g}, {h})", bound=word_bound,
                                 g=g, h=h)
    if inexact:
        return undecided("matches only on specified index windows", bound=word_bound)
    return proven("h1 and h2 found for every generator pair", certificate="explicit-words")


# ---------------------------------------------------------------------------
# S-primeness over a single endomorphism


def _single_endo(spec: CrossedSpec):
    if len(spec.monoid.alphabet) != 1 or spec.monoid.kind not in ("natural", "free"):
        raise UnsupportedIdealClass("the orbit criterion needs G = N (one generator)")
    return spec.gen_endo(spec.monoid.alphabet[0])


@dataclass(frozen=True)
class ChainReport:
    kind: str  # "increasing" | "decreasing"
    stabilizes_at: int | None  # first N with P_N = P_{N+1}
    exact: bool  # stabilization index (or its absence) is certain
    preds: tuple  # P_0 .. as computed
    rule: str = ""


def preimage_chain(ring: MonomialRing, sigma: IndexMap, ideal: PatternIdeal,
                   cap: int = 256) -> ChainReport:
    """sigma^{-q}(I) for a variable ideal I, as index predicates P_q."""
    if not ideal.vars_only() or ideal.kind == "unit":
        raise UnsupportedIdealClass("preimage chains are analysed for variable ideals only")
    dom = ring.domain
    p0 = conj(ideal.vars_pred(), dom)
    p1 = conj(sigma.pull(p0), dom)
    if implies(p0, p1, dom):
        kind = "increasing"
    elif implies(p1, p0, dom):
        return ChainReport("decreasing", 0, True, (p0, p1), "chain decreases")
    else:
        raise UnsupportedIdealClass("preimage chain is not monotone")
    preds = [p0, p1]
    for n in range(cap):
        if equivalent(preds[n], preds[n + 1], dom):
            return ChainReport(kind, n, True, tuple(preds), "consecutive preimages agree")
        if n == 0 and sigma.inverse(dom) is not None:
            return ChainReport(kind, None, True, tuple(preds), CERTIFICATES["chain-nonstabilization"])
        preds.append(conj(sigma.pull(preds[-1]), dom))
    return ChainReport(kind, None, False, tuple(preds), "no stabilization within the cap")


def sprime_orbit(spec: CrossedSpec, ideal, k: int = 0, cap: int = DEFAULT_CAP) -> Verdict:
    """Decide whether the intersection of sigma^{-q}(I) over q >= p lies in
    sigma^{-k}(I) for every p (the twisted module M_{sigma^k}, M = R/I)."""
    if k < 0:
        raise InvalidInput("twist index must be nonnegative")
    ring = spec.ring
    sigma = _single_endo(spec)
    base = is_prime_base(ring, ideal)
    if base.refuted:
        raise NotPrime(f"{ideal} is not prime", base.data)
    if isinstance(ring, PointRing):
        return _sprime_points(ring, sigma, ideal, k, cap)
    if isinstance(ring, MonomialRing):
        return _sprime_chain(ring, sigma, ideal, k, cap)
    raise UnsupportedIdealClass("orbit criterion on word algebras")


def _sprime_points(ring, sigma: PointEndo, ideal: PointIdeal, k: int, cap: int) -> Verdict:
    if ideal.kind == "zero":
        if sigma.is_injective():
            return proven("sigma is injective, every preimage of 0 is 0")
        c = sigma.point_map(Point.zero())
        if k >= 1:
            return proven("for q >= 1 every preimage is the ideal of the evaluation point",
                          point=str(c))
        return refuted("the tail intersection is the ideal of the evaluation point, not 0",
                       p=1, element=str(vanishing_generator([c], ring.field)))
    (a,) = ideal.points
    rep = orbit(a, sigma, cap)
    data = {"orbit": rep.to_json()}
    if rep.kind == "infinite":
        return proven("infinite orbit: every tail intersection is 0",
                      certificate="orbit-density", equality_form_holds=True, **data)
    if rep.kind == "undecided":
        return undecided("orbit did not close within the cap", bound=cap, **data)
    data["equality_form_holds"] = rep.preperiod == 0
    if k >= rep.preperiod:
        return proven(f"a_{k} lies on the cycle", a_k=str(rep.points[k if k < len(rep.points)
                      else rep.preperiod + (k - rep.preperiod) % rep.period]), **data)
    cyc = vanishing_generator(rep.cycle(), ring.field)
    return refuted(f"a_{k} is not on the cycle", p=rep.preperiod, element=str(cyc),
                   a_k=str(rep.points[k]), **data)


def _sprime_chain(ring, sigma, ideal, k, cap) -> Verdict:
    ch = preimage_chain(ring, sigma, ideal, cap=min(cap, 256))
    dom = ring.domain
    if ch.kind == "decreasing":
        return proven("decreasing chain: the tail intersection lies in every member")
    pk = _chain_pred(ring, sigma, ch, k)
    if ch.stabilizes_at is not None:
        n = ch.stabilizes_at
        data = {"stabilizes_at": n, "equality_form_holds": n == 0}
        if k >= n:
            return proven(f"chain stabilizes at {n} <= {k}", **data)
        i = counterexample(ch.preds[n], pk, dom)
        return refuted(f"{var_str(i)} lies in every tail intersection but not in sigma^-{k}(I)",
                       p=n, element=var_str(i), **data)
    if ch.exact:
        i = counterexample(_chain_pred(ring, sigma, ch, k + 1), pk, dom)
        return refuted("the preimage chain never stabilizes", certificate="chain-nonstabilization",
                       p=k + 1, element=var_str(i), equality_form_holds=False)
    return undecided("chain did not stabilize within the cap", bound=len(ch.preds) - 1)


def _chain_pred(ring, sigma, ch: ChainReport, k: int):
    if k < len(ch.preds):
        return ch.preds[k]
    p = ch.preds[-1]
    for _ in range(k - len(ch.preds) + 1):
        p = conj(sigma.pull(p), ring.domain)
    return p


# ---------------------------------------------------------------------------
# witness search for the crossed-product criterion


def _basic_elements(ring, n: int = 4) -> list:
    """Single variables / letters of small index, then t for point rings."""
    if isinstance(ring, PointRing):
        t = ring.t()
        return [t, t - 1, t + 1, t * t]
    idx = [i for i in range(0, n) if ring.domain.holds(i)] + \
          [i for i in range(-1, -n, -1) if ring.domain.holds(i)]
    if isinstance(ring, MonomialRing):
        return [ring.var(i) for i in idx]
    return [ring.word(((f, i),)) for i in idx for f in ring.families]


def annihilation_certificate(spec: CrossedSpec, ideal, m, b, g) -> bool:
    """Exact check of the image-letter-annihilation certificate for (m, b, g)."""
    ring = spec.ring
    if isinstance(ring, PointRing) or len(m.terms) != 1 or len(b.terms) != 1:
        return False
    if ring.contains(ideal, b) or not (b.terms[0][0]):
        return False
    sg = spec.sigma(g)
    (mono, _), = m.terms
    if isinstance(ring, MonomialRing):
        img = sg.image_pred(ring.domain)
        if img is None:
            return False
        return implies(conj(img, ring.domain), ring.times_var_pred(ideal, mono), ring.domain)
    for f in ring.families:
        img = ring.image_pred(sg, f)
        if img is None or not implies(img, ring.times_letter_pred(ideal, mono, f), ring.domain):
            return False
    return True


def sprime_witness_search(spec: CrossedSpec, ideal, seed: int = 0, pool: int = 8,
                          word_bound: int = 2, h_bound: int = DEFAULT_WORD_BOUND,
                          degree: int = 2) -> Verdict:
    """Look for m, b, g with m != 0, Mb != 0 and m sigma(g)(R) sigma(gh)(b) = 0."""
    ring, mon = spec.ring, spec.monoid
    if ring.contains(ideal, ring.one()):
        raise ZeroModule("R/I is the zero module")
    elems = _basic_elements(ring) + element_pool(ring, seed=seed, size=pool, degree=degree)
    elems = [r for r in dict.fromkeys(elems) if not ring.contains(ideal, r)]
    rs = [ring.one()] + elems
    gs = mon.words_up_to(word_bound)
    hs = mon.words_up_to(h_bound)
    sig = {w: spec.sigma(w) for w in set(gs) | {mon.mul(g, h) for g in gs for h in hs}}
    candidates = []
    for m, b, g in product(elems, elems, gs):
        if ring.is_zero(b) or not getattr(b, "terms", True):
            continue
        sg = sig[g]
        ok = True
        for h in hs:
            sb = ring.apply(sig[mon.mul(g, h)], b)
            for r in rs:
                if not ring.contains(ideal, ring.mul(ring.mul(m, ring.apply(sg, r)), sb)):
                    ok = False
                    break
            if not ok:
                break
        if not ok:
            continue
        cand = {"m": ring.fmt(m), "b": ring.fmt(b), "g": mon.fmt(g)}
        if annihilation_certificate(spec, ideal, m, b, g):
            return refuted("m sigma(g)(R) sigma(gh)(b) = 0 for every h",
                           certificate="image-letter-annihilation", **cand)
        candidates.append(cand)
    if candidates:
        return undecided("vanishing verified only up to the bound", bound=h_bound,
                         kind="UndecidedWitness", candidates=candidates[:5])
    return undecided("no violation found", bound=h_bound, candidates=[],
                     pool=len(elems), words=len(gs))


# ---------------------------------------------------------------------------
# exact positive certificates


def variable_disjointness(spec: CrossedSpec, ideal, seed: int = 0, samples: int = 20) -> Verdict:
    """R_R S-prime when sigma translates the variable indices by c != 0."""
    ring = spec.ring
    if not isinstance(ring, MonomialRing) or ideal.kind != "zero":
        return undecided("certificate applies to R_R over monomial rings only")
    sigma = _single_endo(spec)
    if not sigma.is_affine() or sigma.branches[0].a != 1 or sigma.branches[0].b == 0:
        return undecided("sigma is not a nonzero translation")
    c = sigma.branches[0].b
    pool = element_pool(ring, seed=seed, size=2 * samples)
    replay = []
    for f, g in zip(pool[::2], pool[1::2]):
        vf, vg = {i for m in f.monomials() for i, _ in m}, {i for m in g.monomials() for i, _ in m}
        span = (max(vf | vg, default=0) - min(vf | vg, default=0)) // abs(c) + 1
        gq = g
        for _ in range(span):
            gq = ring.apply(sigma, gq)
        if ring.is_zero(ring.mul(f, gq)):
            return undecided("replay failed", f=str(f), g=str(gq))
        replay.append(span)
    return proven("nonzero translation separates the variables of any two elements",
                  certificate="variable-disjointness", shift=c, replayed=len(replay))


def evaluation_absorption(spec: CrossedSpec, ideal, word_bound: int = 2) -> Verdict:
    """The zero ideal of K[t] (char 0) is S-prime when some word evaluates and
    another translates."""
    ring = spec.ring
    if not isinstance(ring, PointRing) or not isinstance(ring.field, Rationals) or ideal.kind != "zero":
        return undecided("certificate applies to the zero ideal of Q[t] only")
    mon = spec.monoid
    words = mon.words_up_to(word_bound)
    evals = [w for w in words if spec.sigma(w).is_evaluation()]
    trans = [w for w in words if spec.sigma(w).translation() not in (None, 0)]
    if not evals or not trans:
        return undecided("no evaluating and translating words found", bound=word_bound)
    u, v = evals[0], trans[0]
    c = spec.sigma(u).image.constant_term()
    d = spec.sigma(v).translation()
    return proven(f"sigma(u v^j)(b) = b({c} + {d} j) for all j",
                  certificate="evaluation-absorption", u=mon.fmt(u), v=mon.fmt(v),
                  point=str(c), step=str(d))


def augmentation_line(spec: CrossedSpec, ideal, m, g) -> bool:
    """m kills every generator in the image of sigma(g) (modulo I)."""
    ring = spec.ring
    if not isinstance(ring, WordAlgebra) or len(m.terms) != 1:
        return False
    (w, _), = m.terms
    if ring.word_in(ideal, w):
        return False
    sg = spec.sigma(g)
    for f in ring.families:
        img = ring.image_pred(sg, f)
        if img is None or not implies(img, ring.times_letter_pred(ideal, w, f), ring.domain):
            return False
    return True


def square_zero_check(spec: CrossedSpec, generator, degree_bound: int = 4) -> Verdict:
    """(S m x S)^2 = 0 for m = ``generator``: m sigma(R) sigma(m) = 0 exactly,
    replayed on all basis monomials of degree at most ``degree_bound``."""
    ring, mon = spec.ring, spec.monoid
    x = mon.generator(mon.alphabet[0])
    exact = augmentation_line(spec, WordIdeal.zero(), generator, x) and \
        ring.is_zero(ring.mul(generator, ring.apply(spec.sigma(x), generator)))
    letters = [(f, i) for f in ring.families for i in range(0, degree_bound) if ring.domain.holds(i)]
    words = [()]
    frontier = [()]
    for _ in range(degree_bound):
        frontier = [w + (a,) for w in frontier for a in letters if not ring.is_zero_word(w + (a,))]
        words += frontier
    checked = 0
    sx = spec.sigma(x)
    for w in words:
        # m xbar * (w xbar_e) * m xbar = m sigma(w) sigma(m) xbar^2
        prod = ring.mul(ring.mul(generator, ring.apply(sx, ring.word(w))), ring.apply(sx, generator))
        checked += 1
        if not ring.is_zero(prod):
            return refuted("nonzero product", word=word_str(w))
    if not exact:
        return undecided("vanishing replayed but no exact argument", bound=degree_bound)
    return proven("m sigma(R) sigma(m) = 0", scope="bound", bound=degree_bound,
                  certificate="image-letter-annihilation", words_checked=checked)


# ---------------------------------------------------------------------------
# ideal-pair criteria


def _product_inside(ring, a, b, ideal) -> bool:
    if isinstance(ring, PointRing):
        if a.kind == "zero" or b.kind == "zero" or ideal.kind == "unit":
            return True
        if ideal.kind == "zero":
            return False
        pts = (a.points if a.kind == "vanishing" else frozenset()) | \
              (b.points if b.kind == "vanishing" else frozenset())
        return ideal.points <= pts
    if isinstance(ring, MonomialRing):
        return ring.relate(ring.product(a, b), ideal) in ("subset", "equal")
    raise UnsupportedIdealClass("ideal products in word algebras")


def default_ideal_pool(spec: CrossedSpec, ideal, seed: int = 0) -> list:
    ring = spec.ring
    if isinstance(ring, PointRing):
        pts = set()
        if ideal.kind == "vanishing":
            pts |= set(ideal.points)
        if isinstance(ring.field, FiniteField):
            pts |= {Point.ff(c, ring.field.q) for c in range(ring.field.q)}
        else:
            pts |= {Point.zero(), Point.rational(1), Point.rational(-1), Point.rational(2)}
        out = [PointIdeal.zero()]
        gens = [e for _, e in _generators(spec, with_inverses=False)]
        for a in sorted(pts, key=Point.sort_key):
            out.append(PointIdeal.vanishing([a]))
            seen, frontier = {a}, [a]
            while frontier and len(seen) < 64:
                x = frontier.pop()
                for e in gens:
                    y = e.point_map(x)
                    if y not in seen:
                        seen.add(y)
                        frontier.append(y)
            if len(seen) < 64:
                out.append(PointIdeal.vanishing(seen))
        return list(dict.fromkeys(out))
    if isinstance(ring, MonomialRing):
        preds = [TRUE] + [Cmp("ge", c) for c in range(-3, 4)] + [Cmp("le", c) for c in range(-3, 4)] \
            + [in_set([c]) for c in range(-2, 4)] + [Mod(2, 0), Mod(2, 1)]
        out = [PatternIdeal.zero()]
        for p in preds:
            q = conj(p, ring.domain)
            if implies(q, in_set([]), ring.domain):
                continue
            out.append(PatternIdeal.vars_where(q))
        return list(dict.fromkeys(out))
    raise UnsupportedIdealClass("ideal pools for word algebras")


def invariant_pair_test(spec: CrossedSpec, ideal, pool=None, mode: str = "invariant",
                        seed: int = 0) -> Verdict:
    """AB inside I implies A or B inside I, over pairs (A, B) from a pool.

    ``mode="invariant"`` requires both A and B invariant; ``mode="stable"``
    only requires B stable."""
    ring = spec.ring
    if ring.contains(ideal, ring.one()):
        return proven("unit ideal: every ideal lies inside I")
    pool = list(pool) if pool is not None else default_ideal_pool(spec, ideal, seed)
    inv = {}
    stab = {}
    for A in pool:
        inv[A] = is_invariant(spec, A).proven
        stab[A] = is_stable(spec, A).proven
    tested = skipped = 0
    for A, B in product(pool, pool):
        if mode == "invariant" and not (inv[A] and inv[B]):
            skipped += 1
            continue
        if mode == "stable" and not stab[B]:
            skipped += 1
            continue
        tested += 1
        if _product_inside(ring, A, B, ideal):
            if ring.relate(A, ideal) not in ("subset", "equal") and \
                    ring.relate(B, ideal) not in ("subset", "equal"):
                return refuted("AB lies in I but neither A nor B does", A=str(A), B=str(B))
    return proven("implication holds for every admissible pool pair", scope="pool",
                  pairs_tested=tested, pairs_skipped=skipped, pool_size=len(pool))


def laurent_sprime(spec: CrossedSpec, ideal, pool=None, seed: int = 0) -> Verdict:
    """Pair criterion for the skew Laurent ring; sigma must be invertible."""
    ring = spec.ring
    sigma = spec.gen_endo(spec.monoid.alphabet[0]) if len(spec.monoid.alphabet) == 1 else None
    if sigma is None:
        raise UnsupportedIdealClass("laurent criterion needs a single generator")
    if isinstance(ring, PointRing):
        p = sigma.power_exponent()
        if p is not None and isinstance(ring.field, FiniteField):
            from math import gcd
            if gcd(p, ring.field.q - 1) != 1:
                raise NotAutomorphism(f"t -> t^{p} does not permute the points of {ring.field.name}")
        elif sigma.image.degree != 1:
            raise NotAutomorphism(f"t -> {sigma.image} is not invertible")
    else:
        invert_endo(ring, sigma)
    return invariant_pair_test(spec, ideal, pool=pool, mode="invariant", seed=seed)
