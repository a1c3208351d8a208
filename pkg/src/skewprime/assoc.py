"""Minimal twists and associated primes of induced modules.

For a cyclic prime module M = R/I and S = R[x; sigma], the twist M_{sigma^k}
is S-prime exactly from some k on; the associated prime is then the stable
core of sigma^{-k}(I), extended to S.  Over a crossed product R*G the twists
are indexed by monoid words.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .basering.fields import FiniteField, mult_order
from .basering.monomial import MonomialRing
from .basering.ops import f_omega_p
from .basering.poly import Poly
from .basering.points import Point, PointEndo, PointIdeal, PointRing, vanishing_generator
from .basering.words import WordAlgebra, word_str
from .crossed import CrossedSpec
from .dynamics import OrbitReport, orbit
from .errors import InvalidInput, UnsupportedIdealClass, UnsupportedPoint
from .monoid import MonoidSpec, right_divides
from .pools import DEFAULT_CAP
from .primecheck import (
    CERTIFICATES,
    _single_endo,
    augmentation_line,
    evaluation_absorption,
    is_prime_base,
    preimage_chain,
    sprime_orbit,
    sprime_witness_search,
    stable_core,
    variable_disjointness,
)
from .verdict import proven, undecided

__all__ = ["orbit", "OrbitReport", "min_twist", "ass_induced", "affine_case_analysis",
           "ass_crossed", "annihilator_growth", "AssPrimeDescription", "TwistResult", "AssResult", "CaseReport"]


@dataclass(frozen=True)
class TwistResult:
    kind: str  # "found" | "not-found" | "none-exist"
    k: int | None = None
    cap: int | None = None
    reason: str = ""

    def label(self) -> str:
        if self.kind == "found":
            return f"k={self.k}"
        if self.kind == "none-exist":
            return "NoneExistExact"
        return f"NotFound({self.cap})"

    def to_json(self):
        out = {"result": self.label(), "reason": self.reason}
        if self.k is not None:
            out["k"] = self.k
        return out


@dataclass(frozen=True)
class AssPrimeDescription:
    core: object  # ideal J of R; the associated prime is J extended to S
    k: object  # twist index (int) or monoid word text
    generator: str | None = None
    certificate: str = ""

    def to_json(self):
        out = {"core": str(self.core), "twist": self.k}
        if self.generator is not None:
            out["generator"] = self.generator
        if self.certificate:
            out["certificate"] = self.certificate
        return out


@dataclass(frozen=True)
class AssResult:
    status: str  # "exact" | "undecided"
    primes: tuple = ()
    reason: str = ""
    data: dict = field(default_factory=dict)

    def label(self) -> str:
        if self.status == "undecided":
            return "Undecided"
        return "{" + ", ".join(f"{p.core} (twist {p.k})" for p in self.primes) + "}" \
            if self.primes else "{}"

    def to_json(self):
        out = {"status": self.status, "ass": [p.to_json() for p in self.primes],
               "reason": self.reason}
        if self.data:
            out["data"] = self.data
        return out


# ---------------------------------------------------------------------------
# skew polynomial case


def min_twist(spec: CrossedSpec, ideal, cap: int = DEFAULT_CAP) -> TwistResult:
    """Smallest k with M_{sigma^k} S-prime, M = R/I."""
    ring = spec.ring
    sigma = _single_endo(spec)
    base = is_prime_base(ring, ideal)
    if base.refuted:
        from .errors import NotPrime
        raise NotPrime(f"{ideal} is not prime", base.data)
    if isinstance(ring, PointRing):
        if ideal.kind == "zero":
            k = 0 if sigma.is_injective() else 1
            return TwistResult("found", k, reason="preimages of 0 settle after one step")
        (a,) = ideal.points
        rep = orbit(a, sigma, cap)
        if rep.kind == "finite":
            return TwistResult("found", rep.preperiod, reason=f"orbit {rep.label()}")
        if rep.kind == "infinite":
            return TwistResult("found", 0, reason=rep.rule)
        return TwistResult("not-found", cap=cap, reason="orbit undecided")
    if isinstance(ring, MonomialRing):
        ch = preimage_chain(ring, sigma, ideal, cap=min(cap, 256))
        if ch.kind == "decreasing":
            return TwistResult("found", 0, reason=ch.rule)
        if ch.stabilizes_at is not None:
            return TwistResult("found", ch.stabilizes_at, reason=ch.rule)
        if ch.exact:
            return TwistResult("none-exist", reason=ch.rule)
        return TwistResult("not-found", cap=len(ch.preds) - 1, reason=ch.rule)
    for k in range(cap + 1):
        if sprime_orbit(spec, ideal, k).proven:
            return TwistResult("found", k)
    return TwistResult("not-found", cap=cap)


def _twisted_preimage(spec: CrossedSpec, ideal, k: int):
    ring = spec.ring
    sigma = _single_endo(spec)
    out = ideal
    for _ in range(k):
        out = ring.preimage(sigma, out)
    return out


def _generator_text(ring, core) -> str | None:
    if isinstance(ring, PointRing):
        if core.kind == "zero":
            return "0"
        if core.kind == "unit":
            return "1"
        return str(vanishing_generator(core.points, ring.field))
    return None


def ass_induced(spec: CrossedSpec, ideal, cap: int = DEFAULT_CAP) -> AssResult:
    """Ass M[x; sigma] for M = R/I with I prime."""
    mt = min_twist(spec, ideal, cap)
    if mt.kind == "none-exist":
        return AssResult("exact", (), reason="no twist is S-prime: " + mt.reason,
                         data={"min_twist": mt.to_json(),
                               "certificate": "chain-nonstabilization"})
    if mt.kind == "not-found":
        return AssResult("undecided", (), reason=f"no S-prime twist within cap {mt.cap}",
                         data={"min_twist": mt.to_json()})
    ring = spec.ring
    core = stable_core(spec, _twisted_preimage(spec, ideal, mt.k), cap)
    if not core.exact:
        return AssResult("undecided", (), reason="stable core truncated",
                         data={"min_twist": mt.to_json()})
    desc = AssPrimeDescription(core.ideal, mt.k, _generator_text(ring, core.ideal),
                               certificate=core.rule)
    return AssResult("exact", (desc,), reason=f"min twist k={mt.k}",
                     data={"min_twist": mt.to_json()})


# ---------------------------------------------------------------------------
# the affine example


@dataclass(frozen=True)
class CaseReport:
    case: str  # "a" | "b" | "c" | "d"
    point: str
    p: int
    orbit: OrbitReport
    min_twist: TwistResult
    ass: AssResult
    r: int | None = None
    k: int | None = None
    ell: int | None = None
    f_omega_p: str | None = None

    def label(self) -> str:
        return f"case ({self.case}), {self.orbit.label()}, {self.min_twist.label()}"

    def to_json(self):
        out = {
            "case": self.case,
            "point": self.point,
            "p": self.p,
            "orbit": self.orbit.to_json(),
            "min_twist": self.min_twist.to_json(),
            "ass": self.ass.to_json(),
        }
        for key in ("r", "k", "ell", "f_omega_p"):
            v = getattr(self, key)
            if v is not None:
                out[key] = v
        return out


def _vp(m: int, p: int) -> int:
    v = 0
    while m % p == 0:
        m //= p
        v += 1
    return v


def affine_case_analysis(ring: PointRing, a: Point, p: int, cap: int = DEFAULT_CAP) -> CaseReport:
    """Classify a under t -> t^p: zero, a root of unity of order prime to p,
    a root of order p^k r, or anything else."""
    from .basering.fields import is_prime
    if not is_prime(p):
        raise InvalidInput(f"p={p} must be prime")
    ring.check_point(a)
    sigma = PointEndo.power(p, ring.field)
    spec = CrossedSpec.build(ring, MonoidSpec("natural"), {"x": sigma})
    ideal = PointIdeal.vanishing([a])
    rep = orbit(a, sigma, cap)
    mt = min_twist(spec, ideal, cap)
    ass = ass_induced(spec, ideal, cap)
    common = dict(point=str(a), p=p, orbit=rep, min_twist=mt, ass=ass)
    if a.kind == "zero":
        return CaseReport("a", **common)
    if a.kind == "ff":
        order = _ff_order(ring.field, a)
        v = _vp(order, p)
        r = order // p ** v
        gen = str(vanishing_generator(rep.cycle(), ring.field))
        return CaseReport("b" if v == 0 else "c", r=r, k=v, ell=mult_order(p, r),
                          f_omega_p=gen, **common)
    rd = a.root_data()
    if rd is None:
        if ring.roots or not isinstance(ring.field, FiniteField):
            return CaseReport("d", **common)
        raise UnsupportedPoint(f"cannot classify {a}")
    m, e = rd
    v = _vp(m, p)
    r = m // p ** v
    # b = a^(p^v) = zeta_r^e
    f = f_omega_p(r, p, e % r) if r > 1 else Poly.of([-1, 1])
    return CaseReport("b" if v == 0 else "c", r=r, k=v, ell=mult_order(p, r),
                      f_omega_p=str(f), **common)


def _ff_order(f: FiniteField, a: Point) -> int:
    x, n = a.value, 1
    while x != f.one:
        x = f.mul(x, a.value)
        n += 1
    return n


# ---------------------------------------------------------------------------
# crossed products


def ass_crossed(spec: CrossedSpec, ideal, word_bound: int = 2, cap: int = DEFAULT_CAP,
                seed: int = 0) -> AssResult:
    """Search twist words g breadth-first for S-prime submodules of M_{sigma(g)}.

    Once g is proven, every left extension h g is marked proven without a
    new test.  Distinct cores are reported with the shortest twist word.
    """
    mon, ring = spec.monoid, spec.ring
    if mon.kind == "natural" and not isinstance(ring, WordAlgebra):
        return ass_induced(spec, ideal, cap)
    words = mon.words_up_to(word_bound)
    proven_words: list = []
    tested: dict = {}
    primes: list[AssPrimeDescription] = []
    for g in words:
        gtxt = mon.fmt(g)
        if any(right_divides(mon, h, g) is not None for h in proven_words):
            tested[gtxt] = "proven (left extension)"
            continue
        v, core, cert = _twist_sprime(spec, ideal, g, seed)
        tested[gtxt] = v.label()
        if v.proven:
            proven_words.append(g)
            cl = stable_core(spec, core, cap)
            if not cl.exact:
                return AssResult("undecided", tuple(primes), reason="stable core truncated",
                                 data={"twists": tested})
            if all(ring.relate(cl.ideal, q.core) != "equal" for q in primes):
                primes.append(AssPrimeDescription(cl.ideal, gtxt, _generator_text(ring, cl.ideal),
                                                  certificate=cert))
    if not primes:
        return AssResult("undecided", (), reason=f"no twist proven up to word length {word_bound}",
                         data={"twists": tested})
    return AssResult("exact", tuple(primes),
                     reason=f"twists searched up to word length {word_bound}; coverage is the "
                            "searched pool",
                     data={"twists": tested})


def _twist_sprime(spec: CrossedSpec, ideal, g, seed: int):
    """(verdict, annihilator, certificate) for an S-prime submodule of M_{sigma(g)}."""
    ring, mon = spec.ring, spec.monoid
    if isinstance(ring, WordAlgebra):
        letters = [((f, i),) for i in range(0, 4) if ring.domain.holds(i) for f in ring.families]
        for w in letters:
            m = ring.word(w)
            if augmentation_line(spec, ideal, m, g):
                return (proven(CERTIFICATES["augmentation-line"], element=word_str(w)),
                        ring.augmentation(), "augmentation-line")
        if g == mon.identity():
            v = sprime_witness_search(spec, ideal, seed=seed)
            if v.refuted:
                return v, None, ""
        return undecided("no S-prime submodule in the searched pool"), None, ""
    if g != mon.identity():
        return undecided("only the untwisted module is analysed"), None, ""
    if isinstance(ring, PointRing):
        v = evaluation_absorption(spec, ideal)
        return v, ideal, "evaluation-absorption"
    if isinstance(ring, MonomialRing):
        v = variable_disjointness(spec, ideal, seed=seed)
        return v, ideal, "variable-disjointness"
    raise UnsupportedIdealClass("twisted S-prime tests for this ring model")


def annihilator_growth(ring: MonomialRing, f) -> dict:
    """For square-zero rings: a variable t_n missing from f with
    ann f strictly inside ann(f t_n), witnessed by t_n itself."""
    if not isinstance(ring, MonomialRing) or not ring.square_zero:
        raise UnsupportedIdealClass("annihilator growth is specific to square-zero rings")
    if ring.is_zero(f):
        raise InvalidInput("f must be nonzero")
    used = f.variables()
    n = next(i for i in range(0, 10 ** 6) if i not in used and ring.domain.holds(i))
    tn = ring.var(n)
    ftn = ring.mul(f, tn)
    return {
        "f": str(f),
        "n": n,
        "f*t_n": str(ftn),
        "t_n kills f": ring.is_zero(ftn),
        "t_n kills f*t_n": ring.is_zero(ring.mul(ftn, tn)),
    }
