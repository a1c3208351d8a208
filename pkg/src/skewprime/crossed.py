"""Crossed products S = R*G with trivial cocycle and induced modules M*G.

An element of S is a finite sum of terms r xbar_g with coefficients on the
left; products follow ``xbar_g r = sigma(g)(r) xbar_g`` and
``xbar_g xbar_h = xbar_{gh}``.
"""
from __future__ import annotations

import random
from dataclasses import dataclass

from .basering.monomial import MonomialRing
from .basering.ops import endo_equal
from .basering.points import PointEndo, PointRing
from .basering.words import WordEndo
from .errors import InvalidInput, NotAutomorphism, RelationViolation
from .monoid import MonoidSpec
from .pools import DEFAULT_DEGREE, DEFAULT_POOL, DEFAULT_WORD_BOUND, element_pool, ideal_elements
from .verdict import Verdict, proven, undecided


def invert_endo(ring, sigma):
    """Inverse endomorphism, or NotAutomorphism."""
    if isinstance(ring, PointRing):
        if sigma.image.degree == 1:
            c0, c1 = sigma.image.coeffs
            f = ring.field
            from .basering.poly import Poly
            inv1 = f.inv(c1)
            return PointEndo(Poly(f, (f.neg(f.mul(c0, inv1)), inv1)), f"inverse({sigma.label})")
        raise NotAutomorphism(f"t -> {sigma.image} is not invertible on {ring.name}")
    if isinstance(ring, MonomialRing):
        inv = sigma.inverse(ring.domain)
        if inv is None:
            raise NotAutomorphism(f"index map {sigma} is not a bijection of the variable domain")
        return inv
    maps = []
    for f in ring.families:
        inv = sigma.index_map(f).inverse(ring.domain)
        if inv is None:
            raise NotAutomorphism(f"letter map for {f} is not a bijection of the index domain")
        maps.append((f, inv))
    return WordEndo(tuple(maps))


@dataclass(frozen=True)
class CrossedSpec:
    ring: object
    monoid: MonoidSpec
    action: tuple  # ((generator name, endo), ...)

    @staticmethod
    def build(ring, monoid: MonoidSpec, action: dict) -> "CrossedSpec":
        missing = set(monoid.alphabet) - set(action)
        extra = set(action) - set(monoid.alphabet)
        if missing or extra:
            raise InvalidInput(f"action must cover exactly the generators {list(monoid.alphabet)}")
        for e in action.values():
            ring.check_endo(e)
        return CrossedSpec(ring, monoid, tuple((g, action[g]) for g in monoid.alphabet))

    def gen_endo(self, name: str):
        return dict(self.action)[name]

    def sigma(self, w):
        """sigma(w) = sigma(g1) o ... o sigma(gn) along the normal form."""
        ring = self.ring
        out = ring.identity()
        for k, s in self.monoid.symbols(w):
            e = self.gen_endo(self.monoid.alphabet[k])
            if s < 0:
                e = invert_endo(ring, e)
            out = ring.compose(out, e)
        return out

    def word(self, text: str):
        return self.monoid.parse(text)

    # elements -------------------------------------------------------------
    def element(self, terms) -> "SElement":
        """Build from (word, coefficient) pairs, summing repeated words."""
        ring = self.ring
        acc: dict = {}
        for w, r in terms:
            self.monoid.check(w)
            acc[w] = ring.add(acc[w], r) if w in acc else r
        items = [(w, r) for w, r in acc.items() if not ring.is_zero(r)]
        return SElement(tuple(sorted(items, key=lambda wr: self.monoid.sort_key(wr[0]))))

    def module_element(self, ideal, terms) -> "ModuleElement":
        ring = self.ring
        acc: dict = {}
        for w, r in terms:
            self.monoid.check(w)
            acc[w] = ring.add(acc[w], r) if w in acc else r
        items = []
        for w, r in acc.items():
            r = ring.reduce(ideal, r)
            if not ring.contains(ideal, r):
                items.append((w, r))
        return ModuleElement(ideal, tuple(sorted(items, key=lambda wr: self.monoid.sort_key(wr[0]))))

    def s_add(self, a: "SElement", b: "SElement") -> "SElement":
        return self.element(a.terms + b.terms)

    def s_mul(self, a: "SElement", b: "SElement") -> "SElement":
        ring, mon = self.ring, self.monoid
        out = []
        for g, r in a.terms:
            sg = self.sigma(g)
            for h, r2 in b.terms:
                out.append((mon.mul(g, h), ring.mul(r, ring.apply(sg, r2))))
        return self.element(out)

    def mod_act(self, m: "ModuleElement", s: "SElement") -> "ModuleElement":
        ring, mon = self.ring, self.monoid
        out = []
        for g, r in m.terms:
            sg = self.sigma(g)
            for h, r2 in s.terms:
                out.append((mon.mul(g, h), ring.mul(r, ring.apply(sg, r2))))
        return self.module_element(m.ideal, out)

    def canonical_form(self, x) -> list:
        return [(w, r) for w, r in x.terms]

    def fmt(self, x) -> str:
        if not x.terms:
            return "0"
        return " + ".join(f"({self.ring.fmt(r)})*{self.monoid.fmt(w)}" for w, r in x.terms)

    def to_json(self):
        return {
            "ring": self.ring.name,
            "monoid": self.monoid.to_json(),
            "action": {g: str(e) for g, e in self.action},
        }


@dataclass(frozen=True)
class SElement:
    terms: tuple  # ((word, coefficient), ...) in monoid order

    def is_zero(self) -> bool:
        return not self.terms

    def support(self) -> list:
        return [w for w, _ in self.terms]

    def is_homogeneous(self) -> bool:
        return len(self.terms) <= 1


@dataclass(frozen=True)
class ModuleElement:
    ideal: object
    terms: tuple

    def is_zero(self) -> bool:
        return not self.terms

    def support(self) -> list:
        return [w for w, _ in self.terms]

    def is_homogeneous(self) -> bool:
        return len(self.terms) <= 1


def recombine(spec: CrossedSpec, components) -> SElement:
    return spec.element(components)


def validate(spec: CrossedSpec, bound: int = 10) -> Verdict:
    """sigma(gh) = sigma(g) o sigma(h) for every pair of generators.

    Since words are composed along their normal forms, the check on generator
    pairs covers the length-two defining relations of the builtin monoids;
    for the free monoid it holds by construction.
    """
    mon, ring = spec.monoid, spec.ring
    if mon.kind == "free":
        return proven("free monoid: no relations to respect")
    gens = mon.alphabet
    worst = None
    for a in gens:
        for b in gens:
            ga, gb = mon.generator(a), mon.generator(b)
            lhs = spec.sigma(mon.mul(ga, gb))
            rhs = ring.compose(spec.gen_endo(a), spec.gen_endo(b))
            v = endo_equal(lhs, rhs, bound, ring=ring)
            if v.refuted:
                raise RelationViolation(
                    f"sigma({mon.fmt(mon.mul(ga, gb))}) differs from sigma({a}) o sigma({b})",
                    {"pair": [a, b], **v.data})
            if v.undecided:
                worst = v
    for k, a in enumerate(gens):
        if mon.has_inverse(k):
            invert_endo(ring, spec.gen_endo(a))
    if worst is not None:
        return undecided("relations hold on the specified index window", bound=bound)
    return proven("action respects every defining relation", pairs=len(gens) ** 2)


def ann_search(spec: CrossedSpec, m: ModuleElement, degree_bound: int = DEFAULT_WORD_BOUND,
               pool: int = DEFAULT_POOL, degree: int = DEFAULT_DEGREE, seed: int = 0,
               twist=None) -> dict:
    """Sample s in S and record which annihilate ``m``.

    For homogeneous ``m`` every annihilating s must be annihilated
    componentwise; violations (never expected) are reported.  With ``twist``
    the report also lists the distinct nonzero products m * sigma(twist)(r)
    over the pool, which describes the cyclic submodule generated by m in the
    twisted module.
    """
    if m.is_zero():
        raise InvalidInput("ann_search needs a nonzero module element")
    rng = random.Random(seed)
    ring, mon = spec.ring, spec.monoid
    coeffs = element_pool(ring, seed=seed, size=pool, degree=degree)
    words = mon.words_up_to(degree_bound)
    samples = []
    for r in coeffs:
        samples.append(spec.element([(rng.choice(words), r)]))
    for _ in range(pool):
        k = rng.randint(2, 3)
        samples.append(spec.element([(rng.choice(words), rng.choice(coeffs)) for _ in range(k)]))
    # coefficients from the ideal make annihilators common enough to test
    for r in ideal_elements(ring, m.ideal, coeffs[: max(1, pool // 4)]):
        samples.append(spec.element([(rng.choice(words), r)]))
    hits, homogeneous_hits, violations = [], [], []
    for s in samples:
        if spec.mod_act(m, s).is_zero():
            hits.append(spec.fmt(s))
            if s.is_homogeneous():
                homogeneous_hits.append(s)
            if m.is_homogeneous():
                for w, r in s.terms:
                    if not spec.mod_act(m, spec.element([(w, r)])).is_zero():
                        violations.append({"s": spec.fmt(s), "component": mon.fmt(w)})
    # sums of annihilators in distinct degrees must annihilate as well
    for a, b in zip(homogeneous_hits, homogeneous_hits[1:]):
        s = spec.s_add(a, b)
        if not spec.mod_act(m, s).is_zero():
            violations.append({"s": spec.fmt(s), "component": "sum"})
    report = {
        "element": spec.fmt(m),
        "sampled": len(samples),
        "annihilating": len(hits),
        "examples": hits[:5],
        "componentwise_violations": violations,
    }
    if twist is not None:
        sg = spec.sigma(twist)
        span = set()
        for r in coeffs + [ring.one()]:
            for w, c in m.terms:
                p = ring.reduce(m.ideal, ring.mul(c, ring.apply(sg, r)))
                if not ring.contains(m.ideal, p):
                    span.add(_monic_key(ring, p))
        report["twisted_products"] = sorted(span)
    return report


def _monic_key(ring, p) -> str:
    """Text of p scaled to leading coefficient one, for span bookkeeping."""
    terms = getattr(p, "terms", None)
    if terms:
        lead = terms[-1][1]
        return ring.fmt(ring.scale(ring.field.inv(lead), p))
    return ring.fmt(p)
