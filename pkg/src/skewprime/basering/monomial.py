"""Commutative polynomial rings in infinitely many variables t_i.

Only finitely many variables occur in any element; ideals are monomial
ideals described by index predicates, so infinite generator families are
handled symbolically.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterable

from ..errors import InvalidInput, UnsupportedIdealClass
from .fields import QQ
from .predicates import (
    FALSE,
    compact,
    TRUE,
    IndexMap,
    Pred,
    conj,
    disj,
    equivalent,
    implies,
    in_set,
    injective_on,
    maps_equal,
    negate,
    window,
)

Monomial = tuple  # sorted ((index, exponent), ...)


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    d = dict(a)
    for i, e in b:
        d[i] = d.get(i, 0) + e
    return tuple(sorted(d.items()))


def mono_str(m: Monomial) -> str:
    if not m:
        return "1"
    return "*".join(f"{var_str(i)}" if e == 1 else f"{var_str(i)}^{e}" for i, e in m)


def var_str(i: int) -> str:
    # brackets keep t[-1] from reading as t minus 1
    return f"t{i}" if i >= 0 else f"t[{i}]"


@dataclass(frozen=True)
class MPoly:
    terms: tuple  # sorted ((monomial, coeff), ...), no zero coefficients

    @staticmethod
    def build(d: dict, f=QQ) -> "MPoly":
        return MPoly(tuple(sorted(((m, c) for m, c in d.items() if not f.is_zero(c)),
                                  key=lambda mc: (sum(e for _, e in mc[0]), mc[0]))))

    def monomials(self):
        return [m for m, _ in self.terms]

    def variables(self) -> set[int]:
        return {i for m, _ in self.terms for i, _ in m}

    def is_zero(self) -> bool:
        return not self.terms

    def constant_term(self):
        for m, c in self.terms:
            if not m:
                return c
        return 0

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for m, c in self.terms:
            ms = mono_str(m)
            if ms == "1":
                parts.append(str(c))
            elif c == 1:
                parts.append(ms)
            elif c == -1:
                parts.append("-" + ms)
            else:
                parts.append(f"{c}*{ms}")
        return " + ".join(parts).replace("+ -", "- ")

    def to_json(self):
        return str(self)


@dataclass(frozen=True)
class Pattern:
    kind: str  # "unit" | "vars" | "pairs" | "squares"
    p1: Pred = TRUE
    p2: Pred = TRUE

    def preds(self):
        return [self.p1, self.p2]

    def __str__(self):
        if self.kind == "unit":
            return "1"
        if self.kind == "vars":
            return f"t_i [{self.p1}]"
        if self.kind == "squares":
            return f"t_i^2 [{self.p1}]"
        return f"t_i*t_j [i!=j, {self.p1}; {self.p2}]"

    def to_json(self):
        if self.kind == "unit":
            return "unit"
        if self.kind == "pairs":
            return {"pairs": [self.p1.to_json(), self.p2.to_json()]}
        return {self.kind: self.p1.to_json()}


@dataclass(frozen=True)
class PatternIdeal:
    patterns: tuple = ()

    @staticmethod
    def zero() -> "PatternIdeal":
        return PatternIdeal(())

    @staticmethod
    def unit() -> "PatternIdeal":
        return PatternIdeal((Pattern("unit"),))

    @staticmethod
    def vars_where(p: Pred) -> "PatternIdeal":
        return PatternIdeal((Pattern("vars", p),))

    @staticmethod
    def pair_products(p1: Pred = TRUE, p2: Pred = TRUE) -> "PatternIdeal":
        return PatternIdeal((Pattern("pairs", p1, p2),))

    @property
    def kind(self) -> str:
        if not self.patterns:
            return "zero"
        if any(p.kind == "unit" for p in self.patterns):
            return "unit"
        return "pattern"

    def vars_only(self) -> bool:
        return all(p.kind in ("vars", "unit") for p in self.patterns)

    def vars_pred(self) -> Pred:
        return disj(*[p.p1 for p in self.patterns if p.kind == "vars"])

    def preds(self) -> list[Pred]:
        return [q for p in self.patterns for q in p.preds()]

    def __str__(self):
        if not self.patterns:
            return "0"
        return "<" + ", ".join(str(p) for p in self.patterns) + ">"

    def to_json(self):
        if not self.patterns:
            return "zero"
        return {"patterns": [p.to_json() for p in self.patterns]}


@dataclass(frozen=True)
class MonomialRing:
    field: object = QQ
    square_zero: bool = False
    domain: Pred = TRUE

    @property
    def name(self) -> str:
        base = f"F[t_i : {self.domain}]"
        return base + "/(t_i^2)" if self.square_zero else base

    # element arithmetic -------------------------------------------------
    def _norm(self, d: dict) -> MPoly:
        if self.square_zero:
            d = {m: c for m, c in d.items() if all(e < 2 for _, e in m)}
        return MPoly.build(d, self.field)

    def var(self, i: int) -> MPoly:
        if not self.domain.holds(i):
            raise InvalidInput(f"{var_str(i)} is not a variable of {self.name}")
        return MPoly((((((i, 1),), self.field.one)),))

    def monomial(self, m: Iterable[tuple[int, int]]) -> MPoly:
        m = tuple(sorted(m))
        for i, _ in m:
            if not self.domain.holds(i):
                raise InvalidInput(f"{var_str(i)} is not a variable of {self.name}")
        return self._norm({m: self.field.one})

    def const(self, c) -> MPoly:
        return self._norm({(): self.field.coerce(c)})

    def zero(self) -> MPoly:
        return MPoly(())

    def one(self) -> MPoly:
        return self.const(1)

    def add(self, a: MPoly, b: MPoly) -> MPoly:
        d = dict(a.terms)
        for m, c in b.terms:
            d[m] = self.field.add(d.get(m, self.field.zero), c)
        return self._norm(d)

    def neg(self, a: MPoly) -> MPoly:
        return MPoly(tuple((m, self.field.neg(c)) for m, c in a.terms))

    def scale(self, c, a: MPoly) -> MPoly:
        return self._norm({m: self.field.mul(c, x) for m, x in a.terms})

    def mul(self, a: MPoly, b: MPoly) -> MPoly:
        d: dict = {}
        for m1, c1 in a.terms:
            for m2, c2 in b.terms:
                m = mono_mul(m1, m2)
                d[m] = self.field.add(d.get(m, self.field.zero), self.field.mul(c1, c2))
        return self._norm(d)

    def is_zero(self, a: MPoly) -> bool:
        return a.is_zero()

    def fmt(self, a: MPoly) -> str:
        return str(a)

    # endomorphisms ------------------------------------------------------
    def check_endo(self, alpha: IndexMap) -> IndexMap:
        if alpha.is_table:
            return alpha
        if not implies(self.domain, alpha.pull(self.domain)):
            raise InvalidInput(f"index map {alpha} does not preserve the variable domain")
        return alpha

    def apply(self, alpha: IndexMap, a: MPoly) -> MPoly:
        d: dict = {}
        for m, c in a.terms:
            img = {}
            for i, e in m:
                j = alpha(i)
                img[j] = img.get(j, 0) + e
            key = tuple(sorted(img.items()))
            d[key] = self.field.add(d.get(key, self.field.zero), c)
        return self._norm(d)

    def endo_equal_exact(self, a: IndexMap, b: IndexMap) -> bool:
        return maps_equal(a, b, self.domain)

    def compose(self, outer: IndexMap, inner: IndexMap) -> IndexMap:
        return outer.then(inner)

    def identity(self) -> IndexMap:
        return IndexMap.identity()

    # ideals -------------------------------------------------------------
    def mono_in(self, ideal: PatternIdeal, m: Monomial) -> bool:
        if self.square_zero and any(e >= 2 for _, e in m):
            return True
        idx = [i for i, _ in m]
        for pat in ideal.patterns:
            if pat.kind == "unit":
                return True
            if pat.kind == "vars" and any(pat.p1.holds(i) for i in idx):
                return True
            if pat.kind == "squares" and any(e >= 2 and pat.p1.holds(i) for i, e in m):
                return True
            if pat.kind == "pairs" and any(
                i != j and pat.p1.holds(i) and pat.p2.holds(j) for i in idx for j in idx
            ):
                return True
        return False

    def contains(self, ideal: PatternIdeal, r: MPoly) -> bool:
        return all(self.mono_in(ideal, m) for m, _ in r.terms)

    def reduce(self, ideal: PatternIdeal, r: MPoly) -> MPoly:
        return MPoly(tuple((m, c) for m, c in r.terms if not self.mono_in(ideal, m)))

    def times_var_pred(self, ideal: PatternIdeal, m: Monomial) -> Pred:
        """Predicate of j such that m * t_j lies in ``ideal``."""
        if self.mono_in(ideal, m):
            return TRUE
        idx = [i for i, _ in m]
        parts = []
        if self.square_zero:
            parts.append(in_set(idx))
        for pat in ideal.patterns:
            if pat.kind == "unit":
                return TRUE
            if pat.kind == "vars":
                parts.append(pat.p1)
            elif pat.kind == "squares":
                parts.append(conj(in_set(idx), pat.p1))
            elif pat.kind == "pairs":
                for i in idx:
                    not_i = negate(in_set([i]))
                    if pat.p1.holds(i):
                        parts.append(conj(not_i, pat.p2))
                    if pat.p2.holds(i):
                        parts.append(conj(not_i, pat.p1))
        return disj(*parts)

    def _instances(self, pat: Pattern, idx_window) -> list[Monomial]:
        dom = [i for i in idx_window if self.domain.holds(i)]
        if pat.kind == "unit":
            return [()]
        if pat.kind == "vars":
            return [((i, 1),) for i in dom if pat.p1.holds(i)]
        if pat.kind == "squares":
            return [((i, 2),) for i in dom if pat.p1.holds(i)]
        return [tuple(sorted(((i, 1), (j, 1)))) for i, j in product(dom, dom)
                if i != j and pat.p1.holds(i) and pat.p2.holds(j)]

    def subset_witness(self, a: PatternIdeal, b: PatternIdeal) -> Monomial | None:
        """A generator of ``a`` outside ``b``, or ``None`` when a ⊆ b.

        Exact: every condition involved depends only on the position class of
        each index and on whether two indices coincide, and the window holds
        two representatives of every class on both far sides.
        """
        if a.vars_only() and b.vars_only():
            if a.kind == "unit":
                return None if b.kind == "unit" else ()
            if b.kind == "unit":
                return None
            from .predicates import counterexample
            i = counterexample(a.vars_pred(), b.vars_pred(), self.domain)
            return None if i is None else ((i, 1),)
        w = window(*a.preds(), *b.preds(), self.domain)
        for pat in a.patterns:
            for m in self._instances(pat, w):
                if not self.mono_in(b, m):
                    return m
        return None

    def relate(self, a: PatternIdeal, b: PatternIdeal) -> str:
        ab = self.subset_witness(a, b) is None
        ba = self.subset_witness(b, a) is None
        if ab and ba:
            return "equal"
        if ab:
            return "subset"
        if ba:
            return "superset"
        return "incomparable"

    def restrict(self, ideal: PatternIdeal) -> PatternIdeal:
        out = []
        for p in ideal.patterns:
            if p.kind == "unit":
                return PatternIdeal.unit()
            q1, q2 = compact(conj(p.p1, self.domain)), compact(conj(p.p2, self.domain))
            if q1 == FALSE or (p.kind == "pairs" and q2 == FALSE):
                continue
            out.append(Pattern(p.kind, q1, q2 if p.kind == "pairs" else TRUE))
        return PatternIdeal(tuple(out))

    def preimage(self, alpha: IndexMap, ideal: PatternIdeal) -> PatternIdeal:
        if alpha.is_table:
            raise UnsupportedIdealClass("preimages under partially specified index maps")
        out = []
        needs_injective = any(p.kind in ("pairs", "squares") for p in ideal.patterns)
        if needs_injective:
            inj, _ = injective_on(alpha, self.domain)
            if not inj:
                raise UnsupportedIdealClass(
                    "preimage of product patterns under a non-injective index map")
        for p in ideal.patterns:
            if p.kind == "unit":
                return PatternIdeal.unit()
            out.append(Pattern(p.kind, alpha.pull(p.p1),
                               alpha.pull(p.p2) if p.kind == "pairs" else TRUE))
        return self.restrict(PatternIdeal(tuple(out)))

    def image_contained(self, alpha: IndexMap, ideal: PatternIdeal) -> Monomial | None:
        """A generator m of ``ideal`` with alpha(m) outside ``ideal``, or None."""
        w = alpha.decision_window(preds=ideal.preds() + [self.domain])
        for pat in ideal.patterns:
            for m in self._instances(pat, w):
                img = self.apply(alpha, MPoly(((m, self.field.one),)))
                if not self.contains(ideal, img):
                    return m
        return None

    def intersect(self, a: PatternIdeal, b: PatternIdeal) -> PatternIdeal:
        rel = self.relate(a, b)
        if rel in ("subset", "equal"):
            return a
        if rel == "superset":
            return b
        if a.vars_only() and b.vars_only():
            p, q = a.vars_pred(), b.vars_pred()
            return self.restrict(PatternIdeal((
                Pattern("vars", conj(p, q)),
                Pattern("pairs", conj(p, negate(q)), conj(q, negate(p))),
            )))
        raise UnsupportedIdealClass("intersection of incomparable product-pattern ideals")

    def product(self, a: PatternIdeal, b: PatternIdeal) -> PatternIdeal:
        if a.kind == "zero" or b.kind == "zero":
            return PatternIdeal.zero()
        if a.kind == "unit":
            return b
        if b.kind == "unit":
            return a
        if not (a.vars_only() and b.vars_only()):
            raise UnsupportedIdealClass("products beyond variable-generated ideals")
        p, q = a.vars_pred(), b.vars_pred()
        pats = [Pattern("pairs", p, q)]
        if not self.square_zero:
            pats.append(Pattern("squares", conj(p, q)))
        return self.restrict(PatternIdeal(tuple(pats)))

    def is_prime(self, ideal: PatternIdeal):
        """(True/False, witness).  Variable ideals are prime unless the ring is
        square-zero; a product pattern gives an explicit zero divisor pair."""
        ideal = self.restrict(ideal)
        if ideal.kind == "unit":
            return False, {"reason": "unit ideal"}
        w = window(*ideal.preds(), self.domain)
        outside = [i for i in w if self.domain.holds(i) and not self.mono_in(ideal, ((i, 1),))]
        if self.square_zero:
            if outside:
                i = outside[0]
                return False, {"a": var_str(i), "b": var_str(i)}
            return True, {}
        for pat in ideal.patterns:
            if pat.kind in ("pairs", "squares"):
                for m in self._instances(pat, w):
                    factors = [((i, 1),) for i, e in m for _ in range(e)]
                    if all(not self.mono_in(ideal, f) for f in factors):
                        return False, {"a": mono_str(factors[0]), "b": mono_str(factors[1])}
        return True, {}

    def equivalent_vars(self, a: PatternIdeal, b: PatternIdeal) -> bool:
        return equivalent(a.vars_pred(), b.vars_pred(), self.domain)
