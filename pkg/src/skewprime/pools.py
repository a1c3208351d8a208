"""Seeded sampling of ring elements, monomials and index sets for searches."""
from __future__ import annotations

import random
from fractions import Fraction

from .basering.fields import FiniteField
from .basering.monomial import MonomialRing
from .basering.points import PointRing
from .basering.poly import Poly
from .basering.words import WordAlgebra

DEFAULT_POOL = 64
DEFAULT_DEGREE = 4
DEFAULT_WORD_BOUND = 4
DEFAULT_CAP = 10_000


def index_window(ring, lo: int = -3, hi: int = 6) -> list[int]:
    dom = getattr(ring, "domain", None)
    return [i for i in range(lo, hi + 1) if dom is None or dom.holds(i)]


def _coeff(ring, rng: random.Random):
    f = ring.field
    if isinstance(f, FiniteField):
        return rng.randrange(1, f.q)
    return Fraction(rng.choice([-3, -2, -1, 1, 2, 3]))


def random_monomial(ring, rng: random.Random, degree: int, indices=None):
    """A single basis element (monomial or word) as a ring element."""
    indices = indices or index_window(ring)
    if isinstance(ring, MonomialRing):
        k = rng.randint(0, degree)
        if ring.square_zero:
            chosen = rng.sample(indices, min(k, len(indices)))
            return ring.monomial((i, 1) for i in chosen)
        exps: dict[int, int] = {}
        for _ in range(k):
            i = rng.choice(indices)
            exps[i] = exps.get(i, 0) + 1
        return ring.monomial(exps.items())
    if isinstance(ring, WordAlgebra):
        k = rng.randint(0, degree)
        w = tuple((rng.choice(ring.families), rng.choice(indices)) for _ in range(k))
        return ring.word(w)
    return Poly.t(ring.field) ** rng.randint(0, degree)


def random_element(ring, rng: random.Random, degree: int = DEFAULT_DEGREE, indices=None,
                   terms: int = 3):
    if isinstance(ring, PointRing):
        d = rng.randint(0, degree)
        return Poly.of([_coeff(ring, rng) if rng.random() < 0.8 else 0 for _ in range(d + 1)],
                       ring.field)
    out = ring.zero()
    for _ in range(rng.randint(1, terms)):
        out = ring.add(out, ring.scale(_coeff(ring, rng), random_monomial(ring, rng, degree, indices)))
    return out


def element_pool(ring, seed: int = 0, size: int = DEFAULT_POOL, degree: int = DEFAULT_DEGREE,
                 indices=None, nonzero: bool = True) -> list:
    rng = random.Random(seed)
    out = []
    tries = 0
    while len(out) < size and tries < 20 * size:
        tries += 1
        r = random_element(ring, rng, degree, indices)
        if nonzero and ring.is_zero(r):
            continue
        out.append(r)
    return out


def monomial_pool(ring, seed: int = 0, size: int = DEFAULT_POOL, degree: int = DEFAULT_DEGREE,
                  indices=None) -> list:
    rng = random.Random(seed)
    out, seen = [], set()
    tries = 0
    while len(out) < size and tries < 50 * size:
        tries += 1
        r = random_monomial(ring, rng, degree, indices)
        if ring.is_zero(r) or r in seen:
            continue
        seen.add(r)
        out.append(r)
    return out


def ideal_elements(ring, ideal, multipliers) -> list:
    """A few elements of ``ideal``: a generator times each multiplier."""
    from .basering.monomial import PatternIdeal
    from .basering.points import PointIdeal, vanishing_generator
    from .basering.predicates import window
    from .basering.words import WordIdeal

    gen = None
    if isinstance(ideal, PointIdeal):
        if ideal.kind == "unit":
            gen = ring.one()
        elif ideal.kind == "vanishing":
            g = vanishing_generator(ideal.points, ring.field)
            gen = g if g.field == ring.field else None
    elif isinstance(ideal, PatternIdeal) and ideal.patterns:
        w = window(*ideal.preds(), ring.domain)
        for pat in ideal.patterns:
            inst = ring._instances(pat, w)
            if inst:
                gen = ring.monomial(inst[0])
                break
    elif isinstance(ideal, WordIdeal):
        if ideal.kind == "unit":
            gen = ring.one()
        elif ideal.kind == "letters":
            w = window(*ideal.preds(), ring.domain)
            for f, p in ideal.letters:
                idx = [i for i in w if p.holds(i) and ring.domain.holds(i)]
                if idx:
                    gen = ring.word(((f, idx[0]),))
                    break
    if gen is None:
        return []
    return [ring.mul(r, gen) for r in multipliers]
