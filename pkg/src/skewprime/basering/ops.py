"""Model-independent entry points: membership, endomorphism application,
preimages, ideal comparison and endomorphism equality."""
from __future__ import annotations

from fractions import Fraction

from ..errors import InvalidInput, UnsupportedIdealClass
from ..verdict import Verdict, proven, refuted, undecided
from .fields import QQ, CyclotomicField, mult_order, root_product
from .fields import cyclotomic as _cyclotomic_coeffs
from .monomial import MonomialRing, PatternIdeal
from .points import PointEndo, PointIdeal, PointRing
from .poly import Poly
from .predicates import TRUE, IndexMap
from .words import WordAlgebra, WordEndo, WordIdeal

_IDEAL_RING = {PointIdeal: PointRing, PatternIdeal: MonomialRing, WordIdeal: WordAlgebra}


def _default_ring(ideal):
    try:
        return _IDEAL_RING[type(ideal)]()
    except KeyError:
        raise UnsupportedIdealClass(f"unsupported ideal type {type(ideal).__name__}") from None


def contains(ideal, r, ring=None) -> bool:
    ring = ring or _default_ring(ideal)
    return ring.contains(ideal, r)


def apply_endo(sigma, r, ring=None):
    if isinstance(sigma, PointEndo):
        return sigma.apply(r)
    if ring is None:
        raise InvalidInput("index-map endomorphisms need their ring")
    return ring.apply(sigma, r)


def preimage(sigma, ideal, ring=None):
    ring = ring or _default_ring(ideal)
    return ring.preimage(sigma, ideal)


def ideal_relate(a, b, ring=None) -> str:
    if type(a) is not type(b):
        raise UnsupportedIdealClass("ideals from different ring models")
    ring = ring or _default_ring(a)
    return ring.relate(a, b)


def cyclotomic(r: int) -> Poly:
    """The r-th cyclotomic polynomial over Q."""
    return Poly.of(_cyclotomic_coeffs(r), QQ)


def f_omega_p(r: int, p: int, k: int = 1) -> Poly:
    """prod_{i < l} (t - w**(p**i)) for w = zeta_r**k, l = ord_r(p).

    Coefficients live in Q(zeta_r); the result is downcast to Q when all of
    them are rational.
    """
    if r < 1:
        raise InvalidInput("r must be positive")
    if r % p == 0:
        raise InvalidInput(f"p={p} divides r={r}")
    from math import gcd
    if gcd(k, r) != 1:
        raise InvalidInput(f"zeta_{r}^{k} is not a primitive root of unity")
    ell = mult_order(p, r)
    roots = []
    e = k % r
    for _ in range(ell):
        roots.append((1, e))
        e = e * p % r
    coeffs = root_product(r, roots)
    cf = CyclotomicField(r)
    out = Poly(cf, tuple(cf._reduce(c) for c in coeffs))
    if all(cf.rational_part(c) is not None for c in out.coeffs):
        return Poly.of([Fraction(cf.rational_part(c)) for c in out.coeffs], QQ)
    return out


def endo_equal(a, b, bound: int = 10, ring=None) -> Verdict:
    """Equality of two endomorphisms of the same model.

    Closed forms are compared exactly.  Maps given by finite tables are only
    known on a window, so agreement there is reported as undecided."""
    if isinstance(a, PointEndo) and isinstance(b, PointEndo):
        if a.image == b.image:
            return proven("images of t agree", image=str(a.image))
        return refuted("images of t differ", left=str(a.image), right=str(b.image))
    if isinstance(a, IndexMap) and isinstance(b, IndexMap):
        pairs = [("", a, b)]
    elif isinstance(a, WordEndo) and isinstance(b, WordEndo):
        fams = sorted({f for f, _ in a.maps} | {f for f, _ in b.maps})
        pairs = [(f, a.index_map(f), b.index_map(f)) for f in fams]
    else:
        raise InvalidInput("endomorphisms of different models")
    domain = getattr(ring, "domain", TRUE)
    partial = False
    for fam, f, g in pairs:
        tables = [m for m in (f, g) if m.is_table]
        if tables:
            partial = True
            lim = min([bound] + [m.known for m in tables])
            idx = range(-lim, lim + 1)
        else:
            idx = f.decision_window(g, preds=[domain])
        for i in idx:
            if domain.holds(i) and f(i) != g(i):
                return refuted("index maps differ", family=fam, index=i, left=f(i), right=g(i))
    if partial:
        return undecided("agree on the specified window only", bound=bound)
    return proven("closed-form index maps agree on the decision window")
