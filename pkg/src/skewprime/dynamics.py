"""Forward orbits a, phi(a), phi(phi(a)), ... of points under endomorphisms of K[t]."""
from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .basering.fields import FiniteField, mult_order
from .basering.points import Point, PointEndo

# orbits over Q that outgrow this many bits are abandoned as undecided
_HEIGHT_LIMIT = 4096


@dataclass(frozen=True)
class OrbitReport:
    points: tuple  # a_0 .. a_{k+l-1} for finite orbits, else a prefix
    kind: str  # "finite" | "infinite" | "undecided"
    preperiod: int | None = None
    period: int | None = None
    cap: int | None = None
    rule: str = ""

    @property
    def finite(self) -> bool:
        return self.kind == "finite"

    def cycle(self) -> tuple:
        return self.points[self.preperiod:] if self.finite else ()

    def label(self) -> str:
        if self.kind == "finite":
            return f"Finite(k={self.preperiod}, l={self.period})"
        if self.kind == "infinite":
            return "InfiniteExact"
        return f"Undecided({self.cap})"

    def to_json(self):
        out = {"classification": self.label(), "points": [str(p) for p in self.points]}
        if self.rule:
            out["rule"] = self.rule
        return out


def _root_orbit(a: Point, p: int) -> OrbitReport:
    m, e = a.root_data()
    # the order m / gcd(m, p^n) drops until every prime of p is removed from m
    n0 = 0
    while gcd(m, p ** n0) != gcd(m, p ** (n0 + 1)):
        n0 += 1
    core = m // gcd(m, p ** n0)
    ell = mult_order(p, core)
    pts = []
    x = e
    for _ in range(n0 + ell):
        pts.append(Point.root(m, x))
        x = x * p % m
    return OrbitReport(tuple(pts), "finite", n0, ell, rule="root-of-unity exponent arithmetic")


def _iterate(a: Point, sigma: PointEndo, cap: int, rule: str) -> OrbitReport:
    seen: dict = {}
    pts = []
    x = a
    for n in range(cap + 1):
        if x in seen:
            k = seen[x]
            return OrbitReport(tuple(pts), "finite", k, n - k, rule=rule)
        if x.kind == "rational" and max(x.value.numerator.bit_length(),
                                        x.value.denominator.bit_length()) > _HEIGHT_LIMIT:
            break
        seen[x] = n
        pts.append(x)
        x = sigma.point_map(x)
    return OrbitReport(tuple(pts[:16]), "undecided", cap=cap, rule=rule)


def orbit(a: Point, sigma: PointEndo, cap: int = 10_000) -> OrbitReport:
    p = sigma.power_exponent()
    fld = sigma.image.field
    if p is not None:
        if a.kind == "zero" or p == 1:
            return OrbitReport((a,), "finite", 0, 1, rule="fixed point")
        if a.root_data() is not None:
            return _root_orbit(a, p)
        if a.kind == "rational":
            prefix = [a]
            for _ in range(3):
                prefix.append(sigma.point_map(prefix[-1]))
            return OrbitReport(tuple(prefix), "infinite",
                               rule="|a| not in {0, 1}: absolute values strictly monotone")
        return _iterate(a, sigma, max(cap, fld.q + 1), "finite field iteration")
    c = sigma.translation()
    if c is not None and not isinstance(fld, FiniteField) and c != 0:
        prefix = [a]
        for _ in range(3):
            prefix.append(sigma.point_map(prefix[-1]))
        return OrbitReport(tuple(prefix), "infinite", rule="translation by a nonzero rational")
    if isinstance(fld, FiniteField):
        cap = max(cap, fld.q + 1)
    return _iterate(a, sigma, cap, "hashed iteration")
