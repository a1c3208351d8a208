"""The point model: R = K[t] with maximal ideals m_a indexed by points a.

Ideals are described by the finite set of points they vanish on, which is
exactly the information every criterion about orbits of points needs.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Iterable

from ..errors import InvalidInput, UnsupportedIdealClass, UnsupportedPoint
from .fields import QQ, CyclotomicField, FiniteField, Rationals, root_product
from .poly import Poly

_KIND_ORDER = {"zero": 0, "rational": 1, "ff": 2, "root": 3}


@dataclass(frozen=True)
class Point:
    kind: str
    value: object = None  # Fraction for rational, residue code for ff
    q: int | None = None
    order: int | None = None  # roots of unity: zeta_order ** exp
    exp: int | None = None

    @staticmethod
    def zero() -> "Point":
        return Point("zero")

    @staticmethod
    def rational(x) -> "Point":
        x = Fraction(x)
        return Point.zero() if x == 0 else Point("rational", x)

    @staticmethod
    def ff(residue: int, q: int) -> "Point":
        residue = int(residue)
        if not 0 <= residue < q:
            raise InvalidInput(f"residue {residue} out of range for F{q}")
        return Point.zero() if residue == 0 else Point("ff", residue, q=q)

    @staticmethod
    def root(order: int, exp: int) -> "Point":
        if order < 1:
            raise InvalidInput("root of unity order must be positive")
        exp %= order
        g = gcd(exp, order)
        order, exp = order // g, exp // g
        if order == 1:
            return Point.rational(1)
        if order == 2:
            return Point.rational(-1)
        return Point("root", order=order, exp=exp)

    def root_data(self) -> tuple[int, int] | None:
        """(order, exponent) when the point is a root of unity in char 0."""
        if self.kind == "root":
            return self.order, self.exp
        if self.kind == "rational" and self.value == 1:
            return 1, 0
        if self.kind == "rational" and self.value == -1:
            return 2, 1
        return None

    def sort_key(self):
        if self.kind == "zero":
            return (0,)
        if self.kind == "rational":
            return (1, self.value)
        if self.kind == "ff":
            return (2, self.q, self.value)
        return (3, self.order, self.exp)

    def __str__(self):
        if self.kind == "zero":
            return "0"
        if self.kind == "rational":
            return str(self.value)
        if self.kind == "ff":
            return str(self.value)
        return f"zeta({self.order},{self.exp})"

    def to_json(self):
        return str(self)


_ROOT_RE = re.compile(r"^zeta\((\d+),\s*(-?\d+)\)$")


def parse_point(text, field) -> Point:
    """Parse ``"0"``, ``"3/2"``, ``"zeta(6,1)"`` or an F_q residue code."""
    if isinstance(field, FiniteField):
        try:
            return Point.ff(int(text), field.q)
        except ValueError:
            raise InvalidInput(f"bad finite-field point {text!r}") from None
    text = str(text).strip()
    m = _ROOT_RE.match(text)
    if m:
        return Point.root(int(m.group(1)), int(m.group(2)))
    try:
        return Point.rational(Fraction(text))
    except ValueError:
        raise InvalidInput(f"bad point {text!r}") from None


def sorted_points(points: Iterable[Point]) -> list[Point]:
    return sorted(points, key=Point.sort_key)


@dataclass(frozen=True)
class PointRing:
    """K[t] over Q or F_q; ``roots`` admits roots of unity as points."""

    field: object = QQ
    roots: bool = False

    @property
    def name(self) -> str:
        if isinstance(self.field, FiniteField):
            return f"{self.field.name}[t]"
        return "Q[t] (cyclotomic points)" if self.roots else "Q[t]"

    def poly(self, coeffs) -> Poly:
        return Poly.of(coeffs, self.field)

    def t(self) -> Poly:
        return Poly.t(self.field)

    def one(self) -> Poly:
        return Poly.const(1, self.field)

    def check_point(self, a: Point) -> Point:
        if a.kind == "ff" and (not isinstance(self.field, FiniteField) or a.q != self.field.q):
            raise UnsupportedPoint(f"point {a} does not belong to {self.name}")
        if a.kind in ("rational", "root") and isinstance(self.field, FiniteField):
            raise UnsupportedPoint(f"point {a} does not belong to {self.name}")
        if a.kind == "root" and not self.roots:
            raise UnsupportedPoint(f"roots of unity need the cyclotomic-points field, got {a}")
        return a

    # ring interface
    def zero(self) -> Poly:
        return Poly(self.field, ())

    def const(self, c) -> Poly:
        return Poly.const(c, self.field)

    def add(self, a: Poly, b: Poly) -> Poly:
        return a + b

    def neg(self, a: Poly) -> Poly:
        return -a

    def scale(self, c, a: Poly) -> Poly:
        return Poly.const(c, self.field) * a

    def mul(self, a: Poly, b: Poly) -> Poly:
        return a * b

    def is_zero(self, a: Poly) -> bool:
        return a.is_zero()

    def fmt(self, a: Poly) -> str:
        return str(a)

    def check_endo(self, sigma: "PointEndo") -> "PointEndo":
        if sigma.image.field != self.field:
            raise InvalidInput(f"endomorphism over {sigma.image.field.name} used on {self.name}")
        return sigma

    def apply(self, sigma: "PointEndo", r: Poly) -> Poly:
        return sigma.apply(r)

    def compose(self, outer: "PointEndo", inner: "PointEndo") -> "PointEndo":
        return outer.then(inner)

    def identity(self) -> "PointEndo":
        return PointEndo.identity(self.field)

    def endo_equal_exact(self, a: "PointEndo", b: "PointEndo") -> bool:
        return a.image == b.image

    def contains(self, ideal: "PointIdeal", r: Poly) -> bool:
        return point_contains(ideal, r)

    def reduce(self, ideal: "PointIdeal", r: Poly) -> Poly:
        """Canonical representative of r modulo ``ideal`` where one exists."""
        if ideal.kind == "unit":
            return self.zero()
        if ideal.kind == "zero":
            return r
        if len(ideal.points) == 1:
            (a,) = ideal.points
            if a.kind != "root":
                _, v = evaluate(r, a)
                return Poly.const(v, self.field)
        gen = vanishing_generator(ideal.points, self.field)
        if gen.field == self.field:
            return r.divmod(gen)[1]
        return r

    def preimage(self, sigma: "PointEndo", ideal: "PointIdeal") -> "PointIdeal":
        return point_preimage(sigma, ideal)

    def relate(self, a: "PointIdeal", b: "PointIdeal") -> str:
        return point_ideal_relate(a, b)

    def intersect(self, a: "PointIdeal", b: "PointIdeal") -> "PointIdeal":
        if a.kind == "zero" or b.kind == "zero":
            return PointIdeal.zero()
        if a.kind == "unit":
            return b
        if b.kind == "unit":
            return a
        return PointIdeal.vanishing(a.points | b.points)


def evaluate(r: Poly, a: Point):
    """Value of ``r`` at ``a`` as (field, element)."""
    if a.kind == "zero":
        return r.field, r.constant_term()
    if a.kind == "rational":
        if not isinstance(r.field, Rationals):
            raise UnsupportedPoint(f"cannot evaluate {r.field.name} polynomial at {a}")
        return r.field, r(a.value)
    if a.kind == "ff":
        if not isinstance(r.field, FiniteField) or r.field.q != a.q:
            raise UnsupportedPoint(f"cannot evaluate {r.field.name} polynomial at {a}")
        return r.field, r(a.value)
    if not isinstance(r.field, Rationals):
        raise UnsupportedPoint(f"cannot evaluate {r.field.name} polynomial at {a}")
    cf = CyclotomicField(a.order)
    return cf, r.map_coeffs(cf)(cf.zeta(a.exp))


def vanishes_at(r: Poly, a: Point) -> bool:
    f, v = evaluate(r, a)
    return f.is_zero(v)


@dataclass(frozen=True)
class PointIdeal:
    kind: str  # "zero" | "unit" | "vanishing"
    points: frozenset = field(default_factory=frozenset)

    @staticmethod
    def zero() -> "PointIdeal":
        return PointIdeal("zero")

    @staticmethod
    def unit() -> "PointIdeal":
        return PointIdeal("unit")

    @staticmethod
    def vanishing(points: Iterable[Point]) -> "PointIdeal":
        pts = frozenset(points)
        if not pts:
            return PointIdeal.unit()
        return PointIdeal("vanishing", pts)

    def is_maximal(self) -> bool:
        return self.kind == "vanishing" and len(self.points) == 1

    def __str__(self):
        if self.kind == "zero":
            return "0"
        if self.kind == "unit":
            return "(1)"
        return "V{" + ", ".join(str(p) for p in sorted_points(self.points)) + "}"

    def to_json(self):
        if self.kind != "vanishing":
            return self.kind
        return {"vanishing": [p.to_json() for p in sorted_points(self.points)]}


def point_contains(ideal: PointIdeal, r: Poly) -> bool:
    if ideal.kind == "unit":
        return True
    if ideal.kind == "zero":
        return r.is_zero()
    return all(vanishes_at(r, a) for a in ideal.points)


def point_ideal_relate(a: PointIdeal, b: PointIdeal) -> str:
    """Relation of ``a`` to ``b``: subset, superset, equal or incomparable."""
    def sub(x, y):
        if x.kind == "zero" or y.kind == "unit":
            return True
        if x.kind == "unit" or y.kind == "zero":
            return False
        return y.points <= x.points

    ab, ba = sub(a, b), sub(b, a)
    if ab and ba:
        return "equal"
    if ab:
        return "subset"
    if ba:
        return "superset"
    return "incomparable"


@dataclass(frozen=True)
class PointEndo:
    """K-algebra endomorphism of K[t] determined by the image of t."""

    image: Poly
    label: str = "subst"

    @staticmethod
    def power(p: int, field=QQ) -> "PointEndo":
        if p < 1:
            raise InvalidInput("power map exponent must be positive")
        return PointEndo(Poly.t(field) ** p, f"power({p})")

    @staticmethod
    def evaluation(c, field=QQ) -> "PointEndo":
        return PointEndo(Poly.const(c, field), f"eval({c})")

    @staticmethod
    def subst(f: Poly) -> "PointEndo":
        return PointEndo(f, f"subst({f})")

    @staticmethod
    def identity(field=QQ) -> "PointEndo":
        return PointEndo(Poly.t(field), "id")

    def power_exponent(self) -> int | None:
        """``p`` when the image of t is exactly t**p."""
        c = self.image.coeffs
        if len(c) >= 2 and c[-1] == self.image.field.one and all(
            self.image.field.is_zero(x) for x in c[:-1]
        ):
            return len(c) - 1
        return None

    def is_evaluation(self) -> bool:
        return self.image.is_constant()

    def is_injective(self) -> bool:
        return not self.image.is_constant()

    def translation(self):
        """``c`` when the image of t is t + c."""
        c = self.image.coeffs
        f = self.image.field
        if len(c) == 2 and c[1] == f.one:
            return c[0]
        return None

    def apply(self, r: Poly) -> Poly:
        return r.compose(self.image)

    def then(self, other: "PointEndo") -> "PointEndo":
        """``self ∘ other`` (apply ``other`` first)."""
        return PointEndo(other.image.compose(self.image), f"{self.label}*{other.label}")

    def point_map(self, a: Point) -> Point:
        """phi(a) where sigma^{-1}(m_a) = m_{phi(a)}."""
        p = self.power_exponent()
        f = self.image.field
        if p is not None:
            if a.kind == "zero":
                return a
            if a.kind == "rational":
                return Point.rational(a.value ** p)
            if a.kind == "ff":
                return Point.ff(f.pow(a.value, p), a.q)
            return Point.root(a.order, a.exp * p)
        if a.kind == "root":
            raise UnsupportedIdealClass(
                f"only power maps act on roots of unity, got image {self.image}"
            )
        if self.image.is_constant():
            c = self.image.constant_term()
            return Point.ff(c, f.q) if isinstance(f, FiniteField) else Point.rational(c)
        _, v = evaluate(self.image, a)
        return Point.ff(v, f.q) if isinstance(f, FiniteField) else Point.rational(v)

    def __eq__(self, other):
        return isinstance(other, PointEndo) and self.image == other.image

    def __hash__(self):
        return hash(self.image)

    def __str__(self):
        return f"t -> {self.image}"


def point_preimage(sigma: PointEndo, ideal: PointIdeal) -> PointIdeal:
    if ideal.kind == "unit":
        return ideal
    if ideal.kind == "zero":
        if sigma.is_injective():
            return ideal
        return PointIdeal.vanishing([sigma.point_map(Point.zero())])
    return PointIdeal.vanishing(sigma.point_map(a) for a in ideal.points)


def vanishing_generator(points: Iterable[Point], field=QQ) -> Poly:
    """Monic generator prod (t - a) of the ideal of a finite point set.

    Roots of unity are multiplied out in the smallest common cyclotomic field;
    the result is returned over Q when every coefficient is rational.
    """
    pts = sorted_points(points)
    if isinstance(field, FiniteField):
        out = Poly.const(1, field)
        for a in pts:
            v = 0 if a.kind == "zero" else a.value
            out = out * Poly(field, (field.neg(v), field.one))
        return out
    order = 1
    for a in pts:
        rd = a.root_data()
        if rd is None and a.kind != "zero":
            continue
        if rd is not None:
            order = order * rd[0] // gcd(order, rd[0])
    if order <= 2 and all(a.kind in ("zero", "rational") for a in pts):
        out = Poly.const(1, QQ)
        for a in pts:
            v = Fraction(0) if a.kind == "zero" else a.value
            out = out * Poly.of([-v, 1])
        return out
    roots = []
    for a in pts:
        if a.kind == "zero":
            roots.append((0, 0))
        elif a.kind == "rational":
            roots.append((a.value, 0))
        else:
            roots.append((1, a.exp * (order // a.order)))
    cf = CyclotomicField(order)
    out = Poly(cf, tuple(cf._reduce(c) for c in root_product(order, roots)))
    if all(cf.rational_part(c) is not None for c in out.coeffs):
        return Poly.of([cf.rational_part(c) for c in out.coeffs], QQ)
    return out
