"""Dense univariate polynomials over an exact field."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Any

from .fields import QQ, Rationals


@dataclass(frozen=True)
class Poly:
    field: Any
    coeffs: tuple  # ascending degree, no trailing zeros

    def __post_init__(self):
        c = list(self.coeffs)
        while c and self.field.is_zero(c[-1]):
            c.pop()
        object.__setattr__(self, "coeffs", tuple(c))

    @classmethod
    def of(cls, coeffs, field=QQ) -> "Poly":
        return cls(field, tuple(field.coerce(c) if not isinstance(c, tuple) else c for c in coeffs))

    @classmethod
    def t(cls, field=QQ) -> "Poly":
        return cls(field, (field.zero, field.one))

    @classmethod
    def const(cls, c, field=QQ) -> "Poly":
        return cls(field, (field.coerce(c) if not isinstance(c, tuple) else c,))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def constant_term(self):
        return self.coeffs[0] if self.coeffs else self.field.zero

    def _lift(self, other) -> "Poly":
        if isinstance(other, Poly):
            return other
        return Poly.const(other, self.field)

    def __add__(self, other):
        other = self._lift(other)
        f = self.field
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (f.zero,) * (n - len(self.coeffs))
        b = other.coeffs + (f.zero,) * (n - len(other.coeffs))
        return Poly(f, tuple(f.add(x, y) for x, y in zip(a, b)))

    __radd__ = __add__

    def __neg__(self):
        return Poly(self.field, tuple(self.field.neg(x) for x in self.coeffs))

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        other = self._lift(other)
        f = self.field
        if self.is_zero() or other.is_zero():
            return Poly(f, ())
        out = [f.zero] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, x in enumerate(self.coeffs):
            if f.is_zero(x):
                continue
            for j, y in enumerate(other.coeffs):
                out[i + j] = f.add(out[i + j], f.mul(x, y))
        return Poly(f, tuple(out))

    __rmul__ = __mul__

    def __pow__(self, e: int):
        result = Poly(self.field, (self.field.one,))
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __call__(self, x):
        """Evaluate at a field element (Horner)."""
        f = self.field
        acc = f.zero
        for c in reversed(self.coeffs):
            acc = f.add(f.mul(acc, x), c)
        return acc

    def compose(self, inner: "Poly") -> "Poly":
        """Return ``self(inner(t))``."""
        acc = Poly(inner.field, ())
        for c in reversed(self.coeffs):
            acc = acc * inner + Poly(inner.field, (c,))
        return acc

    def map_coeffs(self, field, fn=None) -> "Poly":
        fn = fn or field.coerce
        return Poly(field, tuple(fn(c) for c in self.coeffs))

    def divmod(self, other: "Poly"):
        f = self.field
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        inv_lead = f.inv(other.coeffs[-1])
        quot = [f.zero] * max(0, len(rem) - len(other.coeffs) + 1)
        for k in range(len(quot) - 1, -1, -1):
            c = f.mul(rem[k + len(other.coeffs) - 1], inv_lead)
            quot[k] = c
            if not f.is_zero(c):
                for i, d in enumerate(other.coeffs):
                    rem[k + i] = f.sub(rem[k + i], f.mul(c, d))
        return Poly(f, tuple(quot)), Poly(f, tuple(rem))

    def __eq__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        return self.field == other.field and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.field, self.coeffs))

    def __str__(self):
        return format_poly(self)

    def to_json(self) -> Any:
        return [self.field.to_json(c) for c in self.coeffs]


def format_poly(p: Poly, var: str = "t") -> str:
    """Canonical ascending-degree text form, e.g. ``1 + t + t^2``."""
    if p.is_zero():
        return "0"
    f = p.field
    terms = []
    for k, c in enumerate(p.coeffs):
        if f.is_zero(c):
            continue
        mono = "" if k == 0 else (var if k == 1 else f"{var}^{k}")
        cs = f.fmt(c)
        if not mono:
            terms.append(cs)
        elif cs == "1":
            terms.append(mono)
        elif cs == "-1":
            terms.append("-" + mono)
        else:
            terms.append(f"{cs}*{mono}")
    text = " + ".join(terms)
    return text.replace("+ -", "- ")


def rational_poly(coeffs) -> Poly:
    return Poly.of(coeffs, QQ)


def is_rational(p: Poly) -> bool:
    return isinstance(p.field, Rationals)
