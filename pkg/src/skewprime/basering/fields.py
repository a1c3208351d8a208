"""Exact coefficient fields: the rationals, finite fields, cyclotomic fields.

Each field object knows how to do arithmetic on its own element
representation; elements themselves are plain immutable Python values
(``Fraction``, ``int`` or a tuple of ``Fraction``).
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd

from ..errors import InvalidInput


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    i = 2
    while i * i <= n:
        if n % i == 0:
            return False
        i += 1
    return True


def prime_power(q: int) -> tuple[int, int]:
    """Return ``(p, n)`` with ``q == p**n``; raise if ``q`` is not a prime power."""
    for p in range(2, q + 1):
        if q % p == 0:
            n, m = 0, q
            while m % p == 0:
                m //= p
                n += 1
            if m != 1 or not is_prime(p):
                break
            return p, n
    raise InvalidInput(f"{q} is not a prime power")


def totient(n: int) -> int:
    return sum(1 for k in range(1, n + 1) if gcd(k, n) == 1)


def mult_order(p: int, r: int) -> int:
    """Multiplicative order of ``p`` modulo ``r`` (1 when ``r == 1``)."""
    if r == 1:
        return 1
    if gcd(p, r) != 1:
        raise InvalidInput(f"{p} is not a unit modulo {r}")
    k, x = 1, p % r
    while x != 1:
        x = x * p % r
        k += 1
    return k


def divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


class Rationals:
    name = "Q"
    characteristic = 0

    zero = Fraction(0)
    one = Fraction(1)

    def coerce(self, x) -> Fraction:
        return Fraction(x)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return 1 / a

    def is_zero(self, a) -> bool:
        return a == 0

    def fmt(self, a) -> str:
        return str(a)

    def to_json(self, a):
        return str(a)

    def __eq__(self, other):
        return isinstance(other, Rationals)

    def __hash__(self):
        return hash("Q")

    def __repr__(self):
        return "Rationals()"


def _fp_trim(c):
    c = list(c)
    while c and c[-1] == 0:
        c.pop()
    return c


def _fp_mod(a, m, p):
    a = list(a)
    inv_lead = pow(m[-1], -1, p)
    while len(a) >= len(m):
        f = a[-1] * inv_lead % p
        shift = len(a) - len(m)
        for i, c in enumerate(m):
            a[shift + i] = (a[shift + i] - f * c) % p
        a = _fp_trim(a)
    return a


@lru_cache(maxsize=None)
def _irreducible(p: int, n: int) -> tuple[int, ...]:
    """Lexicographically first monic irreducible of degree ``n`` over F_p."""
    if n == 1:
        return (0, 1)
    for code in range(p ** n):
        low = [(code // p ** i) % p for i in range(n)]
        cand = low + [1]
        if cand[0] == 0:
            continue
        reducible = False
        for d in range(1, n // 2 + 1):
            for dcode in range(p ** d):
                div = [(dcode // p ** i) % p for i in range(d)] + [1]
                if not _fp_mod(cand, div, p):
                    reducible = True
                    break
            if reducible:
                break
        if not reducible:
            return tuple(cand)
    raise InvalidInput(f"no irreducible of degree {n} over F_{p}")  # pragma: no cover


class FiniteField:
    """F_q.  For q = p**n an element is the integer whose base-p digits are
    the coefficients of its residue modulo a fixed irreducible polynomial."""

    characteristic: int

    def __init__(self, q: int):
        self.p, self.n = prime_power(q)
        self.q = q
        self.characteristic = self.p
        self.name = f"F{q}"
        self.zero = 0
        self.one = 1
        self._modulus = _irreducible(self.p, self.n)

    def _digits(self, a):
        p = self.p
        return [(a // p ** i) % p for i in range(self.n)]

    def _undigits(self, c):
        return sum(int(x) * self.p ** i for i, x in enumerate(c))

    def coerce(self, x) -> int:
        if isinstance(x, Fraction):
            if x.denominator % self.p == 0:
                raise InvalidInput(f"{x} has no image in {self.name}")
            return self.mul(self.coerce(x.numerator), self.inv(self.coerce(x.denominator)))
        x = int(x)
        if self.n == 1:
            return x % self.p
        return x % self.p  # integers land in the prime subfield

    def element(self, code: int) -> int:
        if not 0 <= code < self.q:
            raise InvalidInput(f"{code} is not an element code of {self.name}")
        return code

    def add(self, a, b):
        if self.n == 1:
            return (a + b) % self.p
        return self._undigits((x + y) % self.p for x, y in zip(self._digits(a), self._digits(b)))

    def neg(self, a):
        if self.n == 1:
            return (-a) % self.p
        return self._undigits((-x) % self.p for x in self._digits(a))

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        if self.n == 1:
            return a * b % self.p
        x, y = self._digits(a), self._digits(b)
        prod = [0] * (2 * self.n - 1)
        for i, u in enumerate(x):
            if u:
                for j, v in enumerate(y):
                    prod[i + j] = (prod[i + j] + u * v) % self.p
        return self._undigits(_fp_mod(_fp_trim(prod), self._modulus, self.p))

    def pow(self, a, e: int):
        result, base = self.one, a
        while e:
            if e & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            e >>= 1
        return result

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return self.pow(a, self.q - 2)

    def is_zero(self, a) -> bool:
        return a == 0

    def fmt(self, a) -> str:
        return str(a)

    def to_json(self, a):
        return a

    def elements(self):
        return range(self.q)

    def __eq__(self, other):
        return isinstance(other, FiniteField) and other.q == self.q

    def __hash__(self):
        return hash(("F", self.q))

    def __repr__(self):
        return f"FiniteField({self.q})"


@lru_cache(maxsize=None)
def cyclotomic(r: int) -> tuple[int, ...]:
    """Integer coefficients (ascending) of the r-th cyclotomic polynomial.

    Divides t**r - 1 by every Phi_d with d a proper divisor of r.
    """
    if r < 1:
        raise InvalidInput("cyclotomic index must be positive")
    num = [-1] + [0] * (r - 1) + [1]
    for d in divisors(r)[:-1]:
        num = _int_exact_div(num, cyclotomic(d))
    return tuple(num)


def _int_exact_div(num, den):
    # den is monic with integer coefficients
    num = list(num)
    q = [0] * (len(num) - len(den) + 1)
    for k in range(len(q) - 1, -1, -1):
        c = num[k + len(den) - 1]
        q[k] = c
        if c:
            for i, d in enumerate(den):
                num[k + i] -= c * d
    if any(num[: len(den) - 1]):
        raise ArithmeticError("inexact division")  # pragma: no cover
    return q


def root_product(r: int, roots) -> list[list]:
    """Coefficients of prod (t - c_k * zeta_r^e_k) for ``roots`` = [(c_k, e_k)].

    Works in Q[x]/(x^r - 1), where multiplying by zeta_r^e is a rotation, so
    no reduction modulo Phi_r happens until the caller asks for it.  Each
    coefficient is returned as a length-r list over x = zeta_r.
    """
    coeffs = [[1] + [0] * (r - 1)]
    for c, e in roots:
        nxt = [[0] * r for _ in range(len(coeffs) + 1)]
        for i, row in enumerate(coeffs):
            for j, v in enumerate(row):
                if v:
                    nxt[i + 1][j] += v
                    nxt[i][(j + e) % r] -= c * v
        coeffs = nxt
    return coeffs


class CyclotomicField:
    """Q(zeta_r) with elements as coefficient tuples in the basis
    1, zeta, ..., zeta**(phi(r)-1), reduced modulo Phi_r."""

    characteristic = 0

    def __init__(self, r: int):
        if r < 1:
            raise InvalidInput("cyclotomic field order must be positive")
        self.r = r
        self.degree = len(cyclotomic(r)) - 1
        self.name = f"Q(zeta{r})"
        self.zero = (Fraction(0),) * self.degree
        self.one = (Fraction(1),) + (Fraction(0),) * (self.degree - 1)
        self._phi = cyclotomic(r)

    def _reduce(self, c):
        c = [Fraction(x) for x in c]
        d = self.degree
        for k in range(len(c) - 1, d - 1, -1):
            f = c[k]
            if f:
                for i in range(d + 1):
                    c[k - d + i] -= f * self._phi[i]
        c = c[:d] + [Fraction(0)] * max(0, d - len(c))
        return tuple(c)

    def coerce(self, x):
        return self._reduce([Fraction(x)])

    def zeta(self, k: int = 1):
        k %= self.r
        return self._reduce([0] * k + [1])

    def add(self, a, b):
        return tuple(x + y for x, y in zip(a, b))

    def sub(self, a, b):
        return tuple(x - y for x, y in zip(a, b))

    def neg(self, a):
        return tuple(-x for x in a)

    def mul(self, a, b):
        prod = [Fraction(0)] * (2 * self.degree - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        prod[i + j] += x * y
        return self._reduce(prod)

    def inv(self, a):
        # a has finite multiplicative order only for roots of unity; general
        # inversion is not needed by any caller.
        raise NotImplementedError("inversion in cyclotomic fields is not supported")

    def is_zero(self, a) -> bool:
        return not any(a)

    def rational_part(self, a):
        """Return the rational value of ``a`` or ``None`` if ``a`` is irrational."""
        if any(a[1:]):
            return None
        return a[0]

    def fmt(self, a) -> str:
        q = self.rational_part(a)
        if q is not None:
            return str(q)
        return "[" + ",".join(str(x) for x in a) + "]"

    def to_json(self, a):
        q = self.rational_part(a)
        return str(q) if q is not None else [str(x) for x in a]

    def __eq__(self, other):
        return isinstance(other, CyclotomicField) and other.r == self.r

    def __hash__(self):
        return hash(("C", self.r))

    def __repr__(self):
        return f"CyclotomicField({self.r})"


QQ = Rationals()
