"""Finitely presented monoids with normal forms.

Every kind stores elements in a canonical form, so equality of elements is
equality of Python values:

* ``free``: tuple of generator positions;
* ``free-commutative``, ``natural``, ``integers``: exponent vectors;
* ``builtin-x2y2`` (xy = yx, x^2 = y^2): ``(a, e)`` standing for x^a y^e, e in {0, 1};
* ``builtin-heisenberg`` (z central, yx = xyz): ``(a, b, c)`` for x^a y^b z^c,
  with c allowed negative in the ``-zinv`` variant.
"""
from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass
from itertools import combinations, product
from math import comb

from .errors import InvalidInput, InvalidWord, ResourceLimit
from .verdict import Verdict, proven, refuted, undecided

KINDS = (
    "free",
    "free-commutative",
    "natural",
    "integers",
    "builtin-x2y2",
    "builtin-heisenberg",
    "builtin-heisenberg-zinv",
)
_DEFAULT_ALPHABET = {
    "natural": ("x",),
    "integers": ("x",),
    "builtin-x2y2": ("x", "y"),
    "builtin-heisenberg": ("x", "y", "z"),
    "builtin-heisenberg-zinv": ("x", "y", "z"),
}

Word = tuple


@dataclass(frozen=True)
class MonoidSpec:
    kind: str
    alphabet: tuple = ()

    def __post_init__(self):
        if self.kind not in KINDS:
            raise InvalidInput(f"unknown monoid kind {self.kind!r}")
        alpha = tuple(self.alphabet) or _DEFAULT_ALPHABET.get(self.kind, ())
        if self.kind in _DEFAULT_ALPHABET and alpha != _DEFAULT_ALPHABET[self.kind]:
            if len(alpha) != len(_DEFAULT_ALPHABET[self.kind]):
                raise InvalidInput(f"{self.kind} has generators {_DEFAULT_ALPHABET[self.kind]}")
        if not alpha:
            raise InvalidInput(f"{self.kind} needs a nonempty alphabet")
        if len(set(alpha)) != len(alpha):
            raise InvalidInput("repeated generator names")
        for a in alpha:
            if not re.fullmatch(r"[A-Za-z][A-Za-z_]*", a) or a == "e":
                raise InvalidInput(f"bad generator name {a!r}")
        object.__setattr__(self, "alphabet", alpha)

    # structure -------------------------------------------------------------
    @property
    def is_commutative(self) -> bool:
        return self.kind in ("free-commutative", "natural", "integers", "builtin-x2y2")

    @property
    def is_heisenberg(self) -> bool:
        return self.kind.startswith("builtin-heisenberg")

    def identity(self) -> Word:
        if self.kind == "free":
            return ()
        if self.kind == "builtin-x2y2":
            return (0, 0)
        if self.is_heisenberg:
            return (0, 0, 0)
        return (0,) * len(self.alphabet)

    def generator(self, name: str, inverse: bool = False) -> Word:
        try:
            k = self.alphabet.index(name)
        except ValueError:
            raise InvalidWord(f"unknown generator {name!r}") from None
        if inverse and not self.has_inverse(k):
            raise InvalidWord(f"{name} has no inverse in {self.kind}")
        sign = -1 if inverse else 1
        if self.kind == "free":
            return (k,)
        if self.kind == "builtin-x2y2":
            return (1, 0) if k == 0 else (0, 1)
        vec = [0] * len(self.alphabet)
        vec[k] = sign
        return tuple(vec)

    def generators(self) -> list[Word]:
        return [self.generator(a) for a in self.alphabet]

    def has_inverse(self, k: int) -> bool:
        return self.kind == "integers" or (self.kind == "builtin-heisenberg-zinv" and k == 2)

    def mul(self, a: Word, b: Word) -> Word:
        k = self.kind
        if k == "free":
            return a + b
        if k == "builtin-x2y2":
            return (a[0] + b[0] + 2 * (a[1] & b[1]), a[1] ^ b[1])
        if self.is_heisenberg:
            return (a[0] + b[0], a[1] + b[1], a[2] + b[2] + a[1] * b[0])
        return tuple(x + y for x, y in zip(a, b))

    def power(self, a: Word, n: int) -> Word:
        out = self.identity()
        for _ in range(n):
            out = self.mul(out, a)
        return out

    def check(self, w: Word) -> Word:
        """Raise InvalidWord unless ``w`` is a normal form of this monoid."""
        ok = isinstance(w, tuple)
        if ok and self.kind == "free":
            ok = all(isinstance(x, int) and 0 <= x < len(self.alphabet) for x in w)
        elif ok and self.kind == "builtin-x2y2":
            ok = len(w) == 2 and w[0] >= 0 and w[1] in (0, 1)
        elif ok and self.is_heisenberg:
            ok = len(w) == 3 and w[0] >= 0 and w[1] >= 0 and (
                w[2] >= 0 or self.kind.endswith("zinv"))
        elif ok:
            ok = len(w) == len(self.alphabet) and (self.kind == "integers" or all(x >= 0 for x in w))
        if not ok:
            raise InvalidWord(f"{w!r} is not a normal form of {self.kind}")
        return w

    # normal forms as symbol sequences --------------------------------------
    def symbols(self, w: Word) -> tuple:
        """The normal-form word as a sequence of (generator, +-1) symbols."""
        if self.kind == "free":
            return tuple((k, 1) for k in w)
        if self.kind == "builtin-x2y2":
            return ((0, 1),) * w[0] + ((1, 1),) * w[1]
        out = []
        for k, e in enumerate(w):
            out += [(k, 1 if e > 0 else -1)] * abs(e)
        return tuple(out)

    def normalize(self, symbols) -> Word:
        out = self.identity()
        for k, s in symbols:
            out = self.mul(out, self.generator(self.alphabet[k], inverse=s < 0))
        return out

    def length(self, w: Word) -> int:
        return len(self.symbols(w))

    def sort_key(self, w: Word):
        """Length-lexicographic order by generator position."""
        syms = self.symbols(w)
        return (len(syms), tuple((k, -s) for k, s in syms))

    def fmt(self, w: Word) -> str:
        syms = self.symbols(w)
        if not syms:
            return "e"
        if self.kind == "free":
            sep = "" if all(len(a) == 1 for a in self.alphabet) else "*"
            return sep.join(self.alphabet[k] for k, _ in syms)
        parts = []
        runs = []
        for k, s in syms:
            if runs and runs[-1][0] == k and runs[-1][1] == s:
                runs[-1][2] += 1
            else:
                runs.append([k, s, 1])
        for k, s, n in runs:
            e = s * n
            parts.append(self.alphabet[k] if e == 1 else f"{self.alphabet[k]}^{e}")
        sep = "" if all(len(a) == 1 for a in self.alphabet) else "*"
        return sep.join(parts)

    def parse(self, text: str) -> Word:
        """Parse ``e``, ``xyyx``, ``x^2 y``, ``x*y^-1`` and the like."""
        text = str(text).strip()
        if text in ("", "e", "1"):
            return self.identity()
        names = sorted(self.alphabet, key=len, reverse=True)
        pat = re.compile(r"\s*\*?\s*(" + "|".join(map(re.escape, names)) + r")(\^(-?\d+))?")
        pos, out = 0, self.identity()
        while pos < len(text):
            m = pat.match(text, pos)
            if not m or m.end() == pos:
                raise InvalidWord(f"cannot parse {text!r} at position {pos}")
            e = int(m.group(3)) if m.group(3) else 1
            gen = self.generator(m.group(1), inverse=e < 0)
            out = self.mul(out, self.power(gen, abs(e)))
            pos = m.end()
        return out

    # enumeration -----------------------------------------------------------
    def words_up_to(self, n: int) -> list[Word]:
        """All normal forms of length at most ``n`` in sort order."""
        k = self.kind
        g = len(self.alphabet)
        if k == "free":
            out = [tuple(p) for L in range(n + 1) for p in product(range(g), repeat=L)]
        elif k == "builtin-x2y2":
            out = [(a, e) for e in (0, 1) for a in range(n + 1) if a + e <= n]
        elif k == "integers":
            out = [(i,) for i in range(-n, n + 1)]
        elif self.is_heisenberg:
            cs = range(-n, n + 1) if k.endswith("zinv") else range(n + 1)
            out = [(a, b, c) for a in range(n + 1) for b in range(n + 1) for c in cs
                   if a + b + abs(c) <= n]
        else:
            out = [v for v in product(range(n + 1), repeat=g) if sum(v) <= n]
        return sorted(out, key=self.sort_key)

    def words_of_length(self, n: int) -> list[Word]:
        return [w for w in self.words_up_to(n) if self.length(w) == n]

    def to_json(self):
        return {"kind": self.kind, "alphabet": list(self.alphabet)}


def unique_products(spec: MonoidSpec, X, Y) -> list[tuple[Word, Word]]:
    """Pairs (x, y) whose product is hit by no other pair of X x Y."""
    X, Y = list(dict.fromkeys(X)), list(dict.fromkeys(Y))
    if not X or not Y:
        raise InvalidInput("X and Y must be nonempty")
    for w in X + Y:
        spec.check(w)
    counts = Counter(spec.mul(x, y) for x in X for y in Y)
    return [(x, y) for x in X for y in Y if counts[spec.mul(x, y)] == 1]


def up_search(spec: MonoidSpec, set_size_bound: int, word_length_bound: int,
              limit: int = 2_000_000) -> Verdict:
    """Look for finite X, Y without a unique product among short words."""
    if set_size_bound < 1 or word_length_bound < 1:
        raise InvalidInput("bounds must be at least 1")
    words = spec.words_up_to(word_length_bound)
    n_sets = sum(comb(len(words), k) for k in range(1, set_size_bound + 1))
    if n_sets * n_sets > limit:
        raise ResourceLimit(f"{n_sets}^2 set pairs exceed the search limit {limit}")
    subsets = [c for k in range(1, set_size_bound + 1) for c in combinations(words, k)]
    # smaller pairs first so the reported witness is minimal
    pairs = sorted(product(subsets, subsets), key=lambda xy: (max(len(xy[0]), len(xy[1])),
                                                              len(xy[0]) + len(xy[1])))
    for X, Y in pairs:
        if not unique_products(spec, X, Y):
            return refuted("no unique product", X=[spec.fmt(x) for x in X],
                           Y=[spec.fmt(y) for y in Y])
    return undecided("no failure among the enumerated sets", bound=word_length_bound,
                     set_size_bound=set_size_bound, pairs_checked=len(pairs), failures=0)


def left_divides(spec: MonoidSpec, g: Word, target: Word) -> Word | None:
    """A w with g*w == target, or None."""
    return _solve(spec, g, target, side="left")


def right_divides(spec: MonoidSpec, g: Word, target: Word) -> Word | None:
    """A w with w*g == target, or None."""
    return _solve(spec, g, target, side="right")


def _solve(spec, g, target, side):
    k = spec.kind
    if k == "free":
        n = len(g)
        if side == "left":
            return target[n:] if target[:n] == g else None
        return target[:len(target) - n] if n <= len(target) and target[len(target) - n:] == g else None
    if spec.is_heisenberg:
        a, b = target[0] - g[0], target[1] - g[1]
        if a < 0 or b < 0:
            return None
        # g*w: c_t = c_g + c + b_g*a ;  w*g: c_t = c + c_g + b*a_g
        c = target[2] - g[2] - (g[1] * a if side == "left" else b * g[0])
        if c < 0 and not k.endswith("zinv"):
            return None
        return (a, b, c)
    # commutative kinds: search the bounded candidates of the right length
    n = spec.length(target)
    for w in spec.words_up_to(n + (spec.length(g) if k == "integers" else 0)):
        if spec.mul(g, w) == target:
            return w
    return None


def side_ideal_compare(spec: MonoidSpec, g: Word, length_bound: int) -> Verdict:
    """Test gh in Gg and hg in gG for all h up to ``length_bound``."""
    spec.check(g)
    if spec.is_commutative:
        return proven("commutative monoid: Gg = gG with w = h", certificate="commutativity")
    if spec.kind == "builtin-heisenberg-zinv":
        # the x and y exponents of gh and hg dominate those of g; z is free
        return proven("x and y exponents add, the z exponent is unconstrained",
                      certificate="heisenberg-linear")
    for h in spec.words_up_to(length_bound):
        gh, hg = spec.mul(g, h), spec.mul(h, g)
        if right_divides(spec, g, gh) is None:
            return refuted(f"{spec.fmt(g)}{spec.fmt(h)} has no representation w{spec.fmt(g)}",
                           g=spec.fmt(g), h=spec.fmt(h), product=spec.fmt(gh), side="Gg")
        if left_divides(spec, g, hg) is None:
            return refuted(f"{spec.fmt(h)}{spec.fmt(g)} has no representation {spec.fmt(g)}w",
                           g=spec.fmt(g), h=spec.fmt(h), product=spec.fmt(hg), side="gG")
    if spec.length(g) == 0:
        return proven("g is the identity")
    return undecided("every tested h has witnesses on both sides", bound=length_bound)


def cancellative_at(spec: MonoidSpec, bound: int) -> tuple[Word, Word, Word] | None:
    """A failure (a, b, b') of left or right cancellation among short words."""
    words = spec.words_up_to(bound)
    for a in words:
        seen_l, seen_r = {}, {}
        for b in words:
            ab, ba = spec.mul(a, b), spec.mul(b, a)
            if ab in seen_l:
                return a, seen_l[ab], b
            if ba in seen_r:
                return a, seen_r[ba], b
            seen_l[ab], seen_r[ba] = b, b
    return None
