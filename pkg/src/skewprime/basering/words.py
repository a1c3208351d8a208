"""Noncommutative monomial algebras presented by forbidden adjacent letters.

Letters are ``(family, index)`` pairs such as ``("s", 3)``.  A rule
``(left, right, rel)`` kills the product of a ``left`` letter with index i
followed by a ``right`` letter with index j whenever ``i rel j``.  Since all
relations are monomial of degree two, a word is zero exactly when one of its
adjacent letter pairs is forbidden, and words that survive form a basis.
"""
from __future__ import annotations

import re
from dataclasses import dataclass

from ..errors import InvalidInput, InvalidWord, UnsupportedIdealClass
from .fields import QQ
from .predicates import (
    FALSE,
    TRUE,
    Cmp,
    IndexMap,
    compact,
    Pred,
    conj,
    disj,
    implies,
    maps_equal,
    window,
)

Letter = tuple  # (family, index)
Word = tuple  # tuple of letters

_RELS = ("le", "lt", "eq", "ne", "ge", "gt", "any")
_REL_FN = {
    "le": lambda i, j: i <= j,
    "lt": lambda i, j: i < j,
    "eq": lambda i, j: i == j,
    "ne": lambda i, j: i != j,
    "ge": lambda i, j: i >= j,
    "gt": lambda i, j: i > j,
    "any": lambda i, j: True,
}
# i rel j, seen as a predicate on j for fixed i
_AS_RIGHT = {"le": "ge", "lt": "gt", "eq": "eq", "ne": "ne", "ge": "le", "gt": "lt"}


@dataclass(frozen=True)
class Rule:
    left: str
    right: str
    rel: str

    def __post_init__(self):
        if self.rel not in _RELS:
            raise InvalidInput(f"unknown rule relation {self.rel!r}")

    def kills(self, a: Letter, b: Letter) -> bool:
        return a[0] == self.left and b[0] == self.right and _REL_FN[self.rel](a[1], b[1])

    def right_pred(self, i: int) -> Pred:
        """Indices j with ``left_i right_j`` forbidden."""
        return TRUE if self.rel == "any" else Cmp(_AS_RIGHT[self.rel], i)

    def left_pred(self, j: int) -> Pred:
        """Indices i with ``left_i right_j`` forbidden."""
        return TRUE if self.rel == "any" else Cmp(self.rel, j)

    def to_json(self):
        return {"left": self.left, "right": self.right, "rel": self.rel}


def letter_str(a: Letter) -> str:
    return f"{a[0]}{a[1]}" if a[1] >= 0 else f"{a[0]}[{a[1]}]"


def word_str(w: Word) -> str:
    return "*".join(letter_str(a) for a in w) if w else "1"


_LETTER_RE = re.compile(r"([A-Za-z]+)\[?(-?\d+)\]?")


@dataclass(frozen=True)
class WPoly:
    terms: tuple  # ((word, coeff), ...) sorted by (length, word)

    def is_zero(self) -> bool:
        return not self.terms

    def words(self):
        return [w for w, _ in self.terms]

    def constant_term(self):
        for w, c in self.terms:
            if not w:
                return c
        return 0

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for w, c in self.terms:
            ws = word_str(w)
            if ws == "1":
                parts.append(str(c))
            elif c == 1:
                parts.append(ws)
            elif c == -1:
                parts.append("-" + ws)
            else:
                parts.append(f"{c}*{ws}")
        return " + ".join(parts).replace("+ -", "- ")

    def to_json(self):
        return str(self)


@dataclass(frozen=True)
class WordEndo:
    """Letter substitution ``(f, i) -> (f, maps[f](i))``."""

    maps: tuple  # ((family, IndexMap), ...)

    @staticmethod
    def shift(families, offset: int) -> "WordEndo":
        return WordEndo(tuple((f, IndexMap.shift(offset)) for f in families))

    def index_map(self, family: str) -> IndexMap:
        for f, m in self.maps:
            if f == family:
                return m
        return IndexMap.identity()

    def letter(self, a: Letter) -> Letter:
        return (a[0], self.index_map(a[0])(a[1]))

    def __str__(self):
        return "; ".join(f"{f}: {m}" for f, m in self.maps)

    def to_json(self):
        return {f: m.to_json() for f, m in self.maps}


@dataclass(frozen=True)
class WordIdeal:
    """Two-sided ideal spanned by the words containing a generating letter
    or a generating word as a factor."""

    kind: str  # "zero" | "unit" | "letters"
    letters: tuple = ()  # ((family, Pred), ...)
    words: frozenset = frozenset()

    @staticmethod
    def zero() -> "WordIdeal":
        return WordIdeal("zero")

    @staticmethod
    def unit() -> "WordIdeal":
        return WordIdeal("unit")

    @staticmethod
    def of_letters(letters: dict, words=()) -> "WordIdeal":
        return WordIdeal("letters", tuple(sorted(letters.items())), frozenset(words))

    def letter_pred(self, family: str) -> Pred:
        for f, p in self.letters:
            if f == family:
                return p
        return FALSE

    def preds(self):
        return [p for _, p in self.letters]

    def __str__(self):
        if self.kind == "zero":
            return "0"
        if self.kind == "unit":
            return "(1)"
        parts = [f"{f}_i [{p}]" for f, p in self.letters]
        parts += [word_str(w) for w in sorted(self.words)]
        return "<" + ", ".join(parts) + ">"

    def to_json(self):
        if self.kind != "letters":
            return self.kind
        out = {"letters": {f: p.to_json() for f, p in self.letters}}
        if self.words:
            out["words"] = [word_str(w) for w in sorted(self.words)]
        return out


@dataclass(frozen=True)
class WordAlgebra:
    field: object = QQ
    families: tuple = ("s", "t")
    domain: Pred = TRUE
    rules: tuple = ()

    @property
    def name(self) -> str:
        return "F<" + ",".join(f"{f}_i" for f in self.families) + f" : {self.domain}>"

    # words ---------------------------------------------------------------
    def kills(self, a: Letter, b: Letter) -> bool:
        return any(r.kills(a, b) for r in self.rules)

    def is_zero_word(self, w: Word) -> bool:
        return any(self.kills(w[k], w[k + 1]) for k in range(len(w) - 1))

    def check_letter(self, a: Letter) -> Letter:
        if a[0] not in self.families or not self.domain.holds(a[1]):
            raise InvalidWord(f"{letter_str(a)} is not a letter of {self.name}")
        return a

    def parse_word(self, text: str) -> Word:
        text = text.strip()
        if text in ("", "1", "e"):
            return ()
        out = []
        for part in text.replace(" ", "").split("*"):
            m = _LETTER_RE.fullmatch(part)
            if not m:
                raise InvalidWord(f"bad letter {part!r}")
            out.append(self.check_letter((m.group(1), int(m.group(2)))))
        return tuple(out)

    def word(self, w) -> WPoly:
        if isinstance(w, str):
            w = self.parse_word(w)
        return self._norm({tuple(w): self.field.one})

    def _norm(self, d: dict) -> WPoly:
        items = [(w, c) for w, c in d.items() if not self.field.is_zero(c) and not self.is_zero_word(w)]
        return WPoly(tuple(sorted(items, key=lambda wc: (len(wc[0]), wc[0]))))

    # ring interface ------------------------------------------------------
    def zero(self) -> WPoly:
        return WPoly(())

    def one(self) -> WPoly:
        return self.const(1)

    def const(self, c) -> WPoly:
        return self._norm({(): self.field.coerce(c)})

    def add(self, a: WPoly, b: WPoly) -> WPoly:
        d = dict(a.terms)
        for w, c in b.terms:
            d[w] = self.field.add(d.get(w, self.field.zero), c)
        return self._norm(d)

    def neg(self, a: WPoly) -> WPoly:
        return WPoly(tuple((w, self.field.neg(c)) for w, c in a.terms))

    def scale(self, c, a: WPoly) -> WPoly:
        return self._norm({w: self.field.mul(c, x) for w, x in a.terms})

    def mul(self, a: WPoly, b: WPoly) -> WPoly:
        d: dict = {}
        for w1, c1 in a.terms:
            for w2, c2 in b.terms:
                if w1 and w2 and self.kills(w1[-1], w2[0]):
                    continue
                w = w1 + w2
                d[w] = self.field.add(d.get(w, self.field.zero), self.field.mul(c1, c2))
        return self._norm(d)

    def is_zero(self, a: WPoly) -> bool:
        return a.is_zero()

    def fmt(self, a: WPoly) -> str:
        return str(a)

    # endomorphisms -------------------------------------------------------
    def check_endo(self, sigma: WordEndo) -> WordEndo:
        """Every forbidden pair must map to a forbidden pair and letters must
        stay in the index domain.  Decided on the decision window of the
        maps, rule constants and domain."""
        maps = [m for _, m in sigma.maps]
        if any(m.is_table for m in maps):
            return sigma
        preds = [self.domain]
        w = (maps[0].decision_window(*maps[1:], preds=preds) if maps else window(self.domain))
        for f in self.families:
            if not implies(self.domain, sigma.index_map(f).pull(self.domain)):
                raise InvalidInput(f"letter map for {f} leaves the index domain")
        for r in self.rules:
            for i in w:
                for j in w:
                    if not (self.domain.holds(i) and self.domain.holds(j)):
                        continue
                    a, b = (r.left, i), (r.right, j)
                    if r.kills(a, b) and not self.kills(sigma.letter(a), sigma.letter(b)):
                        raise InvalidInput(
                            f"letter map does not preserve the relation {letter_str(a)}*{letter_str(b)} = 0")
        return sigma

    def apply(self, sigma: WordEndo, a: WPoly) -> WPoly:
        d: dict = {}
        for w, c in a.terms:
            img = tuple(sigma.letter(x) for x in w)
            d[img] = self.field.add(d.get(img, self.field.zero), c)
        return self._norm(d)

    def compose(self, outer: WordEndo, inner: WordEndo) -> WordEndo:
        return WordEndo(tuple((f, outer.index_map(f).then(inner.index_map(f))) for f in self.families))

    def identity(self) -> WordEndo:
        return WordEndo(tuple((f, IndexMap.identity()) for f in self.families))

    def endo_equal_exact(self, a: WordEndo, b: WordEndo) -> bool:
        return all(maps_equal(a.index_map(f), b.index_map(f), self.domain) for f in self.families)

    def image_pred(self, sigma: WordEndo, family: str) -> Pred | None:
        img = sigma.index_map(family).image_pred(self.domain)
        return None if img is None else conj(img, self.domain)

    # ideals --------------------------------------------------------------
    def word_in(self, ideal: WordIdeal, w: Word) -> bool:
        if ideal.kind == "unit":
            return True
        if ideal.kind == "zero":
            return False
        if any(ideal.letter_pred(a[0]).holds(a[1]) for a in w):
            return True
        n = len(w)
        return any(w[k:k + len(u)] == u for u in ideal.words for k in range(n - len(u) + 1))

    def contains(self, ideal: WordIdeal, r: WPoly) -> bool:
        return all(self.word_in(ideal, w) for w, _ in r.terms)

    def reduce(self, ideal: WordIdeal, r: WPoly) -> WPoly:
        return WPoly(tuple((w, c) for w, c in r.terms if not self.word_in(ideal, w)))

    def times_letter_pred(self, ideal: WordIdeal, w: Word, family: str) -> Pred:
        """Indices j with ``w * (family, j)`` zero or inside ``ideal``."""
        if self.word_in(ideal, w):
            return TRUE
        parts = [ideal.letter_pred(family)] if ideal.kind == "letters" else []
        if ideal.kind == "unit":
            return TRUE
        if w:
            last = w[-1]
            parts += [r.right_pred(last[1]) for r in self.rules
                      if r.left == last[0] and r.right == family]
        return disj(*parts)

    def letter_times_pred(self, ideal: WordIdeal, family: str, w: Word) -> Pred:
        """Indices j with ``(family, j) * w`` zero or inside ``ideal``."""
        if self.word_in(ideal, w):
            return TRUE
        if ideal.kind == "unit":
            return TRUE
        parts = [ideal.letter_pred(family)] if ideal.kind == "letters" else []
        if w:
            first = w[0]
            parts += [r.left_pred(first[1]) for r in self.rules
                      if r.left == family and r.right == first[0]]
        return disj(*parts)

    def _letters_only(self, ideal: WordIdeal) -> bool:
        return ideal.kind != "letters" or not ideal.words

    def preimage(self, sigma: WordEndo, ideal: WordIdeal) -> WordIdeal:
        if ideal.kind != "letters":
            return ideal
        if ideal.words:
            raise UnsupportedIdealClass("preimages of ideals with word generators")
        return self.restrict(WordIdeal.of_letters(
            {f: sigma.index_map(f).pull(ideal.letter_pred(f)) for f in self.families}))

    def restrict(self, ideal: WordIdeal) -> WordIdeal:
        if ideal.kind != "letters":
            return ideal
        letters = {f: compact(conj(p, self.domain)) for f, p in ideal.letters}
        letters = {f: p for f, p in letters.items() if p != FALSE}
        if not letters and not ideal.words:
            return WordIdeal.zero()
        return WordIdeal.of_letters(letters, ideal.words)

    def _subset(self, a: WordIdeal, b: WordIdeal) -> bool:
        if a.kind == "zero" or b.kind == "unit":
            return True
        if a.kind == "unit" or b.kind == "zero":
            return False
        if not (self._letters_only(a) and self._letters_only(b)):
            raise UnsupportedIdealClass("relations between ideals with word generators")
        return all(implies(a.letter_pred(f), b.letter_pred(f), self.domain) for f in self.families)

    def relate(self, a: WordIdeal, b: WordIdeal) -> str:
        ab, ba = self._subset(a, b), self._subset(b, a)
        if ab and ba:
            return "equal"
        if ab:
            return "subset"
        if ba:
            return "superset"
        return "incomparable"

    def intersect(self, a: WordIdeal, b: WordIdeal) -> WordIdeal:
        rel = self.relate(a, b)
        if rel in ("subset", "equal"):
            return a
        if rel == "superset":
            return b
        raise UnsupportedIdealClass("intersection of incomparable word-algebra ideals")

    def augmentation(self) -> WordIdeal:
        return WordIdeal.of_letters({f: self.domain for f in self.families})
