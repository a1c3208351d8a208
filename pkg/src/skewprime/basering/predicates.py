"""Predicates on integer indices and piecewise affine index maps.

Every predicate here is a boolean combination of threshold comparisons,
congruences and finite sets.  Outside the interval spanned by its constants
such a predicate depends only on the residue of the index modulo the lcm of
its moduli, so any question about it (emptiness, containment, equality) is
settled exactly by looking at a finite window.  The same holds for
piecewise affine maps whose guards are such predicates.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import lcm
from typing import Iterable

from ..errors import InvalidInput

_OPS = {
    "ge": lambda i, c: i >= c,
    "gt": lambda i, c: i > c,
    "le": lambda i, c: i <= c,
    "lt": lambda i, c: i < c,
    "eq": lambda i, c: i == c,
    "ne": lambda i, c: i != c,
}
_FLIP = {"ge": "le", "le": "ge", "gt": "lt", "lt": "gt", "eq": "eq", "ne": "ne"}
_SYM = {"ge": ">=", "gt": ">", "le": "<=", "lt": "<", "eq": "==", "ne": "!="}


class Pred:
    def holds(self, i: int) -> bool:
        raise NotImplementedError

    def constants(self) -> set[int]:
        return set()

    def moduli(self) -> set[int]:
        return set()

    def compose(self, a: int, b: int) -> "Pred":
        """The predicate ``i -> self(a*i + b)``."""
        raise NotImplementedError

    def __and__(self, other):
        return conj(self, other)

    def __or__(self, other):
        return disj(self, other)

    def __invert__(self):
        return negate(self)


@dataclass(frozen=True)
class Const(Pred):
    value: bool

    def holds(self, i):
        return self.value

    def compose(self, a, b):
        return self

    def __str__(self):
        return "true" if self.value else "false"

    def to_json(self):
        return self.value


TRUE = Const(True)
FALSE = Const(False)


def _floordiv(x, a):
    return x // a


def _ceildiv(x, a):
    return -((-x) // a)


@dataclass(frozen=True)
class Cmp(Pred):
    op: str
    c: int

    def __post_init__(self):
        if self.op not in _OPS:
            raise InvalidInput(f"unknown comparison {self.op!r}")

    def holds(self, i):
        return _OPS[self.op](i, self.c)

    def constants(self):
        return {self.c}

    def compose(self, a, b):
        if a == 0:
            return Const(self.holds(b))
        op, c = self.op, self.c
        if a < 0:
            a, b, c, op = -a, -b, -c, _FLIP[op]
        d = c - b  # a*i  op  d
        if op == "ge":
            return Cmp("ge", _ceildiv(d, a))
        if op == "gt":
            return Cmp("ge", _floordiv(d, a) + 1)
        if op == "le":
            return Cmp("le", _floordiv(d, a))
        if op == "lt":
            return Cmp("le", _ceildiv(d, a) - 1)
        if d % a:
            return FALSE if op == "eq" else TRUE
        return Cmp(op, d // a)

    def __str__(self):
        return f"i {_SYM[self.op]} {self.c}"

    def to_json(self):
        return {self.op: self.c}


@dataclass(frozen=True)
class Mod(Pred):
    m: int
    r: int

    def __post_init__(self):
        if self.m < 1:
            raise InvalidInput("modulus must be positive")
        object.__setattr__(self, "r", self.r % self.m)

    def holds(self, i):
        return i % self.m == self.r

    def moduli(self):
        return {self.m}

    def compose(self, a, b):
        hits = [s for s in range(self.m) if (a * s + b) % self.m == self.r]
        if len(hits) == self.m:
            return TRUE
        return disj(*[Mod(self.m, s) for s in hits])

    def __str__(self):
        return f"i = {self.r} mod {self.m}"

    def to_json(self):
        return {"mod": [self.m, self.r]}


@dataclass(frozen=True)
class InSet(Pred):
    values: frozenset

    def holds(self, i):
        return i in self.values

    def constants(self):
        return set(self.values)

    def compose(self, a, b):
        if a == 0:
            return Const(b in self.values)
        return in_set((s - b) // a for s in self.values if (s - b) % a == 0)

    def __str__(self):
        return "i in {" + ", ".join(str(v) for v in sorted(self.values)) + "}"

    def to_json(self):
        return {"in": sorted(self.values)}


@dataclass(frozen=True)
class And(Pred):
    parts: tuple

    def holds(self, i):
        return all(p.holds(i) for p in self.parts)

    def constants(self):
        return set().union(*(p.constants() for p in self.parts))

    def moduli(self):
        return set().union(*(p.moduli() for p in self.parts))

    def compose(self, a, b):
        return conj(*[p.compose(a, b) for p in self.parts])

    def __str__(self):
        return "(" + " and ".join(str(p) for p in self.parts) + ")"

    def to_json(self):
        return {"and": [p.to_json() for p in self.parts]}


@dataclass(frozen=True)
class Or(Pred):
    parts: tuple

    def holds(self, i):
        return any(p.holds(i) for p in self.parts)

    def constants(self):
        return set().union(*(p.constants() for p in self.parts))

    def moduli(self):
        return set().union(*(p.moduli() for p in self.parts))

    def compose(self, a, b):
        return disj(*[p.compose(a, b) for p in self.parts])

    def __str__(self):
        return "(" + " or ".join(str(p) for p in self.parts) + ")"

    def to_json(self):
        return {"or": [p.to_json() for p in self.parts]}


@dataclass(frozen=True)
class Not(Pred):
    part: Pred

    def holds(self, i):
        return not self.part.holds(i)

    def constants(self):
        return self.part.constants()

    def moduli(self):
        return self.part.moduli()

    def compose(self, a, b):
        return negate(self.part.compose(a, b))

    def __str__(self):
        return f"not {self.part}"

    def to_json(self):
        return {"not": self.part.to_json()}


def in_set(values: Iterable[int]) -> Pred:
    vals = frozenset(values)
    return InSet(vals) if vals else FALSE


def conj(*parts: Pred) -> Pred:
    flat = []
    for p in parts:
        if p == FALSE:
            return FALSE
        if p == TRUE:
            continue
        flat.extend(p.parts if isinstance(p, And) else [p])
    # keep only the tightest lower and upper threshold
    lows = [p.c for p in flat if isinstance(p, Cmp) and p.op == "ge"]
    highs = [p.c for p in flat if isinstance(p, Cmp) and p.op == "le"]
    if len(lows) > 1 or len(highs) > 1:
        flat = [p for p in flat if not (isinstance(p, Cmp) and p.op in ("ge", "le"))]
        if highs:
            flat.insert(0, Cmp("le", min(highs)))
        if lows:
            flat.insert(0, Cmp("ge", max(lows)))
    if lows and highs and max(lows) > min(highs):
        return FALSE
    out = []
    for p in flat:
        if p not in out:
            out.append(p)
    flat = out
    if not flat:
        return TRUE
    return flat[0] if len(flat) == 1 else And(tuple(flat))


def disj(*parts: Pred) -> Pred:
    flat = []
    for p in parts:
        if p == TRUE:
            return TRUE
        if p == FALSE:
            continue
        flat.extend(p.parts if isinstance(p, Or) else [p])
    out = []
    for p in flat:
        if p not in out:
            out.append(p)
    flat = out
    if not flat:
        return FALSE
    return flat[0] if len(flat) == 1 else Or(tuple(flat))


def negate(p: Pred) -> Pred:
    if isinstance(p, Const):
        return Const(not p.value)
    if isinstance(p, Not):
        return p.part
    return Not(p)


def window(*preds: Pred, extra: Iterable[int] = ()) -> range:
    """A finite index window on which the given predicates are decided."""
    consts = set(extra)
    mods = {1}
    for p in preds:
        consts |= p.constants()
        mods |= p.moduli()
    m = lcm(*mods)
    lo = min(consts, default=0)
    hi = max(consts, default=0)
    return range(lo - 2 * m - 1, hi + 2 * m + 2)


def is_empty(p: Pred) -> bool:
    return not any(p.holds(i) for i in window(p))


def implies(p: Pred, q: Pred, within: Pred = TRUE) -> bool:
    """Exact test of ``within and p  =>  q`` for all integers."""
    return all(q.holds(i) for i in window(p, q, within) if within.holds(i) and p.holds(i))


def equivalent(p: Pred, q: Pred, within: Pred = TRUE) -> bool:
    return implies(p, q, within) and implies(q, p, within)


def counterexample(p: Pred, q: Pred, within: Pred = TRUE) -> int | None:
    """Smallest-magnitude index in ``within and p and not q``, if any."""
    cands = [i for i in window(p, q, within) if within.holds(i) and p.holds(i) and not q.holds(i)]
    return min(cands, key=lambda i: (abs(i), i)) if cands else None


def behaviour_at_infinity(p: Pred, side: int) -> tuple[bool, ...]:
    """Truth values on the residue classes mod M far to the right (side=+1)
    or far to the left (side=-1)."""
    mods = {1} | p.moduli()
    m = lcm(*mods)
    w = window(p)
    base = w.stop if side > 0 else w.start - m
    base -= base % m
    return tuple(p.holds(base + r) for r in range(m))


def size(p: Pred) -> int:
    """Number of nodes in the expression tree."""
    if isinstance(p, (And, Or)):
        return 1 + sum(size(q) for q in p.parts)
    if isinstance(p, Not):
        return 1 + size(p.part)
    return 1


def _tail_class(m: int, residues: list[int], bound: Pred) -> Pred:
    if not residues:
        return FALSE
    if len(residues) == m:
        return bound
    return conj(bound, disj(*[Mod(m, r) for r in residues]))


def compact(p: Pred, limit: int = 12) -> Pred:
    """An equivalent predicate of bounded shape: a periodic pattern on each
    tail plus a finite set in between.  Small predicates are returned as is."""
    if size(p) <= limit:
        return p
    w = window(p)
    m = lcm(*({1} | p.moduli()))
    left = behaviour_at_infinity(p, -1)
    right = behaviour_at_infinity(p, +1)
    # shrink the period to the smallest one both tails respect
    for d in sorted(k for k in range(1, m + 1) if m % k == 0):
        if all(left[r] == left[r % d] and right[r] == right[r % d] for r in range(m)):
            m, left, right = d, left[:d], right[:d]
            break
    lo, hi = w.start, w.stop - 1
    while lo <= hi and p.holds(lo) == left[lo % m]:
        lo += 1
    while hi >= lo and p.holds(hi) == right[hi % m]:
        hi -= 1
    if left == right and lo > hi:
        res = [r for r in range(m) if left[r]]
        return _tail_class(m, res, TRUE)
    middle = [i for i in range(lo, hi + 1) if p.holds(i)]
    return disj(_tail_class(m, [r for r in range(m) if left[r]], Cmp("le", lo - 1)),
                in_set(middle),
                _tail_class(m, [r for r in range(m) if right[r]], Cmp("ge", hi + 1)))


def parse_pred(obj) -> Pred:
    """Build a predicate from its JSON form."""
    if isinstance(obj, bool):
        return Const(obj)
    if not isinstance(obj, dict) or len(obj) != 1:
        raise InvalidInput(f"bad index predicate {obj!r}")
    (key, val), = obj.items()
    if key in _OPS:
        return Cmp(key, int(val))
    if key == "mod":
        return Mod(int(val[0]), int(val[1]))
    if key == "in":
        return in_set(int(v) for v in val)
    if key == "and":
        return conj(*[parse_pred(v) for v in val])
    if key == "or":
        return disj(*[parse_pred(v) for v in val])
    if key == "not":
        return negate(parse_pred(val))
    raise InvalidInput(f"unknown predicate key {key!r}")


def pred_json(p: Pred):
    return p.to_json()


@dataclass(frozen=True)
class Branch:
    guard: Pred
    a: int
    b: int

    def __str__(self):
        lin = f"{self.a}*i" if self.a not in (0, 1, -1) else {0: "", 1: "i", -1: "-i"}[self.a]
        if self.b or not lin:
            lin = f"{lin}{'+' if self.b >= 0 and lin else ''}{self.b}"
        return f"{lin} if {self.guard}"


@dataclass(frozen=True)
class IndexMap:
    """Piecewise affine map Z -> Z; the first branch whose guard holds wins.

    ``table`` maps are known only on ``[-known, known]``; their behaviour
    outside that window is unspecified.
    """

    branches: tuple = ()
    table: tuple = ()  # sorted (index, image) pairs
    known: int | None = None

    @staticmethod
    def shift(c: int) -> "IndexMap":
        return IndexMap((Branch(TRUE, 1, c),))

    @staticmethod
    def identity() -> "IndexMap":
        return IndexMap.shift(0)

    @staticmethod
    def from_table(values: dict[int, int]) -> "IndexMap":
        known = max(abs(k) for k in values) if values else -1
        if set(values) != set(range(-known, known + 1)):
            raise InvalidInput("table index maps must cover a symmetric window")
        return IndexMap(table=tuple(sorted(values.items())), known=known)

    @property
    def is_table(self) -> bool:
        return self.known is not None

    def __call__(self, i: int) -> int:
        if self.is_table:
            d = dict(self.table)
            if i not in d:
                raise InvalidInput(f"index {i} outside the specified window of a table map")
            return d[i]
        for br in self.branches:
            if br.guard.holds(i):
                return br.a * i + br.b
        raise InvalidInput(f"index map undefined at {i}")

    def effective_branches(self):
        """Branches with guards made disjoint (first match semantics)."""
        seen = FALSE
        out = []
        for br in self.branches:
            out.append(Branch(conj(br.guard, negate(seen)), br.a, br.b))
            seen = disj(seen, br.guard)
        return out

    def domain_pred(self) -> Pred:
        return disj(*[br.guard for br in self.branches])

    def pull(self, p: Pred) -> Pred:
        """The predicate ``i -> p(self(i))``."""
        if self.is_table:
            raise InvalidInput("cannot compose predicates with a partially specified map")
        return disj(*[conj(br.guard, p.compose(br.a, br.b)) for br in self.effective_branches()])

    def then(self, inner: "IndexMap") -> "IndexMap":
        """``self ∘ inner``: apply ``inner`` first."""
        if self.is_table or inner.is_table:
            # known only where both factors are; shrink to a symmetric window
            k = min(x.known for x in (self, inner) if x.is_table)
            while k >= 0:
                try:
                    return IndexMap.from_table({i: self(inner(i)) for i in range(-k, k + 1)})
                except InvalidInput:
                    k -= 1
            return IndexMap.from_table({})
        out = []
        for bi in inner.effective_branches():
            for bo in self.effective_branches():
                g = conj(bi.guard, bo.guard.compose(bi.a, bi.b))
                if g != FALSE and not is_empty(g):
                    out.append(Branch(g, bo.a * bi.a, bo.a * bi.b + bo.b))
        return IndexMap(tuple(out))

    def constants(self) -> set[int]:
        out = set()
        for br in self.branches:
            out |= br.guard.constants()
            out.add(br.b)
        return out

    def moduli(self) -> set[int]:
        out = {1}
        for br in self.branches:
            out |= br.guard.moduli()
            if br.a:
                out.add(abs(br.a))
        return out

    def decision_window(self, *others: "IndexMap", preds: Iterable[Pred] = ()) -> range:
        consts, mods = set(), {1}
        for f in (self, *others):
            consts |= f.constants()
            mods |= f.moduli()
        for p in preds:
            consts |= p.constants()
            mods |= p.moduli()
        m = lcm(*mods)
        return range(min(consts, default=0) - 3 * m - 1, max(consts, default=0) + 3 * m + 2)

    def is_affine(self) -> bool:
        return not self.is_table and len(self.branches) == 1 and self.branches[0].guard == TRUE

    def image_pred(self, domain: Pred = TRUE) -> Pred | None:
        """Predicate describing the image of ``domain``, available when every
        slope is +-1."""
        if self.is_table or any(br.a not in (1, -1) for br in self.branches):
            return None
        # j = a*i + b  <=>  i = a*(j - b)
        return disj(*[conj(br.guard, domain).compose(br.a, -br.a * br.b)
                      for br in self.effective_branches()])

    def inverse(self, domain: Pred = TRUE) -> "IndexMap | None":
        """Exact inverse on ``domain`` when the map is a bijection of it with
        unit slopes; ``None`` otherwise."""
        if self.is_table or any(br.a not in (1, -1) for br in self.branches):
            return None
        inv = []
        for br in self.effective_branches():
            g = conj(br.guard, domain).compose(br.a, -br.a * br.b)
            inv.append(Branch(g, br.a, -br.a * br.b))
        candidate = IndexMap(tuple(inv))
        w = self.decision_window(candidate, preds=[domain])
        for j in w:
            if not domain.holds(j):
                continue
            hits = sum(1 for br in inv if br.guard.holds(j))
            if hits != 1:
                return None
            if not domain.holds(self(j)):
                return None
        return candidate

    def __str__(self):
        if self.is_table:
            return f"table on [-{self.known}, {self.known}]"
        if self.is_affine():
            b = self.branches[0]
            return f"i -> {b.a}*i + {b.b}" if b.a != 1 else f"i -> i + {b.b}"
        return "i -> " + "; ".join(str(b) for b in self.branches)

    def to_json(self):
        if self.is_table:
            return {"table": {str(k): v for k, v in self.table}}
        return [{"when": br.guard.to_json(), "map": [br.a, br.b]} for br in self.branches]


def parse_index_map(obj) -> IndexMap:
    if isinstance(obj, dict) and "table" in obj:
        return IndexMap.from_table({int(k): int(v) for k, v in obj["table"].items()})
    if isinstance(obj, dict) and "shift" in obj:
        return IndexMap.shift(int(obj["shift"]))
    if not isinstance(obj, list) or not obj:
        raise InvalidInput(f"bad index map {obj!r}")
    return IndexMap(tuple(
        Branch(parse_pred(br.get("when", True)), int(br["map"][0]), int(br["map"][1])) for br in obj
    ))


def maps_equal(f: IndexMap, g: IndexMap, within: Pred = TRUE) -> bool:
    """Exact equality of two closed-form piecewise affine maps on ``within``."""
    for i in f.decision_window(g, preds=[within]):
        if within.holds(i) and f(i) != g(i):
            return False
    return True


def injective_on(f: IndexMap, domain: Pred) -> tuple[bool, bool]:
    """(injective, exact).  Exact when all slopes are +-1."""
    w = f.decision_window(preds=[domain])
    if any(br.a == 0 for br in f.branches):
        fixed = [i for i in w if domain.holds(i) and any(
            br.a == 0 and br.guard.holds(i) for br in f.effective_branches())]
        if len(fixed) > 1:
            return False, True
    seen = {}
    for i in w:
        if domain.holds(i):
            v = f(i)
            if v in seen:
                return False, True
            seen[v] = i
    exact = all(br.a in (1, -1) for br in f.branches)
    if exact:
        # images of distinct effective branches must be disjoint everywhere
        imgs = [conj(br.guard, domain).compose(br.a, -br.a * br.b) for br in f.effective_branches()]
        for x in range(len(imgs)):
            for y in range(x + 1, len(imgs)):
                if not is_empty(conj(imgs[x], imgs[y])):
                    return False, True
    return True, exact
