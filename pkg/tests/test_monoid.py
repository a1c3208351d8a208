from collections import Counter
from itertools import product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from skewprime.errors import InvalidInput, InvalidWord
from skewprime.monoid import (
    KINDS, MonoidSpec, cancellative_at, left_divides, right_divides, side_ideal_compare,
    unique_products, up_search,
)

SPECS = {
    "free": MonoidSpec("free", ("x", "y")),
    "free-commutative": MonoidSpec("free-commutative", ("x", "y")),
    "natural": MonoidSpec("natural"),
    "integers": MonoidSpec("integers"),
    "builtin-x2y2": MonoidSpec("builtin-x2y2"),
    "builtin-heisenberg": MonoidSpec("builtin-heisenberg"),
    "builtin-heisenberg-zinv": MonoidSpec("builtin-heisenberg-zinv"),
}


def symbol_lists(spec):
    gens = [(k, 1) for k in range(len(spec.alphabet))]
    gens += [(k, -1) for k in range(len(spec.alphabet)) if spec.has_inverse(k)]
    return st.lists(st.sampled_from(gens), max_size=6)


@st.composite
def kind_and_words(draw, n=3):
    kind = draw(st.sampled_from(sorted(SPECS)))
    spec = SPECS[kind]
    return spec, [spec.normalize(draw(symbol_lists(spec))) for _ in range(n)]


@given(kind_and_words(1))
def test_normal_form_idempotent(case):
    spec, (w,) = case
    assert spec.normalize(spec.symbols(w)) == w
    assert spec.parse(spec.fmt(w)) == w


@given(kind_and_words(3))
def test_associativity(case):
    spec, (a, b, c) = case
    assert spec.mul(spec.mul(a, b), c) == spec.mul(a, spec.mul(b, c))


@pytest.mark.parametrize("kind", ["free", "free-commutative", "natural", "integers",
                                  "builtin-heisenberg", "builtin-heisenberg-zinv",
                                  "builtin-x2y2"])
def test_cancellative_kinds(kind):
    assert cancellative_at(SPECS[kind], 3) is None


def test_x2y2_relations():
    m = SPECS["builtin-x2y2"]
    x, y = m.generators()
    assert m.mul(x, y) == m.mul(y, x)
    assert m.mul(x, x) == m.mul(y, y)
    assert m.parse("yy") == m.parse("x^2")


def test_heisenberg_relation():
    m = SPECS["builtin-heisenberg"]
    assert m.parse("yx") == m.parse("xyz")
    assert m.parse("zx") == m.parse("xz")


@given(kind_and_words(0), st.data())
def test_unique_products_against_multiplicity(case, data):
    spec, _ = case
    pool = spec.words_up_to(2)
    X = data.draw(st.lists(st.sampled_from(pool), min_size=1, max_size=4, unique=True))
    Y = data.draw(st.lists(st.sampled_from(pool), min_size=1, max_size=4, unique=True))
    counts = Counter(spec.mul(x, y) for x, y in product(X, Y))
    expected = [(x, y) for x, y in product(X, Y) if counts[spec.mul(x, y)] == 1]
    assert unique_products(spec, X, Y) == expected


def test_unique_products_examples():
    m = SPECS["builtin-x2y2"]
    xy = [m.parse("x"), m.parse("y")]
    assert unique_products(m, xy, xy) == []
    f = SPECS["free"]
    xy = [f.parse("x"), f.parse("y")]
    assert len(unique_products(f, xy, xy)) == 4


def test_up_search():
    v = up_search(SPECS["builtin-x2y2"], 2, 2)
    assert v.refuted and v.data == {"X": ["x", "y"], "Y": ["x", "y"]}
    assert up_search(SPECS["free"], 2, 1).undecided


def test_side_ideals():
    h = SPECS["builtin-heisenberg"]
    v = side_ideal_compare(h, h.parse("x"), 3)
    assert v.refuted and v.data["product"] == "xy" and v.data["side"] == "Gg"
    assert side_ideal_compare(SPECS["builtin-heisenberg-zinv"], h.parse("x"), 3).proven
    assert side_ideal_compare(SPECS["natural"], (1,), 3).proven


@given(kind_and_words(2))
def test_divisors_solve_their_equation(case):
    spec, (g, h) = case
    gh = spec.mul(g, h)
    w = left_divides(spec, g, gh)
    assert w is not None and spec.mul(g, w) == gh
    hg = spec.mul(h, g)
    w = right_divides(spec, g, hg)
    assert w is not None and spec.mul(w, g) == hg


def test_bad_inputs():
    with pytest.raises(InvalidInput):
        MonoidSpec("group")
    with pytest.raises(InvalidWord):
        SPECS["natural"].parse("x^-1")
    with pytest.raises(InvalidWord):
        SPECS["free"].check((5,))
    assert set(SPECS) == set(KINDS)
