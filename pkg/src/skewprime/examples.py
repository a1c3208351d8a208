"""Built-in example scenarios reproduced by ``skewprime repro``."""
from __future__ import annotations

import json
from dataclasses import dataclass
from importlib import resources

from .errors import InvalidInput


@dataclass(frozen=True)
class Example:
    id: str
    group: str
    params: dict
    location: str
    summary: str
    golden: bool = True


CATALOG = [
    Example("affine-a", "affine", {"a": "0", "p": 2}, "affine example, case (a)",
            "a = 0: constant orbit, ann M[x;sigma] = tS"),
    Example("affine-b", "affine", {"r": 3, "p": 2}, "affine example, case (b)",
            "primitive r-th root with p prime to r: core f_{w,p}, period ord_r(p)"),
    Example("affine-c", "affine", {"r": 3, "p": 2, "n": 1}, "affine example, case (c)",
            "primitive p^n r-th root: preperiod n, twist k = n is the first S-prime one"),
    Example("affine-d", "affine", {"a": "2", "p": 2}, "affine example, case (d)",
            "point of infinite orbit: Ass = {0}"),
    Example("prime-not-sprime", "noncommutative", {}, "prime ring that is not S-prime",
            "word algebra with s_i s_j = 0 (i <= j), s_i t_j = 0 (i < j), shift"),
    Example("shift-chain", "chains", {"n": 2}, "M prime but MS has no associated primes",
            "F[t_-n, ...] with shift and I = (t_0, t_1, ...); n may be 'infinity'"),
    Example("squarezero", "chains", {}, "MS prime but M has no associated primes",
            "t_i^2 = 0 over Z-indexed variables with shift"),
    Example("rev-simple", "reversibility", {}, "reversibility needed for invariance (simpler)",
            "Q[t], free monoid, v: t -> t + 1, w: t -> 0"),
    Example("rev-auto", "reversibility", {}, "reversibility needed for invariance (automorphisms)",
            "Z-indexed variables permuted by alpha and beta"),
    Example("rev-comm", "reversibility", {}, "reversibility needed for S-primeness (commutative)",
            "I = (t_i t_j : i != j); computed verdicts only", golden=False),
    Example("up-x2y2", "monoids", {}, "monoid with xy = yx and x^2 = y^2",
            "commutative, torsionfree, cancellative, not unique-product"),
    Example("heisenberg-sides", "monoids", {}, "Heisenberg monoid side ideals",
            "z central, yx = xyz: Gg differs from gG without z^-1"),
]
_BY_ID = {e.id: e for e in CATALOG}
GROUPS = sorted({e.group for e in CATALOG})


def get(example_id: str) -> Example:
    try:
        return _BY_ID[example_id]
    except KeyError:
        raise InvalidInput(f"unknown example {example_id!r}; see `skewprime list`") from None


def resolve_params(example_id: str, overrides: dict) -> dict:
    ex = get(example_id)
    params = dict(ex.params)
    for k, v in overrides.items():
        if v is None:
            continue
        if k not in params:
            raise InvalidInput(f"{example_id} takes no parameter {k!r}")
        params[k] = v
    if example_id == "shift-chain":
        n = str(params["n"])
        params["n"] = "infinity" if n in ("infinity", "inf", "oo") else int(n)
    for k in ("r", "p"):
        if k in params:
            params[k] = int(params[k])
    if "n" in params and example_id != "shift-chain":
        params["n"] = int(params["n"])
    if "a" in params:
        params["a"] = str(params["a"])
    return params


def params_key(params: dict) -> str:
    return ",".join(f"{k}={params[k]}" for k in sorted(params)) or "default"


# ---------------------------------------------------------------------------
# scenario builders

_WORD_RULES = [{"left": "s", "right": "s", "rel": "le"}, {"left": "s", "right": "t", "rel": "lt"}]


def _affine(field, point, p, queries):
    return {
        "schema": 1,
        "ring": {"model": "point", "field": field},
        "monoid": {"kind": "natural"},
        "action": {"x": {"power": p}},
        "ideal": {"vanishing": [point]},
        "query": queries,
    }


def build(example_id: str, params: dict) -> dict:
    P = params
    if example_id == "affine-a":
        sc = _affine("Q", P["a"], P["p"], [
            {"op": "affine-case", "point": P["a"], "p": P["p"]},
            {"op": "sprime", "method": "orbit", "k": 0},
            {"op": "min-twist"},
            {"op": "ass"},
        ])
    elif example_id == "affine-b":
        a = f"zeta({P['r']},1)"
        sc = _affine("cyclotomic-points", a, P["p"], [
            {"op": "affine-case", "point": a, "p": P["p"]},
            {"op": "core"},
            {"op": "ass"},
        ])
    elif example_id == "affine-c":
        a = f"zeta({P['p'] ** P['n'] * P['r']},1)"
        sc = _affine("cyclotomic-points", a, P["p"], [
            {"op": "affine-case", "point": a, "p": P["p"]},
            {"op": "orbit", "point": a},
            {"op": "sprime", "method": "orbit", "k": 0, "title": "sprime k=0"},
            {"op": "sprime", "method": "orbit", "k": P["n"], "title": f"sprime k={P['n']}"},
            {"op": "min-twist"},
            {"op": "ass"},
        ])
    elif example_id == "affine-d":
        sc = _affine("Q", P["a"], P["p"], [
            {"op": "affine-case", "point": P["a"], "p": P["p"]},
            {"op": "orbit", "point": P["a"]},
            {"op": "core"},
            {"op": "ass"},
        ])
    elif example_id == "prime-not-sprime":
        sc = {
            "schema": 1,
            "ring": {"model": "words", "families": ["s", "t"], "domain": {"ge": 0},
                     "rules": _WORD_RULES},
            "monoid": {"kind": "natural"},
            "action": {"x": {"shift": 1}},
            "ideal": "zero",
            "query": [
                {"op": "validate"},
                {"op": "prime", "title": "R prime"},
                {"op": "sprime", "method": "witness", "title": "R S-prime"},
                {"op": "square-zero-product", "element": "s0", "bound": 4,
                 "title": "(Ss0xS)^2=0"},
                {"op": "ann-search", "element": "s0", "twist": "x", "title": "s0 sigma(R)"},
                {"op": "ass", "bound": 2, "title": "Ass"},
            ],
        }
    elif example_id == "shift-chain":
        n = P["n"]
        dom = True if n == "infinity" else {"ge": -n}
        sc = {
            "schema": 1,
            "ring": {"model": "monomial", "domain": dom},
            "monoid": {"kind": "natural"},
            "action": {"x": {"shift": 1}},
            "ideal": {"vars": {"ge": 0}},
            "query": [
                {"op": "prime"},
                {"op": "stable"},
                {"op": "invariant"},
                {"op": "sprime", "method": "orbit", "k": 0},
                {"op": "min-twist"},
                {"op": "ass"},
            ],
        }
    elif example_id == "squarezero":
        sc = {
            "schema": 1,
            "ring": {"model": "monomial", "square_zero": True, "domain": True},
            "monoid": {"kind": "natural"},
            "action": {"x": {"shift": 1}},
            "ideal": "zero",
            "query": [
                {"op": "ann-growth", "samples": 20},
                {"op": "sprime", "method": "certificate", "title": "R_R S-prime"},
                {"op": "sprime", "method": "witness", "title": "violation search"},
            ],
        }
    elif example_id == "rev-simple":
        sc = {
            "schema": 1,
            "ring": {"model": "point", "field": "Q"},
            "monoid": {"kind": "free", "alphabet": ["v", "w"]},
            "action": {"v": {"shift": 1}, "w": {"eval": 0}},
            "ideal": "zero",
            "query": [
                {"op": "validate"},
                {"op": "reversibility"},
                {"op": "sprime", "method": "certificate", "title": "0 S-prime"},
                {"op": "invariant"},
                {"op": "ass", "bound": 2},
            ],
        }
    elif example_id == "rev-auto":
        beta = [
            {"when": {"ge": 0}, "map": [1, 0]},
            {"when": {"and": [{"le": -1}, {"mod": [2, 1]}]}, "map": [1, -2]},
            {"when": {"in": [-2]}, "map": [1, 1]},
            {"when": {"and": [{"le": -4}, {"mod": [2, 0]}]}, "map": [1, 2]},
        ]
        sc = {
            "schema": 1,
            "ring": {"model": "monomial", "domain": True},
            "monoid": {"kind": "free", "alphabet": ["v", "w"]},
            "action": {"v": {"shift": 2}, "w": {"index_map": beta}},
            "ideal": {"vars": {"ge": 0}},
            "query": [
                {"op": "prime"},
                {"op": "stable"},
                {"op": "invariant"},
                {"op": "sprime", "method": "witness", "bound": 3},
            ],
        }
    elif example_id == "rev-comm":
        alpha_w = [
            {"when": {"in": [0]}, "map": [1, 1]},
            {"when": {"and": [{"ge": 1}, {"mod": [2, 1]}]}, "map": [1, 2]},
            {"when": {"and": [{"ge": 2}, {"mod": [2, 0]}]}, "map": [1, -2]},
        ]
        note = "computed verdict; the expected outcome is not hard-coded"
        sc = {
            "schema": 1,
            "ring": {"model": "monomial", "domain": {"ge": 0}},
            "monoid": {"kind": "free", "alphabet": ["v", "w"]},
            "action": {"v": {"shift": 1}, "w": {"index_map": alpha_w}},
            "ideal": {"pairs": [True, True]},
            "query": [
                {"op": "invariant", "note": note},
                {"op": "sprime", "method": "pairs", "mode": "stable", "note": note,
                 "title": "pair criterion"},
                {"op": "sprime", "method": "witness", "bound": 3, "note": note,
                 "title": "sprime"},
            ],
        }
    elif example_id == "up-x2y2":
        sc = {
            "schema": 1,
            "monoid": {"kind": "builtin-x2y2"},
            "query": [
                {"op": "unique-products", "X": ["x", "y"], "Y": ["x", "y"]},
                {"op": "up-check", "set_size": 2, "word_length": 2},
                {"op": "unique-products", "X": ["x", "y"], "Y": ["x", "y"],
                 "monoid": {"kind": "free", "alphabet": ["x", "y"]}},
            ],
        }
    elif example_id == "heisenberg-sides":
        sc = {
            "schema": 1,
            "monoid": {"kind": "builtin-heisenberg"},
            "query": [
                {"op": "side-ideal", "g": "x", "bound": 3},
                {"op": "side-ideal", "g": "x", "bound": 3,
                 "monoid": {"kind": "builtin-heisenberg-zinv"}},
            ],
        }
    else:
        raise InvalidInput(f"unknown example {example_id!r}")
    sc["name"] = f"{example_id} ({params_key(params)})"
    return sc


# ---------------------------------------------------------------------------
# goldens


def load_golden(example_id: str) -> dict:
    path = resources.files("skewprime") / "golden" / f"{example_id}.json"
    if not path.is_file():
        return {}
    return json.loads(path.read_text())


def golden_view(report: dict) -> dict:
    """The part of a report that goldens pin: labels and results per query."""
    if "error" in report:
        return {"error": report["error"]}
    return {"exit_code": report["exit_code"],
            "results": [{k: r[k] for k in ("op", "title", "label", "result") if k in r}
                        for r in report["results"]]}


def diff(expected, actual, path: str = "") -> list[str]:
    out = []
    if isinstance(expected, dict) and isinstance(actual, dict):
        for k in sorted(set(expected) | set(actual)):
            if k not in actual:
                out.append(f"- {path}/{k}: missing")
            elif k not in expected:
                out.append(f"+ {path}/{k}: unexpected")
            else:
                out += diff(expected[k], actual[k], f"{path}/{k}")
    elif isinstance(expected, list) and isinstance(actual, list) and len(expected) == len(actual):
        for i, (a, b) in enumerate(zip(expected, actual)):
            out += diff(a, b, f"{path}/{i}")
    elif expected != actual:
        out.append(f"~ {path}: expected {json.dumps(expected, default=str)}, "
                   f"got {json.dumps(actual, default=str)}")
    return out
