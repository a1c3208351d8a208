"""Scenario files: schema, loading, and execution into JSON reports."""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

import jsonschema

from . import assoc, primecheck
from .basering.fields import QQ, FiniteField
from .basering.monomial import MonomialRing, Pattern, PatternIdeal
from .basering.points import PointEndo, PointIdeal, PointRing, parse_point
from .basering.poly import Poly
from .basering.predicates import IndexMap, parse_index_map, parse_pred
from .basering.words import Rule, WordAlgebra, WordEndo, WordIdeal
from .crossed import CrossedSpec, ann_search, validate
from .errors import AlgebraError, InvalidInput, SchemaError
from .monoid import MonoidSpec, side_ideal_compare, unique_products, up_search
from .pools import DEFAULT_CAP, DEFAULT_DEGREE, DEFAULT_POOL, DEFAULT_WORD_BOUND, element_pool
from .verdict import Verdict

SCHEMA_VERSION = 1

EXIT_OK, EXIT_REFUTED, EXIT_UNDECIDED, EXIT_INPUT = 0, 1, 2, 3

_PRED = {"type": ["object", "boolean"]}
_FIELD = {"oneOf": [
    {"enum": ["Q", "cyclotomic-points"]},
    {"type": "object", "properties": {"finite": {"type": "integer", "minimum": 2}},
     "required": ["finite"], "additionalProperties": False},
]}
_QUERY_OPS = [
    "up-check", "unique-products", "side-ideal", "validate", "prime", "stable", "invariant",
    "core", "reversibility", "sprime", "min-twist", "ass", "affine-case", "orbit",
    "ann-search", "square-zero-product", "ann-growth",
]
_QUERY = {
    "type": "object",
    "properties": {
        "op": {"enum": _QUERY_OPS},
        "title": {"type": "string"},
        "note": {"type": "string"},
        "method": {"enum": ["auto", "orbit", "witness", "pairs", "laurent", "certificate"]},
        "mode": {"enum": ["invariant", "stable"]},
        "k": {"type": "integer", "minimum": 0},
        "p": {"type": "integer", "minimum": 2},
        "point": {"type": ["string", "integer"]},
        "g": {"type": "string"},
        "twist": {"type": "string"},
        "X": {"type": "array", "items": {"type": "string"}, "minItems": 1},
        "Y": {"type": "array", "items": {"type": "string"}, "minItems": 1},
        "set_size": {"type": "integer", "minimum": 1},
        "word_length": {"type": "integer", "minimum": 1},
        "bound": {"type": "integer", "minimum": 0},
        "samples": {"type": "integer", "minimum": 1},
        "element": {},
        "ideal": {},
        "monoid": {"$ref": "#/$defs/monoid"},
    },
    "required": ["op"],
    "additionalProperties": False,
}
SCHEMA: dict[str, Any] = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "$defs": {
        "monoid": {
            "type": "object",
            "properties": {
                "kind": {"enum": ["free", "free-commutative", "natural", "integers",
                                  "builtin-x2y2", "builtin-heisenberg",
                                  "builtin-heisenberg-zinv"]},
                "alphabet": {"type": "array", "items": {"type": "string"}},
            },
            "required": ["kind"],
            "additionalProperties": False,
        },
    },
    "type": "object",
    "properties": {
        "schema": {"const": SCHEMA_VERSION},
        "name": {"type": "string"},
        "ring": {
            "type": "object",
            "properties": {
                "model": {"enum": ["point", "monomial", "words"]},
                "field": _FIELD,
                "square_zero": {"type": "boolean"},
                "domain": _PRED,
                "families": {"type": "array", "items": {"type": "string"}, "minItems": 1},
                "rules": {"type": "array", "items": {
                    "type": "object",
                    "properties": {"left": {"type": "string"}, "right": {"type": "string"},
                                   "rel": {"enum": ["le", "lt", "eq", "ne", "ge", "gt", "any"]}},
                    "required": ["left", "right", "rel"],
                    "additionalProperties": False,
                }},
            },
            "required": ["model"],
            "additionalProperties": False,
        },
        "monoid": {"$ref": "#/$defs/monoid"},
        "action": {"type": "object", "additionalProperties": {}},
        "ideal": {},
        "query": {"oneOf": [_QUERY, {"type": "array", "items": _QUERY, "minItems": 1}]},
        "bounds": {
            "type": "object",
            "properties": {k: {"type": "integer", "minimum": 1}
                           for k in ("pool", "degree", "word_bound", "cap", "bound")},
            "additionalProperties": False,
        },
        "seed": {"type": "integer"},
    },
    "required": ["schema", "monoid", "query"],
    "additionalProperties": False,
}


def validate_schema(obj) -> None:
    v = jsonschema.Draft202012Validator(SCHEMA)
    # unknown keys first: a misspelt key also trips "required" and is the real cause
    errors = sorted(v.iter_errors(obj),
                    key=lambda e: (e.validator != "additionalProperties",
                                   [str(p) for p in e.absolute_path]))
    if errors:
        e = errors[0]
        pointer = "/" + "/".join(str(p) for p in e.absolute_path)
        raise SchemaError(e.message, pointer)


# ---------------------------------------------------------------------------
# building objects from JSON


def _field(obj):
    if obj in (None, "Q", "cyclotomic-points"):
        return QQ
    return FiniteField(int(obj["finite"]))


def build_ring(obj):
    if obj is None:
        return None
    model = obj["model"]
    fld = _field(obj.get("field"))
    dom = parse_pred(obj.get("domain", True))
    if model == "point":
        for k in ("square_zero", "domain", "families", "rules"):
            if k in obj:
                raise SchemaError("not used by the point model", f"/ring/{k}")
        return PointRing(fld, roots=obj.get("field") == "cyclotomic-points")
    if model == "monomial":
        return MonomialRing(fld, bool(obj.get("square_zero", False)), dom)
    rules = tuple(Rule(r["left"], r["right"], r["rel"]) for r in obj.get("rules", []))
    fams = tuple(obj.get("families", ["s", "t"]))
    for r in rules:
        if r.left not in fams or r.right not in fams:
            raise InvalidInput(f"rule {r.left}{r.right} names an unknown letter family")
    return WordAlgebra(fld, fams, dom, rules)


def _coeff(ring, c):
    if isinstance(ring.field, FiniteField):
        return int(c) % ring.field.q
    return Fraction(str(c))


def build_endo(ring, obj):
    if isinstance(ring, PointRing):
        if not isinstance(obj, dict) or len(obj) != 1:
            raise InvalidInput(f"bad endomorphism {obj!r}")
        (key, val), = obj.items()
        if key == "power":
            return PointEndo.power(int(val), ring.field)
        if key == "eval":
            return PointEndo.evaluation(_coeff(ring, val), ring.field)
        if key == "shift":
            return PointEndo.subst(Poly.of([_coeff(ring, val), 1], ring.field))
        if key == "subst":
            return PointEndo.subst(Poly.of([_coeff(ring, c) for c in val], ring.field))
        raise InvalidInput(f"unknown point endomorphism {key!r}")
    if isinstance(ring, MonomialRing):
        if isinstance(obj, dict) and "index_map" in obj:
            return parse_index_map(obj["index_map"])
        return parse_index_map(obj)
    if isinstance(obj, dict) and "shift" in obj:
        return WordEndo.shift(ring.families, int(obj["shift"]))
    if isinstance(obj, dict) and "letters" in obj:
        maps = obj["letters"]
        unknown = set(maps) - set(ring.families)
        if unknown:
            raise InvalidInput(f"unknown letter families {sorted(unknown)}")
        return WordEndo(tuple((f, parse_index_map(maps[f]) if f in maps else IndexMap.identity())
                              for f in ring.families))
    raise InvalidInput(f"bad word-algebra endomorphism {obj!r}")


def build_ideal(ring, obj):
    if obj is None:
        raise InvalidInput("this query needs an ideal")
    if isinstance(ring, PointRing):
        if obj == "zero":
            return PointIdeal.zero()
        if obj == "unit":
            return PointIdeal.unit()
        if isinstance(obj, dict) and set(obj) == {"vanishing"}:
            pts = [ring.check_point(parse_point(a, ring.field)) for a in obj["vanishing"]]
            return PointIdeal.vanishing(pts)
        raise InvalidInput(f"bad point ideal {obj!r}")
    if isinstance(ring, MonomialRing):
        if obj == "zero":
            return PatternIdeal.zero()
        if obj == "unit":
            return PatternIdeal.unit()
        if isinstance(obj, dict) and set(obj) == {"vars"}:
            return ring.restrict(PatternIdeal.vars_where(parse_pred(obj["vars"])))
        if isinstance(obj, dict) and set(obj) == {"pairs"}:
            p, q = obj["pairs"]
            return ring.restrict(PatternIdeal.pair_products(parse_pred(p), parse_pred(q)))
        if isinstance(obj, dict) and set(obj) == {"patterns"}:
            pats = []
            for item in obj["patterns"]:
                (key, val), = item.items()
                if key == "pairs":
                    pats.append(Pattern("pairs", parse_pred(val[0]), parse_pred(val[1])))
                elif key in ("vars", "squares"):
                    pats.append(Pattern(key, parse_pred(val)))
                else:
                    raise InvalidInput(f"unknown pattern {key!r}")
            return ring.restrict(PatternIdeal(tuple(pats)))
        raise InvalidInput(f"bad pattern ideal {obj!r}")
    if obj == "zero":
        return WordIdeal.zero()
    if obj == "unit":
        return WordIdeal.unit()
    if obj == "augmentation":
        return ring.augmentation()
    if isinstance(obj, dict) and set(obj) == {"letters"}:
        return ring.restrict(WordIdeal.of_letters({f: parse_pred(p) for f, p in obj["letters"].items()}))
    raise InvalidInput(f"bad word-algebra ideal {obj!r}")


def parse_element(ring, obj):
    """Ring element from JSON: coefficient list for K[t]; otherwise a map
    from monomial or word text (``"t0*t1"``, ``"s0*t2"``, ``"1"``) to coefficients."""
    if isinstance(ring, PointRing):
        if not isinstance(obj, list):
            raise InvalidInput("point-ring elements are ascending coefficient lists")
        return Poly.of([_coeff(ring, c) for c in obj], ring.field)
    if isinstance(obj, str):
        obj = {obj: 1}
    if not isinstance(obj, dict):
        raise InvalidInput(f"bad element {obj!r}")
    out = ring.zero()
    for text, c in obj.items():
        if isinstance(ring, MonomialRing):
            mono = {}
            if text.strip() != "1":
                for part in text.split("*"):
                    name, _, e = part.strip().partition("^")
                    if not name.startswith("t"):
                        raise InvalidInput(f"bad variable {part!r}")
                    i = int(name[1:].strip("[]"))
                    mono[i] = mono.get(i, 0) + (int(e) if e else 1)
            term = ring.monomial(mono.items())
        else:
            term = ring.word(ring.parse_word(text) if text.strip() != "1" else ())
        out = ring.add(out, ring.scale(_coeff(ring, c), term))
    return out


@dataclass
class Scenario:
    raw: dict
    ring: Any
    monoid: MonoidSpec
    spec: CrossedSpec | None
    ideal_obj: Any
    queries: list
    pool: int = DEFAULT_POOL
    degree: int = DEFAULT_DEGREE
    word_bound: int = DEFAULT_WORD_BOUND
    cap: int = DEFAULT_CAP
    bound: int = 10
    seed: int = 0
    _ideal: Any = field(default=None, repr=False)

    @property
    def ideal(self):
        if self._ideal is None:
            self._ideal = build_ideal(self.ring, self.ideal_obj)
        return self._ideal


def _monoid(obj) -> MonoidSpec:
    return MonoidSpec(obj["kind"], tuple(obj.get("alphabet", ())))


def load_scenario(obj, seed: int | None = None, bound: int | None = None,
                  cap: int | None = None) -> Scenario:
    validate_schema(obj)
    ring = build_ring(obj.get("ring"))
    mon = _monoid(obj["monoid"])
    spec = None
    if ring is not None:
        action = obj.get("action")
        if action is None:
            raise SchemaError("a ring needs an action", "/action")
        spec = CrossedSpec.build(ring, mon, {g: build_endo(ring, e) for g, e in action.items()})
    b = obj.get("bounds", {})
    queries = obj["query"] if isinstance(obj["query"], list) else [obj["query"]]
    return Scenario(
        raw=obj, ring=ring, monoid=mon, spec=spec, ideal_obj=obj.get("ideal"), queries=queries,
        pool=b.get("pool", DEFAULT_POOL), degree=b.get("degree", DEFAULT_DEGREE),
        word_bound=b.get("word_bound", DEFAULT_WORD_BOUND),
        cap=cap if cap is not None else b.get("cap", DEFAULT_CAP),
        bound=bound if bound is not None else b.get("bound", 10),
        seed=seed if seed is not None else obj.get("seed", 0),
    )


# ---------------------------------------------------------------------------
# execution


def _need_spec(sc: Scenario) -> CrossedSpec:
    if sc.spec is None:
        raise SchemaError("this query needs a ring and an action", "/ring")
    return sc.spec


def _ideal_for(sc: Scenario, q):
    return build_ideal(sc.ring, q["ideal"]) if "ideal" in q else sc.ideal


def _sprime(sc: Scenario, q) -> Verdict:
    spec = _need_spec(sc)
    ideal = _ideal_for(sc, q)
    method = q.get("method", "auto")
    single = len(sc.monoid.alphabet) == 1 and sc.monoid.kind in ("natural", "free")
    if method == "auto":
        if single and not isinstance(sc.ring, WordAlgebra) and \
                primecheck.is_prime_base(sc.ring, ideal).proven:
            method = "orbit"
        else:
            method = "certificate"
    if method == "orbit":
        return primecheck.sprime_orbit(spec, ideal, q.get("k", 0), cap=sc.cap)
    if method == "pairs":
        return primecheck.invariant_pair_test(spec, ideal, mode=q.get("mode", "invariant"),
                                              seed=sc.seed)
    if method == "laurent":
        return primecheck.laurent_sprime(spec, ideal, seed=sc.seed)
    if method == "certificate":
        for cert in (primecheck.evaluation_absorption, primecheck.variable_disjointness):
            v = cert(spec, ideal)
            if v.proven:
                return v
    return primecheck.sprime_witness_search(spec, ideal, seed=sc.seed,
                                            h_bound=q.get("bound", sc.word_bound))


def _words(mon: MonoidSpec, items):
    return [mon.parse(w) for w in items]


def run_query(sc: Scenario, q) -> dict:
    op = q["op"]
    mon = _monoid(q["monoid"]) if "monoid" in q else sc.monoid
    out: dict[str, Any] = {"op": op}
    if "title" in q:
        out["title"] = q["title"]
    if "note" in q:
        out["note"] = q["note"]
    res: Any
    if op == "up-check":
        res = up_search(mon, q.get("set_size", 2), q.get("word_length", 2))
    elif op == "unique-products":
        pairs = unique_products(mon, _words(mon, q["X"]), _words(mon, q["Y"]))
        out["label"] = f"{len(pairs)} unique"
        out["result"] = {"pairs": [[mon.fmt(x), mon.fmt(y)] for x, y in pairs]}
        return out
    elif op == "side-ideal":
        res = side_ideal_compare(mon, mon.parse(q.get("g", mon.alphabet[0])), q.get("bound", 3))
    elif op == "validate":
        res = validate(_need_spec(sc), q.get("bound", sc.bound))
    elif op == "prime":
        res = primecheck.is_prime_base(sc.ring, _ideal_for(sc, q), seed=sc.seed)
    elif op == "stable":
        res = primecheck.is_stable(_need_spec(sc), _ideal_for(sc, q))
    elif op == "invariant":
        res = primecheck.is_invariant(_need_spec(sc), _ideal_for(sc, q))
    elif op == "core":
        res = primecheck.stable_core(_need_spec(sc), _ideal_for(sc, q), sc.cap)
    elif op == "reversibility":
        res = primecheck.reversibility(_need_spec(sc), q.get("bound", sc.word_bound))
    elif op == "sprime":
        res = _sprime(sc, q)
    elif op == "min-twist":
        res = assoc.min_twist(_need_spec(sc), _ideal_for(sc, q), sc.cap)
    elif op == "ass":
        spec = _need_spec(sc)
        if sc.monoid.kind == "natural" and not isinstance(sc.ring, WordAlgebra):
            res = assoc.ass_induced(spec, _ideal_for(sc, q), sc.cap)
        else:
            res = assoc.ass_crossed(spec, _ideal_for(sc, q), word_bound=q.get("bound", 2),
                                    cap=sc.cap, seed=sc.seed)
    elif op == "affine-case":
        if not isinstance(sc.ring, PointRing):
            raise InvalidInput("affine-case needs the point model")
        a = sc.ring.check_point(parse_point(q["point"], sc.ring.field))
        res = assoc.affine_case_analysis(sc.ring, a, q.get("p", 2), sc.cap)
    elif op == "orbit":
        spec = _need_spec(sc)
        a = sc.ring.check_point(parse_point(q["point"], sc.ring.field))
        res = assoc.orbit(a, primecheck._single_endo(spec), sc.cap)
    elif op == "ann-search":
        spec = _need_spec(sc)
        ideal = _ideal_for(sc, q)
        m = spec.module_element(ideal, [(mon.identity(), parse_element(sc.ring, q["element"]))])
        twist = sc.monoid.parse(q["twist"]) if "twist" in q else None
        rep = ann_search(spec, m, degree_bound=q.get("bound", 2), pool=sc.pool // 4,
                         degree=sc.degree, seed=sc.seed, twist=twist)
        out["label"] = f"{rep['annihilating']}/{rep['sampled']} annihilate"
        out["result"] = rep
        return out
    elif op == "square-zero-product":
        res = primecheck.square_zero_check(_need_spec(sc), parse_element(sc.ring, q["element"]),
                                           q.get("bound", 4))
    elif op == "ann-growth":
        fs = element_pool(sc.ring, seed=sc.seed, size=q.get("samples", 20), degree=sc.degree)
        rows = [assoc.annihilator_growth(sc.ring, f) for f in fs]
        ok = all(not r["t_n kills f"] and r["t_n kills f*t_n"] for r in rows)
        out["label"] = f"{sum(1 for _ in rows)} strict growths" if ok else "failed"
        out["result"] = {"samples": rows, "all_strict": ok}
        return out
    else:  # pragma: no cover - schema rejects unknown ops
        raise InvalidInput(f"unknown op {op!r}")
    out["label"] = res.label()
    out["result"] = res.to_json()
    return out


def _status(result: dict) -> str:
    r = result.get("result", {})
    label = result.get("label", "")
    if isinstance(r, dict) and r.get("status") in ("proven", "refuted", "undecided"):
        return r["status"]
    if label.startswith(("Undecided", "NotFound", "Truncated")):
        return "undecided"
    return "done"


def exit_code(results: list[dict]) -> int:
    statuses = [_status(r) for r in results]
    if "refuted" in statuses:
        return EXIT_REFUTED
    if statuses and all(s == "undecided" for s in statuses):
        return EXIT_UNDECIDED
    return EXIT_OK


def run_scenario(obj, seed: int | None = None, bound: int | None = None,
                 cap: int | None = None) -> tuple[dict, int]:
    """Execute a scenario object; returns (report, exit code)."""
    from . import __version__
    report: dict[str, Any] = {"tool": "skewprime", "version": __version__, "scenario": obj}
    try:
        sc = load_scenario(obj, seed=seed, bound=bound, cap=cap)
        results = [run_query(sc, q) for q in sc.queries]
    except AlgebraError as e:
        err = {"type": type(e).__name__, "message": str(e)}
        for attr in ("pointer", "witness"):
            if getattr(e, attr, None) is not None:
                err[attr] = getattr(e, attr)
        report["error"] = err
        report["exit_code"] = EXIT_INPUT
        return report, EXIT_INPUT
    code = exit_code(results)
    report["results"] = results
    report["exit_code"] = code
    return report, code


def dumps(report: dict) -> str:
    return json.dumps(report, sort_keys=True, indent=2, default=str) + "\n"


def render_text(report: dict) -> str:
    lines = []
    name = report.get("scenario", {}).get("name") if isinstance(report.get("scenario"), dict) else None
    if name:
        lines.append(f"scenario: {name}")
    if "error" in report:
        e = report["error"]
        where = f" at {e['pointer']}" if "pointer" in e else ""
        lines.append(f"error: {e['type']}{where}: {e['message']}")
    for r in report.get("results", []):
        head = r.get("title", r["op"])
        lines.append(f"{head}: {r.get('label', '')}")
        res = r.get("result")
        if isinstance(res, dict) and res.get("reason"):
            lines.append(f"  {res['reason']}")
        if "note" in r:
            lines.append(f"  note: {r['note']}")
    if "golden" in report:
        lines.append(f"golden: {report['golden']}")
    lines.append(f"exit: {report.get('exit_code')}")
    return "\n".join(lines) + "\n"
