"""JSON encodings. Rationals are strings ``"p/q"`` in lowest terms with the sign on p."""
from __future__ import annotations

import json
from fractions import Fraction
from typing import Any

from .complex import Chain, HomologyClass, SimplicialComplex, build_complex
from .covering import CoveringMap, Section, validate_cover
from .measure import MeasureChain
from .seminorm import Cochain, DualCertificate


class MalformedInput(ValueError):
    """Input that does not follow the expected JSON schema."""


def format_rational(q) -> str:
    q = Fraction(q)
    return f"{q.numerator}/{q.denominator}"


def parse_rational(text) -> Fraction:
    if isinstance(text, bool) or not isinstance(text, (str, int)):
        raise MalformedInput(f"expected a rational string, got {text!r}")
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise MalformedInput(f"bad rational {text!r}") from exc


def dumps(obj: Any) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False) + "\n"


def _simplex(raw) -> tuple[int, ...]:
    if not isinstance(raw, list) or not all(isinstance(v, int) and not isinstance(v, bool) for v in raw):
        raise MalformedInput(f"simplex must be a list of integers, got {raw!r}")
    return tuple(raw)


def _require(data, key, kind=None):
    if not isinstance(data, dict) or key not in data:
        raise MalformedInput(f"missing key {key!r}")
    value = data[key]
    if kind is not None and not isinstance(value, kind):
        raise MalformedInput(f"key {key!r} has the wrong type")
    return value


def complex_to_json(X: SimplicialComplex) -> dict:
    return {"facets": [list(f) for f in X.facets]}


def complex_from_json(data) -> SimplicialComplex:
    facets = _require(data, "facets", list)
    return build_complex([list(_simplex(f)) for f in facets])


def _combination_to_json(c, key: str) -> dict:
    return {
        "degree": c.degree,
        key: [{"simplex": list(s), "coeff": format_rational(c[s])} for s in c],
    }


def _combination_from_json(data, key: str, cls):
    degree = _require(data, "degree", int)
    entries = _require(data, key, list)
    items = []
    for e in entries:
        items.append((_simplex(_require(e, "simplex")), parse_rational(_require(e, "coeff"))))
    try:
        return cls.from_oriented(degree, items)
    except ValueError as exc:
        raise MalformedInput(str(exc)) from exc


def chain_to_json(c: Chain) -> dict:
    return _combination_to_json(c, "terms")


def chain_from_json(data) -> Chain:
    return _combination_from_json(data, "terms", Chain)


def measure_to_json(mu: MeasureChain) -> dict:
    return _combination_to_json(mu, "masses")


def measure_from_json(data) -> MeasureChain:
    return _combination_from_json(data, "masses", MeasureChain)


def certificate_to_json(cert: DualCertificate) -> dict:
    phi = cert.cochain
    return {
        "degree": phi.degree,
        "values": [{"simplex": list(s), "value": format_rational(v)} for s, v in phi.values.items()],
        "pairing": format_rational(cert.pairing),
        "sup_norm": format_rational(cert.sup_norm),
    }


def cochain_from_json(data, X: SimplicialComplex) -> Cochain:
    """Read the cochain part of a certificate file; pairing and sup_norm are recomputed, not trusted."""
    degree = _require(data, "degree", int)
    values = {}
    for e in _require(data, "values", list):
        values[_simplex(_require(e, "simplex"))] = parse_rational(_require(e, "value"))
    try:
        return Cochain(X, degree, values)
    except ValueError as exc:
        raise MalformedInput(str(exc)) from exc


def cover_to_json(cover: CoveringMap) -> dict:
    return {
        "total": complex_to_json(cover.total),
        "base": complex_to_json(cover.base),
        "projection": [[v, cover.projection[v]] for v in sorted(cover.projection)],
    }


def cover_from_json(data) -> CoveringMap:
    total = complex_from_json(_require(data, "total", dict))
    base = complex_from_json(_require(data, "base", dict))
    pairs = _require(data, "projection", list)
    proj = {}
    for p in pairs:
        if not (isinstance(p, list) and len(p) == 2 and all(isinstance(v, int) for v in p)):
            raise MalformedInput(f"projection entries are [total, base] pairs, got {p!r}")
        proj[p[0]] = p[1]
    return validate_cover(total, base, proj)


def section_to_json(section: Section) -> dict:
    return {
        "assignment": [
            {"base": list(s), "lift": list(t)} for s, t in sorted(section.assignment.items(), key=lambda kv: (len(kv[0]), kv[0]))
        ]
    }


def section_from_json(data) -> Section:
    out = {}
    for e in _require(data, "assignment", list):
        out[_simplex(_require(e, "base"))] = _simplex(_require(e, "lift"))
    return Section(out)


def class_from_json(data, X: SimplicialComplex) -> HomologyClass:
    chain = chain_from_json(data)
    if not X.contains_chain(chain):
        raise MalformedInput("cycle uses simplices outside the complex")
    return HomologyClass(X, chain)
