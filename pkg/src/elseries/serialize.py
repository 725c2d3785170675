"""JSON form of monomials and series.

Series: ``{"terms": [{"mono": M, "coeff": "p/q"}, ...], "trunc": null | {"cutoff": M, "order": N}}``
Monomials: ``{"word": {"0": "2", "1": "-1/2"}}`` or ``{"exp": <series>}``
"""

from __future__ import annotations

import json

from .coeff import format_coefficient, parse_coefficient
from .monomials import ExpOf, Monomial, Word, normalize_monomial
from .series import Series, TruncationMark


def monomial_to_json(m: Monomial):
    if isinstance(m, ExpOf):
        return {"exp": series_to_json(m.arg)}
    return {"word": {str(k): format_coefficient(r) for k, r in m.exponents}}


def series_to_json(s: Series):
    doc = {"terms": [{"mono": monomial_to_json(m), "coeff": format_coefficient(c)} for m, c in s.terms]}
    doc["trunc"] = None
    if s.trunc is not None:
        doc["trunc"] = {"cutoff": monomial_to_json(s.trunc.cutoff), "order": s.trunc.order_used}
    return doc


def monomial_from_json(doc) -> Monomial:
    if not isinstance(doc, dict) or len(doc) != 1:
        raise ValueError("monomial JSON must be {'word': ...} or {'exp': ...}")
    if "word" in doc:
        return Word({int(k): parse_coefficient(v) for k, v in doc["word"].items()})
    if "exp" in doc:
        return normalize_monomial(ExpOf(series_from_json(doc["exp"])))
    raise ValueError("unknown monomial tag %r" % next(iter(doc)))


def series_from_json(doc) -> Series:
    trunc = None
    if doc.get("trunc") is not None:
        t = doc["trunc"]
        trunc = TruncationMark(monomial_from_json(t["cutoff"]), int(t.get("order", 0)))
    terms = [(monomial_from_json(t["mono"]), parse_coefficient(t["coeff"])) for t in doc.get("terms", [])]
    return Series(terms, trunc)


def dumps(s: Series) -> str:
    return json.dumps(series_to_json(s), ensure_ascii=False, separators=(",", ":"))


def loads(text: str) -> Series:
    return series_from_json(json.loads(text))
