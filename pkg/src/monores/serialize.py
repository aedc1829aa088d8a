"""Reading ideals and reading/writing complexes.

Ideals arrive either as JSON ({"variables": [...], "monomials": [[...]],
"order": [...]}) or as a human monomial list like `x^2*y, y*z`, where each
monomial is a '*'-separated product of `var` or `var^positive-int` factors.
Variables of the human syntax are collected in order of first appearance
unless the caller pins them down.  Complexes are written to a JSON document
that lists, per homological degree, the generator labels with their
multidegrees and the differential of each generator term by term, plus the
labels eliminated on the way to a subcomplex.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction

from .algebra import (EMPTY_SEQ, IndexSeq, ModuleElement, ModuleTerm,
                      Monomial, VarContext, element_from)
from .errors import ParseError
from .reduction import EliminationReport
from .taylor import FreeComplex


@dataclass(frozen=True)
class IdealInput:
    context: VarContext
    monomials: tuple[Monomial, ...]


# ---------------------------------------------------------------------------
# Ideal input


def parse_ideal(text: str, variables=None) -> IdealInput:
    stripped = text.lstrip()
    if stripped.startswith("{"):
        return _ideal_from_json(text)
    return _ideal_from_human(text, variables)


def _ideal_from_json(text: str) -> IdealInput:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc.msg}", pos=exc.pos) from None
    if not isinstance(data, dict):
        raise ParseError("ideal JSON must be an object")
    names = data.get("variables")
    rows = data.get("monomials")
    if not isinstance(names, list) or not all(isinstance(s, str) for s in names):
        raise ParseError("'variables' must be a list of names")
    if not isinstance(rows, list):
        raise ParseError("'monomials' must be a list of exponent vectors")
    context = VarContext(tuple(names))
    monomials = []
    for row in rows:
        if not isinstance(row, list) or len(row) != context.n or \
                not all(isinstance(e, int) and e >= 0 for e in row):
            raise ParseError(f"malformed exponent vector {row!r}")
        monomials.append(Monomial(tuple(row)))
    order = data.get("order")
    if order is not None:
        if sorted(order) != list(range(1, len(monomials) + 1)):
            raise ParseError(f"'order' must be a permutation of 1..{len(monomials)}")
        monomials = [monomials[p - 1] for p in order]
    _reject_duplicates(monomials)
    return IdealInput(context, tuple(monomials))


def _reject_duplicates(monomials):
    seen = set()
    for m in monomials:
        if m in seen:
            raise ParseError(f"duplicate monomial {m.exps}")
        seen.add(m)


def _ideal_from_human(text: str, variables) -> IdealInput:
    fixed = variables is not None
    names: list[str] = list(variables) if fixed else []
    parsed = [_parse_monomial_factors(chunk, base)
              for chunk, base in _split_monomials(text)]
    if not fixed:
        for factors in parsed:
            for name, _, pos in factors:
                if name not in names:
                    names.append(name)
    context = VarContext(tuple(names))
    monomials = []
    for factors in parsed:
        exps = [0] * context.n
        for name, exp, pos in factors:
            if name not in names:
                raise ParseError(f"unknown variable {name!r}", pos=pos)
            exps[names.index(name)] += exp
        monomials.append(Monomial(tuple(exps)))
    _reject_duplicates(monomials)
    return IdealInput(context, tuple(monomials))


def _split_monomials(text: str):
    chunks = []
    start = 0
    for i in range(len(text) + 1):
        if i == len(text) or text[i] == ",":
            chunk = text[start:i]
            if not chunk.strip():
                raise ParseError("empty monomial", pos=start)
            chunks.append((chunk, start))
            start = i + 1
    return chunks


def _parse_monomial_factors(chunk: str, base: int):
    """Factors of one monomial as (name, exponent, position) triples."""
    factors = []
    i = 0
    n = len(chunk)

    def skip_ws():
        nonlocal i
        while i < n and chunk[i].isspace():
            i += 1

    while True:
        skip_ws()
        if i >= n:
            raise ParseError("expected a variable", pos=base + i)
        if not (chunk[i].isalpha() or chunk[i] == "_"):
            raise ParseError(f"unexpected character {chunk[i]!r}", pos=base + i)
        start = i
        while i < n and (chunk[i].isalnum() or chunk[i] == "_"):
            i += 1
        name = chunk[start:i]
        exp = 1
        skip_ws()
        if i < n and chunk[i] == "^":
            i += 1
            skip_ws()
            dstart = i
            while i < n and chunk[i].isdigit():
                i += 1
            if i == dstart:
                raise ParseError("expected an exponent", pos=base + i)
            exp = int(chunk[dstart:i])
            if exp <= 0:
                raise ParseError("exponent must be positive", pos=base + dstart)
        factors.append((name, exp, base + start))
        skip_ws()
        if i >= n:
            return factors
        if chunk[i] != "*":
            raise ParseError(f"unexpected character {chunk[i]!r}", pos=base + i)
        i += 1


# ---------------------------------------------------------------------------
# Complex files


def complex_to_dict(complex_: FreeComplex, report: EliminationReport | None = None) -> dict:
    degrees = []
    differential = []
    for q in range(complex_.max_degree + 1):
        gens = []
        for label in complex_.labels(q):
            gens.append({"label": list(label.entries),
                         "multidegree": list(complex_.multidegree(label).exps)})
            if q >= 1:
                differential.append({
                    "q": q,
                    "from": list(label.entries),
                    "terms": [{"coeff_num": t.coeff.numerator,
                               "coeff_den": t.coeff.denominator,
                               "mono": list(t.mono.exps),
                               "to": list(t.label.entries)}
                              for t in complex_.diff(label).terms],
                })
        degrees.append({"q": q, "generators": gens})
    eliminated = []
    if report is not None:
        for level in report.dropped:
            for label, witness in level:
                eliminated.append({"label": list(label.entries),
                                   "witness": witness})
    return {"variables": list(complex_.context.names),
            "monomials": [list(m.exps) for m in complex_.monomials],
            "kind": complex_.kind,
            "degrees": degrees,
            "differential": differential,
            "eliminated": eliminated}


def complex_from_dict(data: dict) -> tuple[FreeComplex, tuple]:
    try:
        context = VarContext(tuple(data["variables"]))
        monomials = tuple(Monomial(tuple(row)) for row in data["monomials"])
        kind = data["kind"]
        degrees = []
        multideg = {}
        levels = sorted(data["degrees"], key=lambda d: d["q"])
        if [lv["q"] for lv in levels] != list(range(len(levels))):
            raise ValueError("degrees must cover 0..max without gaps")
        for level in levels:
            labels = []
            for gen in level["generators"]:
                label = IndexSeq(tuple(gen["label"]))
                labels.append(label)
                multideg[label] = Monomial(tuple(gen["multidegree"]))
            degrees.append(labels)
        diff = {label: ModuleElement() for label in multideg}
        for rec in data["differential"]:
            label = IndexSeq(tuple(rec["from"]))
            diff[label] = element_from(
                (Fraction(t["coeff_num"], t["coeff_den"]),
                 Monomial(tuple(t["mono"])), IndexSeq(tuple(t["to"])))
                for t in rec["terms"])
        eliminated = tuple((IndexSeq(tuple(e["label"])), e["witness"])
                           for e in data.get("eliminated", ()))
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"malformed complex file: {exc}") from None
    return FreeComplex(context, monomials, kind, degrees, multideg, diff), eliminated


def dumps_complex(complex_: FreeComplex, report: EliminationReport | None = None) -> str:
    return json.dumps(complex_to_dict(complex_, report), indent=2,
                      sort_keys=True) + "\n"


def loads_complex(text: str) -> tuple[FreeComplex, tuple]:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc.msg}", pos=exc.pos) from None
    return complex_from_dict(data)


def looks_like_complex(text: str) -> bool:
    stripped = text.lstrip()
    if not stripped.startswith("{"):
        return False
    try:
        data = json.loads(stripped)
    except json.JSONDecodeError:
        return False
    return isinstance(data, dict) and "degrees" in data
