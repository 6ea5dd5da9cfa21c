"""Parsing of declarative analysis spec files.

A spec file is a JSON document:

    {
      "domain":   {"type": "OddPrimeReciprocals", "maxPrime": 1000,
                   "withZero": true},
      "function": {"type": "Piecewise", "pieces": [
                     {"region": {"type": "OddPrimeReciprocals",
                                 "maxPrime": 1000, "withZero": false},
                      "formula": {"formula": "Const", "c": 1}},
                     {"region": {"type": "FinitePoints", "points": [0]},
                      "formula": {"formula": "Const", "c": 0}}]},
      "subsetB":  {"type": "IntegerWindow", "lo": -5, "hi": 5},   # optional
      "config":   {"gridExponent": 10, "seed": 0}                 # optional
    }

Domain objects use the variant names FinitePoints, IntegerWindow,
OddPrimeReciprocals, NaturalReciprocals, TruncatedRationals, IntervalUnion,
Staircase, UnionOf. Function objects are a bare formula ({"formula": ...}),
a Piecewise, or a Combined. Numbers must be integers or exact strings such
as "3/4" or "1 + 1/2*sqrt2"; floats are rejected to keep every certificate
exact. Unknown keys are rejected everywhere.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .analysis import AnalysisConfig
from .domains import (
    Domain,
    FinitePoints,
    IntegerWindow,
    IntervalPiece,
    IntervalUnion,
    NaturalReciprocals,
    OddPrimeReciprocals,
    Staircase,
    TruncatedRationals,
    UnionOf,
)
from .errors import ParseError
from .exactnum import QuadExt, parse_quadext
from .functions import (
    Affine,
    Combined,
    Const,
    Formula,
    FuncPiece,
    FuncSpec,
    Identity,
    Monomial,
    Piecewise,
    Reciprocal,
)


@dataclass
class ParsedSpec:
    domain: Domain
    function: FuncSpec
    subset_b: Domain | None
    config: AnalysisConfig


def _require_keys(obj: dict, where: str, required: set[str], optional: set[str] = frozenset()) -> None:
    missing = required - obj.keys()
    if missing:
        raise ParseError(f"{where}: missing key(s) {sorted(missing)}")
    unknown = obj.keys() - required - optional
    if unknown:
        raise ParseError(f"{where}: unknown key(s) {sorted(unknown)}")


def _number(value: object, where: str) -> QuadExt:
    if isinstance(value, bool):
        raise ParseError(f"{where}: expected a number, got a boolean")
    if isinstance(value, int):
        return QuadExt.of(value)
    if isinstance(value, str):
        return parse_quadext(value)
    if isinstance(value, float):
        raise ParseError(
            f"{where}: floats are not exact; write the value as a string "
            'like "3/4" or "1 + 1/2*sqrt2"'
        )
    raise ParseError(f"{where}: expected a number, got {type(value).__name__}")


def _integer(value: object, where: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise ParseError(f"{where}: expected an integer")
    return value


def _flag(value: object, where: str) -> bool:
    if not isinstance(value, bool):
        raise ParseError(f"{where}: expected true or false")
    return value


def _obj(value: object, where: str) -> dict:
    if not isinstance(value, dict):
        raise ParseError(f"{where}: expected an object")
    return value


def _list(value: object, where: str) -> list:
    if not isinstance(value, list):
        raise ParseError(f"{where}: expected a list")
    return value


def parse_domain(obj: object, where: str = "domain") -> Domain:
    d = _obj(obj, where)
    kind = d.get("type")
    if not isinstance(kind, str):
        raise ParseError(f"{where}: needs a 'type' string")
    if kind == "FinitePoints":
        _require_keys(d, where, {"type", "points"})
        pts = _list(d["points"], f"{where}.points")
        if not pts:
            raise ParseError(f"{where}.points: needs at least one point")
        return FinitePoints(
            tuple(_number(p, f"{where}.points[{i}]") for i, p in enumerate(pts))
        )
    if kind == "IntegerWindow":
        _require_keys(d, where, {"type", "lo", "hi"})
        return IntegerWindow(
            _integer(d["lo"], f"{where}.lo"), _integer(d["hi"], f"{where}.hi")
        )
    if kind == "OddPrimeReciprocals":
        _require_keys(d, where, {"type", "maxPrime", "withZero"})
        return OddPrimeReciprocals(
            _integer(d["maxPrime"], f"{where}.maxPrime"),
            with_zero=_flag(d["withZero"], f"{where}.withZero"),
        )
    if kind == "NaturalReciprocals":
        _require_keys(d, where, {"type", "maxN", "withZero"})
        return NaturalReciprocals(
            _integer(d["maxN"], f"{where}.maxN"),
            with_zero=_flag(d["withZero"], f"{where}.withZero"),
        )
    if kind == "TruncatedRationals":
        _require_keys(d, where, {"type", "maxDenominator", "lo", "hi", "adjoinSqrt2"})
        return TruncatedRationals(
            _integer(d["maxDenominator"], f"{where}.maxDenominator"),
            _number(d["lo"], f"{where}.lo"),
            _number(d["hi"], f"{where}.hi"),
            adjoin_sqrt2=_flag(d["adjoinSqrt2"], f"{where}.adjoinSqrt2"),
        )
    if kind == "IntervalUnion":
        _require_keys(d, where, {"type", "pieces"})
        pieces = []
        for i, p in enumerate(_list(d["pieces"], f"{where}.pieces")):
            pw = f"{where}.pieces[{i}]"
            po = _obj(p, pw)
            _require_keys(po, pw, {"lo", "hi"}, {"loClosed", "hiClosed"})
            pieces.append(
                IntervalPiece(
                    _number(po["lo"], f"{pw}.lo"),
                    _number(po["hi"], f"{pw}.hi"),
                    lo_closed=_flag(po.get("loClosed", True), f"{pw}.loClosed"),
                    hi_closed=_flag(po.get("hiClosed", True), f"{pw}.hiClosed"),
                )
            )
        return IntervalUnion(tuple(pieces))
    if kind == "Staircase":
        _require_keys(d, where, {"type", "variant", "blocks"})
        variant = d["variant"]
        if variant not in ("A", "B"):
            raise ParseError(f"{where}.variant: expected 'A' or 'B'")
        return Staircase(variant, _integer(d["blocks"], f"{where}.blocks"))
    if kind == "UnionOf":
        _require_keys(d, where, {"type", "parts"})
        parts = _list(d["parts"], f"{where}.parts")
        if not parts:
            raise ParseError(f"{where}.parts: needs at least one part")
        return UnionOf(
            tuple(
                parse_domain(p, f"{where}.parts[{i}]") for i, p in enumerate(parts)
            )
        )
    raise ParseError(f"{where}: unknown domain type {kind!r}")


def parse_formula(obj: object, where: str) -> Formula:
    d = _obj(obj, where)
    kind = d.get("formula")
    if not isinstance(kind, str):
        raise ParseError(f"{where}: needs a 'formula' string")
    if kind == "Const":
        _require_keys(d, where, {"formula", "c"})
        return Const(_number(d["c"], f"{where}.c"))
    if kind == "Identity":
        _require_keys(d, where, {"formula"})
        return Identity()
    if kind == "Affine":
        _require_keys(d, where, {"formula", "m", "c"})
        return Affine(_number(d["m"], f"{where}.m"), _number(d["c"], f"{where}.c"))
    if kind == "Reciprocal":
        _require_keys(d, where, {"formula"})
        return Reciprocal()
    if kind == "Monomial":
        _require_keys(d, where, {"formula", "n"})
        return Monomial(_integer(d["n"], f"{where}.n"))
    raise ParseError(f"{where}: unknown formula {kind!r}")


def parse_function(obj: object, where: str = "function") -> FuncSpec:
    d = _obj(obj, where)
    if "formula" in d:
        return parse_formula(d, where)
    kind = d.get("type")
    if kind == "Piecewise":
        _require_keys(d, where, {"type", "pieces"})
        pieces = []
        for i, p in enumerate(_list(d["pieces"], f"{where}.pieces")):
            pw = f"{where}.pieces[{i}]"
            po = _obj(p, pw)
            _require_keys(po, pw, {"region", "formula"})
            pieces.append(
                FuncPiece(
                    parse_domain(po["region"], f"{pw}.region"),
                    parse_formula(po["formula"], f"{pw}.formula"),
                )
            )
        if not pieces:
            raise ParseError(f"{where}.pieces: needs at least one piece")
        return Piecewise(tuple(pieces))
    if kind == "Combined":
        _require_keys(d, where, {"type", "op", "operands"}, {"alpha"})
        op = d["op"]
        if op not in ("scale", "add", "sub", "mul", "div"):
            raise ParseError(f"{where}.op: unknown operation {op!r}")
        operands = tuple(
            parse_function(o, f"{where}.operands[{i}]")
            for i, o in enumerate(_list(d["operands"], f"{where}.operands"))
        )
        alpha = None
        if op == "scale":
            if "alpha" not in d:
                raise ParseError(f"{where}: scale needs an 'alpha'")
            alpha = _number(d["alpha"], f"{where}.alpha")
        elif "alpha" in d:
            raise ParseError(f"{where}: 'alpha' only applies to scale")
        return Combined(op, operands, alpha)
    raise ParseError(
        f"{where}: expected a bare formula, a Piecewise, or a Combined"
    )


def parse_config(obj: object, where: str = "config") -> AnalysisConfig:
    d = _obj(obj, where)
    _require_keys(
        d,
        where,
        set(),
        {"deltaSchedule", "gridExponent", "maxPairs", "enumLimit", "seed", "outputFormat"},
    )
    kwargs: dict = {}
    if "deltaSchedule" in d:
        sched = _list(d["deltaSchedule"], f"{where}.deltaSchedule")
        kwargs["delta_schedule"] = tuple(
            _number(v, f"{where}.deltaSchedule[{i}]") for i, v in enumerate(sched)
        )
    if "gridExponent" in d:
        kwargs["grid_exponent"] = _integer(d["gridExponent"], f"{where}.gridExponent")
    if "maxPairs" in d:
        kwargs["max_pairs"] = _integer(d["maxPairs"], f"{where}.maxPairs")
    if "enumLimit" in d:
        kwargs["enum_limit"] = _integer(d["enumLimit"], f"{where}.enumLimit")
    if "seed" in d:
        kwargs["seed"] = _integer(d["seed"], f"{where}.seed")
    if "outputFormat" in d:
        fmt = d["outputFormat"]
        if fmt not in ("text", "json"):
            raise ParseError(f"{where}.outputFormat: expected 'text' or 'json'")
        kwargs["output_format"] = fmt
    return AnalysisConfig(**kwargs)


def _validate_subset(ambient: Domain, subset: Domain, enum_limit: int) -> None:
    if not subset.enumerable:
        raise ParseError("subsetB: must be an enumerable set")
    enum = subset.enumerate(enum_limit)
    for p in enum.points:
        if not ambient.contains(p):
            raise ParseError(
                f"subsetB: point {p} is not a member of the ambient domain"
            )


def parse_spec(text: str) -> ParsedSpec:
    """Parse and fully validate a spec document; unknown keys are rejected
    and subsetB membership in the ambient domain is checked point by point."""
    if not text.strip():
        raise ParseError("empty input")
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(
            f"syntax error at line {exc.lineno}, column {exc.colno}: {exc.msg}"
        ) from None
    top = _obj(data, "spec")
    _require_keys(top, "spec", {"domain", "function"}, {"subsetB", "config"})
    config = parse_config(top.get("config", {}))
    domain = parse_domain(top["domain"])
    function = parse_function(top["function"])
    subset_b = None
    if "subsetB" in top:
        subset_b = parse_domain(top["subsetB"], "subsetB")
        _validate_subset(domain, subset_b, config.enum_limit)
    return ParsedSpec(domain, function, subset_b, config)
