"""Build a function from a JSON construction description.

``{"family": ..., "field": {...} or "p=..,n=..,mod=[..]", "params": {...}}``
with families kasami, sidelnikov, mm, theorem1..theorem5, zero and table.
Elements are written ``g^k``, ``[c0,...]`` or as prime-field integers; pair
elements as two-item lists; ``pi`` as ``{"a": .., "r": ..}`` (the binomial
x^(p^r) + a x), ``{"frobenius": i}`` or linearized text such as
``"1*x^p2 + g^1*x"``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field as dc_field

import numpy as np

from ..errors import InputError, ParseError
from ..galois import Field, field_from_json, parse_element
from ..linpoly import LinearizedPoly, binomial, parse_linearized
from ..pfun import PAryFunction, PairDomain, zero_function
from .base import kasami, mm_function, sidelnikov
from .indicator import theorem4, theorem5
from .predict import (
    theorem1_function,
    theorem1_predict,
    theorem2_function,
    theorem2_predict,
    theorem3_base,
    theorem3_function,
    theorem3_predict,
)

FAMILIES = ("kasami", "sidelnikov", "mm", "theorem1", "theorem2", "theorem3",
            "theorem4", "theorem5", "zero", "table")


@dataclass
class Construction:
    family: str
    field: Field
    function: PAryFunction
    info: dict = dc_field(default_factory=dict)  # prediction or side conditions


def load_spec(text_or_path: str) -> dict:
    """Parse inline JSON, or read it from a file when the argument is a path."""
    s = text_or_path.strip()
    if not s.startswith("{"):
        try:
            with open(s, encoding="utf-8") as fh:
                s = fh.read()
        except OSError as exc:
            raise InputError(f"cannot read construction spec {text_or_path!r}: {exc}") from exc
    try:
        obj = json.loads(s)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON at line {exc.lineno} column {exc.colno}: {exc.msg}") from exc
    if not isinstance(obj, dict):
        raise ParseError("construction spec must be a JSON object")
    return obj


def _param(params, key):
    if key not in params:
        raise InputError(f"missing parameter {key!r}")
    return params[key]


def _elem(field, params, key):
    return parse_element(field, _param(params, key))


def _pair(field, params, key):
    val = _param(params, key)
    if not isinstance(val, (list, tuple)) or len(val) != 2:
        raise ParseError(f"{key} must be a two-item list [x, y]")
    dom = PairDomain(field)
    a, b = (parse_element(field, t) for t in val)
    return dom.index(a, b)


def parse_pi(field: Field, obj) -> LinearizedPoly:
    if isinstance(obj, str):
        return parse_linearized(field, obj)
    if isinstance(obj, dict):
        if "frobenius" in obj:
            return LinearizedPoly.frobenius_power(field, int(obj["frobenius"]))
        if "a" in obj and "r" in obj:
            return binomial(parse_element(field, obj["a"]), int(obj["r"]))
    raise ParseError("pi must be linearized text, {'a': .., 'r': ..} or {'frobenius': i}")


def _h_table(field: Field, h):
    if h is None or h == "zero":
        return np.zeros(field.order, dtype=np.int64)
    if h == "trace":
        return field.tr(field.elements())
    if isinstance(h, list) and len(h) == field.order:
        return np.asarray(h, dtype=np.int64) % field.p
    raise ParseError("h must be 'zero', 'trace' or a table of q values")


def _domain(field, params):
    kind = params.get("domain", "single")
    if kind == "pair":
        return PairDomain(field)
    if kind != "single":
        raise ParseError("domain must be 'single' or 'pair'")
    return field


def build(spec: dict) -> Construction:
    family = spec.get("family")
    if family not in FAMILIES:
        raise InputError(f"unknown family {family!r}; choose from {', '.join(FAMILIES)}")
    if "field" not in spec:
        raise InputError("construction spec needs a 'field'")
    F = field_from_json(spec["field"])
    params = spec.get("params", {}) or {}
    info = {}
    if family == "kasami":
        f = kasami(F, _elem(F, params, "lambda"))
    elif family == "sidelnikov":
        f = sidelnikov(F, _elem(F, params, "lambda"))
    elif family == "mm":
        pi = parse_pi(F, _param(params, "pi"))
        f = mm_function(pi, _h_table(F, params.get("h")))
    elif family in ("theorem1", "theorem2"):
        lam, u, v = (_elem(F, params, k) for k in ("lambda", "u", "v"))
        predict = theorem1_predict if family == "theorem1" else theorem2_predict
        make = theorem1_function if family == "theorem1" else theorem2_function
        triple, pred = predict(F, lam, u, v)
        f = make(F, lam, u, v)
        info = {"triple": list(triple.astuple()), "predicted": pred.verdict}
    elif family == "theorem3":
        pi = parse_pi(F, _param(params, "pi"))
        if "u" in params or "v" in params:
            u, v = _pair(F, params, "u"), _pair(F, params, "v")
            triple, pred = theorem3_predict(pi, u, v)
            f = theorem3_function(pi, u, v)
            info = {"triple": list(triple.astuple()), "predicted": pred.verdict}
        else:
            f = theorem3_base(pi)
    elif family in ("theorem4", "theorem5"):
        make = theorem4 if family == "theorem4" else theorem5
        con = make(F, _elem(F, params, "lambda"), _elem(F, params, "u"))
        f = con.function
        info = {"conditions": con.report.as_dict()}
    elif family == "zero":
        f = zero_function(_domain(F, params))
    else:
        dom = _domain(F, params)
        table = np.asarray(_param(params, "table"), dtype=np.int64)
        if table.shape != (dom.size,):
            raise ParseError(f"table needs {dom.size} entries, got {table.size}")
        f = PAryFunction(dom, table % F.p, name="table")
    return Construction(family, F, f, info)
