"""JSON schemas for bases, parametrizations, expansions, traces, and reports."""

from __future__ import annotations

import json
from fractions import Fraction

from .basefield import BaseFieldConfig, KElem
from .errors import KeyvalError
from .izumi import IzumiReport
from .keybasis import AdicExpansion, WeightedBasis
from .oracle import Parametrization, PrecisionPolicy
from .parsing import kelem_text, parse_kelem, parse_poly, poly_text
from .polynomials import ExtensionConfig
from .rewrite import RewriteTrace
from .values import format_value


def base_to_json(base: BaseFieldConfig):
    if base.kind == "p_adic":
        return {"p_adic": base.p}
    return "function_field"


def base_from_json(doc) -> BaseFieldConfig:
    if doc == "function_field":
        return BaseFieldConfig.function_field()
    if isinstance(doc, dict) and "p_adic" in doc:
        return BaseFieldConfig.p_adic(int(doc["p_adic"]))
    raise KeyvalError("bad base field descriptor: %r" % (doc,))


def basis_to_json(basis: WeightedBasis) -> dict:
    doc = {
        "base": base_to_json(basis.base),
        "steps": [
            {"U": poly_text(s.U, basis.base), "beta": format_value(s.beta)}
            for s in basis.steps
        ],
    }
    if basis.ext.is_algebraic:
        doc["ext"] = poly_text(basis.ext.minimal, basis.base)
    return doc


def basis_from_json(doc: dict) -> WeightedBasis:
    base = base_from_json(doc["base"])
    ext = None
    if doc.get("ext"):
        ext = ExtensionConfig.algebraic(parse_poly(doc["ext"], base))
    steps = [
        (parse_poly(s["U"], base), Fraction(s["beta"])) for s in doc["steps"]
    ]
    return WeightedBasis(base, steps, ext)


def load_basis(path) -> WeightedBasis:
    with open(path) as fh:
        return basis_from_json(json.load(fh))


def parametrization_to_json(par: Parametrization) -> dict:
    from .parsing import ypoly_text

    return {
        "defining": poly_text(par.defining, par.base),
        "branch": ypoly_text(par.branch, par.base.variable),
        "policy": {
            "initial": par.policy.initial,
            "growth": par.policy.growth,
            "max": par.policy.maximum,
        },
    }


def parametrization_from_json(doc: dict) -> Parametrization:
    base = base_from_json(doc.get("base", "function_field"))
    defining = parse_poly(doc["defining"], base)
    branch = parse_kelem(doc["branch"], base)
    if branch.den.degree > 0:
        raise KeyvalError("branch segment must be polynomial")
    pol = doc.get("policy", {})
    policy = PrecisionPolicy(
        initial=int(pol.get("initial", 16)),
        growth=int(pol.get("growth", 2)),
        maximum=int(pol.get("max", 512)),
    )
    return Parametrization(defining, branch.num, policy=policy, base=base)


def load_parametrization(path) -> Parametrization:
    with open(path) as fh:
        return parametrization_from_json(json.load(fh))


def _exponents_key(a) -> str:
    return ",".join(str(e) for e in a)


def expansion_to_json(E: AdicExpansion, base: BaseFieldConfig) -> dict:
    return {
        "level": E.level,
        "terms": {
            _exponents_key(a): kelem_text(c, base)
            for a, c in sorted(E.terms.items())
        },
    }


def expansion_from_json(doc: dict, base: BaseFieldConfig) -> AdicExpansion:
    terms = {}
    for key, text in doc["terms"].items():
        a = tuple(int(e) for e in key.split(","))
        terms[a] = parse_kelem(text, base)
    return AdicExpansion(int(doc["level"]), terms)


def trace_to_json(trace: RewriteTrace, base: BaseFieldConfig) -> list:
    out = []
    for snap, w in trace.entries:
        out.append(
            {
                "terms": {
                    _exponents_key(a): kelem_text(c, base)
                    for a, c in sorted(snap.terms.items())
                },
                "weight": format_value(w),
            }
        )
    return out


def report_to_json(report: IzumiReport, base: BaseFieldConfig) -> dict:
    doc = {
        "sup_found": format_value(report.sup_found),
        "witness": poly_text(report.witness, base),
        "samples": report.samples,
        "skipped": report.skipped,
        "seed": report.seed,
    }
    if report.theoretical is not None:
        doc["theoretical"] = format_value(report.theoretical)
    return doc
