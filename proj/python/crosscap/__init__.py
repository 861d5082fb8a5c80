"""Curve configurations on punctured surfaces."""

import json as _json

from . import _crosscap
from ._crosscap import (
    Configuration,
    CrosscapError,
    Surface,
    anonymous_key,
    certificate,
    classify_curve,
    cut_along,
    enumerate,
    intersection_number,
    load_config,
    nonorientable_surface,
    orientable_surface,
    parse_config,
    serialize,
    validate,
)


def verify_max_abelian_system(config, curves, s):
    return _json.loads(_crosscap.verify_max_abelian_system(config, list(curves), s))


def separating_pair(config, a, b, budget=""):
    return _json.loads(_crosscap.separating_pair(config, a, b, budget))


def small_genus(config, curve, budget=""):
    return _json.loads(_crosscap.small_genus(config, curve, budget))


def audit(lemma, surface, curves=2, crossings=2, jobs=1):
    return _json.loads(_crosscap.audit(lemma, surface, curves, crossings, jobs))


__all__ = [
    "Configuration",
    "CrosscapError",
    "Surface",
    "anonymous_key",
    "audit",
    "certificate",
    "classify_curve",
    "cut_along",
    "enumerate",
    "intersection_number",
    "load_config",
    "nonorientable_surface",
    "orientable_surface",
    "parse_config",
    "separating_pair",
    "serialize",
    "small_genus",
    "validate",
    "verify_max_abelian_system",
]
