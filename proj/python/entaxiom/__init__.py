"""Generalized entropies and axiom conformance checks."""

import json

from . import _core
from ._core import EntaxiomError, conditional_entropy, entropy, families

__all__ = [
    "EntaxiomError",
    "check",
    "classify",
    "conditional_entropy",
    "entropy",
    "families",
    "reverify",
    "run_suite",
]


def check(family, axiom, param=None, scale=1.0, variant="corrected", **cfg):
    """Verdict for one axiom, as a dict."""
    return json.loads(_core.check_json(family, axiom, param, scale, variant, cfg))


def run_suite(family, suite, param=None, scale=1.0, variant="corrected", **cfg):
    return json.loads(_core.suite_json(family, suite, param, scale, variant, cfg))


def classify(family, param=None, scale=1.0, variant="corrected", **cfg):
    return json.loads(_core.classify_json(family, param, scale, variant, cfg))


def reverify(verdict):
    """Re-evaluates the witness stored in a verdict dict."""
    return json.loads(_core.reverify_json(json.dumps(verdict)))
