"""Spin Hall-Littlewood and spin q-Whittaker functions.

Scalars may be given as ``fractions.Fraction`` or ``int`` (exact mode) or as ``float``
(numeric mode); mixing fractions and floats in one call is rejected.
"""

import json
from fractions import Fraction

from ._spinqw import (
    DivisionByZero,
    PreconditionError,
    UsageError,
    compute_json,
    function_names,
    identity_names,
    verify_json,
)

__all__ = [
    "DivisionByZero",
    "PreconditionError",
    "UsageError",
    "compute",
    "function_names",
    "identity_names",
    "verify",
]

_PARTITION_KEYS = ("lambda", "mu", "nu")


def _scalar_text(value):
    if isinstance(value, bool):
        raise TypeError("booleans are not scalars")
    if isinstance(value, (int, Fraction)):
        value = Fraction(value)
        return str(value.numerator) if value.denominator == 1 else f"{value.numerator}/{value.denominator}"
    if isinstance(value, float):
        return repr(value)
    raise TypeError(f"unsupported scalar type {type(value).__name__}")


def _text(key, value):
    if isinstance(value, str):
        return value
    if key in _PARTITION_KEYS:
        return ",".join(str(int(p)) for p in value)
    if isinstance(value, (list, tuple)):
        return ",".join(_scalar_text(v) for v in value)
    return _scalar_text(value)


def _values(kwargs):
    out = {}
    for key, value in kwargs.items():
        if value is None:
            continue
        key = key.rstrip("_")
        out[key] = _text(key, value)
    return out


def _decode(value, mode):
    if isinstance(value, str):
        return Fraction(value)
    if isinstance(value, dict):
        return complex(value["re"], value["im"])
    return value


def compute(function, *, mode=None, radius=1.0, nodes=64, tol=1e-8, **values):
    """Evaluate ``function`` by every available route.

    Keyword values: q, s, x, u, v (scalars or lists) and lambda_, mu (partitions).
    Returns a dict with ``value``, ``routes`` and ``agreement``.
    """
    doc = json.loads(compute_json(function, _values(values), mode, radius, nodes, tol))
    doc["value"] = _decode(doc["value"], doc["mode"])
    doc["routes"] = {k: _decode(v, doc["mode"]) for k, v in doc["routes"].items()}
    return doc


def verify(name, *, trials=1, seed=0, cutoff=30, tol=1e-10, m=-1, n=-1, mode=None, **values):
    """Run ``trials`` checks of identity ``name``; returns one report dict per trial."""
    lines = verify_json(name, _values(values), trials, seed, cutoff, tol, m, n, mode)
    return [json.loads(line) for line in lines]
