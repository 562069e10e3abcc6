"""Exact rational helpers: parsing, ``num/den`` formatting, JSON conversion."""

from __future__ import annotations

import dataclasses
import enum
from fractions import Fraction

import numpy as np


def to_fraction(value) -> Fraction:
    """Coerce ints, Fractions and strings such as ``"3/4"`` or ``"-2"``.

    Floats are rejected: they would silently smuggle rounding into an exact
    computation.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (bool, float, np.floating)):
        raise TypeError(f"refusing inexact value {value!r}")
    if isinstance(value, (int, np.integer)):
        return Fraction(int(value))
    if isinstance(value, str):
        return Fraction(value.strip())
    raise TypeError(f"cannot convert {value!r} to Fraction")


def fmt(q) -> str:
    """Lowest-terms ``num/den``; integers keep the ``/1``."""
    q = to_fraction(q)
    return f"{q.numerator}/{q.denominator}"


def approx(q, digits: int = 6) -> str:
    q = to_fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    # float() overflows for huge numerators, so go through scientific notation by hand
    try:
        return f"{float(q):.{digits}g}"
    except OverflowError:
        return "inf" if q > 0 else "-inf"


def jsonable(obj):
    """Recursively convert results into JSON-ready data, rationals as strings."""
    if isinstance(obj, Fraction):
        return fmt(obj)
    if isinstance(obj, bool) or obj is None or isinstance(obj, str):
        return obj
    if isinstance(obj, (int, np.integer)):
        # big integers travel as strings so that JSON readers never round them
        return str(int(obj))
    if isinstance(obj, float):
        return obj
    if isinstance(obj, enum.Enum):
        return obj.value
    if isinstance(obj, np.ndarray):
        return [jsonable(v) for v in obj.tolist()]
    if dataclasses.is_dataclass(obj) and not isinstance(obj, type):
        if hasattr(obj, "to_dict"):
            return jsonable(obj.to_dict())
        return {f.name: jsonable(getattr(obj, f.name)) for f in dataclasses.fields(obj)}
    if isinstance(obj, dict):
        return {str(k): jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple, set, frozenset)):
        items = sorted(obj) if isinstance(obj, (set, frozenset)) else obj
        return [jsonable(v) for v in items]
    raise TypeError(f"no JSON form for {type(obj).__name__}")


def dot(u, v) -> Fraction:
    return sum((a * b for a, b in zip(u, v)), Fraction(0))
