"""Exact distances between quadrics.

Problems are dicts in the same layout as the ``qdist`` command line input.
Reports come back as dicts; rational values are strings like ``"-3/7"``.
"""

import json
from fractions import Fraction

from ._core import DegenerateError, run
from . import _core

__all__ = ["DegenerateError", "distance", "intersect", "polynomial", "run", "rational"]


def _text(problem):
    return problem if isinstance(problem, str) else json.dumps(problem, default=str)


def distance(problem, bits=None, exact=False):
    return json.loads(_core.distance(_text(problem), bits, exact))


def intersect(problem):
    return json.loads(_core.intersect(_text(problem)))


def polynomial(problem):
    """Coefficients of F(z), constant term first, as Fractions."""
    report = json.loads(_core.polynomial(_text(problem)))
    return [Fraction(c) for c in report["F"]["coefficients"]]


def rational(value):
    """Fraction from a report field (a string or an approximation record)."""
    if isinstance(value, dict):
        value = value["value"]
    return Fraction(value)
