"""Exact positive-solution bounds and counts for sparse polynomial
systems supported on a circuit.

The heavy lifting lives in the compiled extension; this wrapper turns
the JSON-string entry points into plain dictionaries.
"""

import json as _json

from ._core import (
    gale_vector,
    is_circuit,
    max_bound,
    normalized_volumes,
    region_csv,
)
from . import _core as _c

__all__ = [
    "gale_vector",
    "is_circuit",
    "max_bound",
    "normalized_volumes",
    "region_csv",
    "check",
    "bound",
    "count",
    "sharpen",
    "classify2d",
]


def _coerce_matrix(rows):
    return [[str(entry) for entry in row] for row in rows]


def check(points):
    """Gale data and circuit validation for a configuration."""
    return _json.loads(_c.check_json(points))


def bound(points, coefficients):
    """Sharp sign-variation bound report for a concrete system."""
    return _json.loads(_c.bound_json(points, _coerce_matrix(coefficients)))


def count(points, coefficients, max_degree=512):
    """Exact number of positive solutions, with isolating intervals."""
    return _json.loads(_c.count_json(points, _coerce_matrix(coefficients), max_degree))


def sharpen(points, ordering=None, max_degree=512):
    """Construct a system attaining the bound, with its certified cells."""
    return _json.loads(_c.sharpen_json(points, ordering, max_degree))


def classify2d(points):
    """Maximal positive-solution class (2 or 3) of a planar circuit."""
    return _json.loads(_c.classify2d_json(points))
