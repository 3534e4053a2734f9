"""Exact-arithmetic toolkit for equidissection obstructions of lattice polygons.

The heavy lifting happens in the compiled ``_core`` extension, which speaks
JSON strings for structured data; the wrappers here accept plain Python
containers (vertices as ``(x, y)`` pairs of ints or rational strings) and
return parsed dictionaries.
"""

import json as _json

from ._core import (  # noqa: F401
    ParseError,
    PreconditionError,
    color,
    momentum_p2,
    momentum_torus,
    val2,
)
from . import _core

__all__ = [
    "ParseError",
    "PreconditionError",
    "val2",
    "color",
    "degree",
    "classify",
    "pair_edges",
    "certify",
    "validate",
    "search",
    "momentum_p2",
    "momentum_torus",
]


def _vertices_json(polygon):
    """Accepts either a ``{"vertices": [...]}`` dict or a bare vertex list."""
    vertices = polygon["vertices"] if isinstance(polygon, dict) else polygon
    return _json.dumps({"vertices": [[str(x), str(y)] for x, y in vertices]})


def degree(vertices, transform="E"):
    """Degree of the colored vertex walk of a closed broken line."""
    return _core.degree(_vertices_json(vertices), transform)


def classify(vertices):
    """Cycle-space class of a lattice broken line: ``{"lambda": ..., "mu": ...}``."""
    return _json.loads(_core.classify(_vertices_json(vertices)))


def pair_edges(vertices):
    """Opposite-side pairing as 1-based index pairs, or ``None`` if not balanced."""
    return _core.pair_edges(_vertices_json(vertices))


def certify(vertices):
    """No-odd-equidissection certificate for a simple polygon."""
    return _json.loads(_core.certify(_vertices_json(vertices)))


def validate(dissection):
    """Validity verdict for a claimed dissection (a dict with polygon/triangles)."""
    return _json.loads(_core.validate(_json.dumps(dissection)))


def search(vertices, pieces, denominator=1, budget=10_000_000, first_only=False,
           symmetry=False):
    """Enumerate equal-area dissections into ``pieces`` triangles on the 1/D grid."""
    return _json.loads(
        _core.search(_vertices_json(vertices), pieces, denominator, budget,
                     first_only, symmetry))
