"""JSON (de)serialisation of polytopes.

Rationals travel as strings (``"3/4"``) or JSON integers. Input needs
``vertices`` or ``halfspaces``; output always has both. When input carries
both (as our own output does) the polytope is built from the vertices and the
half-spaces must describe the same set.
"""

import json
from fractions import Fraction

from .errors import DelzantEmbError
from .geometry import HalfSpace, hull_from_vertices, vertices_from_halfspaces
from .linalg import as_fraction

__all__ = ["PolytopeFormatError", "rational_str", "polytope_to_json", "polytope_from_json",
           "loads", "dumps"]


class PolytopeFormatError(DelzantEmbError):
    """Input JSON does not follow the polytope schema."""


def rational_str(x):
    return str(Fraction(x))


def _rational(x):
    if isinstance(x, bool) or not isinstance(x, (int, str)):
        raise PolytopeFormatError(f"rationals must be integers or 'p/q' strings, got {x!r}")
    try:
        return as_fraction(x)
    except (ValueError, ZeroDivisionError) as exc:
        raise PolytopeFormatError(f"bad rational {x!r}: {exc}") from None


def polytope_to_json(p):
    return {
        "dim": p.dim,
        "vertices": [[rational_str(c) for c in v] for v in p.vertices],
        "halfspaces": [
            {"normal": list(h.normal), "offset": rational_str(h.offset)} for h in p.facets
        ],
        "edges": [list(e) for e in p.edges],
    }


def polytope_from_json(data):
    if not isinstance(data, dict):
        raise PolytopeFormatError("polytope JSON must be an object")
    has_v = "vertices" in data
    has_h = "halfspaces" in data
    if not (has_v or has_h):
        raise PolytopeFormatError("polytope JSON needs 'vertices' or 'halfspaces'")
    dim = data.get("dim")
    if dim is not None and (isinstance(dim, bool) or not isinstance(dim, int)):
        raise PolytopeFormatError("'dim' must be an integer")
    if has_v:
        verts = data["vertices"]
        if not isinstance(verts, list) or not all(isinstance(v, list) for v in verts):
            raise PolytopeFormatError("'vertices' must be a list of coordinate lists")
        points = [[_rational(c) for c in v] for v in verts]
        if dim is not None and any(len(v) != dim for v in points):
            raise PolytopeFormatError(f"every vertex must have {dim} coordinates")
        p = hull_from_vertices(points)
        if has_h:
            q = _from_halfspaces(data, p.dim)
            if q.vertices != p.vertices:
                raise PolytopeFormatError("'vertices' and 'halfspaces' describe different polytopes")
        return p
    return _from_halfspaces(data, dim)


def _from_halfspaces(data, dim):
    if dim is None:
        raise PolytopeFormatError("'dim' is required with 'halfspaces'")
    hs = []
    if not isinstance(data["halfspaces"], list):
        raise PolytopeFormatError("'halfspaces' must be a list")
    for h in data["halfspaces"]:
        try:
            normal = h["normal"]
            offset = _rational(h["offset"])
        except (KeyError, TypeError):
            raise PolytopeFormatError("each half-space needs 'normal' and 'offset'") from None
        if not isinstance(normal, list) or not all(
                isinstance(a, int) and not isinstance(a, bool) for a in normal):
            raise PolytopeFormatError("half-space normals must be integer lists")
        try:
            hs.append(HalfSpace(tuple(normal), offset))
        except ValueError as exc:
            raise PolytopeFormatError(str(exc)) from None
    return vertices_from_halfspaces(hs, dim)


def loads(text):
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise PolytopeFormatError(f"malformed JSON: {exc}") from None
    return polytope_from_json(data)


def dumps(p, indent=2):
    return json.dumps(polytope_to_json(p), indent=indent)
