"""Exact convex polytopes in small dimension.

A :class:`Polytope` carries both descriptions at once: its vertices and its
facet inequalities ``<normal, x> >= offset`` with primitive integer inward
normals. Conversions between the two are brute force over ``dim``-subsets,
which is fine for the dimensions allowed here (at most
:func:`max_dim`, 4 by default).
"""

import os
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

from .errors import (
    ChopTooLarge,
    DegeneratePolytope,
    DimensionMismatch,
    DimensionTooLarge,
    EmptyRegion,
    NotDelzantVertex,
    UnboundedRegion,
)
from .linalg import as_fraction, nullspace, primitive_integer, rank, solve

__all__ = [
    "HalfSpace",
    "Polytope",
    "max_dim",
    "hull_from_vertices",
    "vertices_from_halfspaces",
    "edges",
    "contains_point",
    "contains_polytope",
    "product",
    "affine_image",
    "scale",
    "corner_chop",
]

DEFAULT_MAX_DIM = 4


def max_dim():
    """Dimension cap, overridable through ``DELZANT_EMB_MAX_DIM``."""
    raw = os.environ.get("DELZANT_EMB_MAX_DIM")
    if raw is None or raw.strip() == "":
        return DEFAULT_MAX_DIM
    return int(raw)


def _vec(point):
    return tuple(as_fraction(x) for x in point)


def _dot(a, b):
    return sum(x * y for x, y in zip(a, b))


@dataclass(frozen=True, order=True)
class HalfSpace:
    """The closed half-space ``<normal, x> >= offset``."""

    normal: tuple
    offset: Fraction

    def __post_init__(self):
        if any(int(a) != a for a in self.normal):
            raise ValueError(f"half-space normal must be integral, got {self.normal}")
        normal = tuple(int(a) for a in self.normal)
        offset = as_fraction(self.offset)
        if not normal or all(a == 0 for a in normal):
            raise ValueError("half-space normal must be nonzero")
        # normalise to the primitive normal so equal half-spaces compare equal
        direction, s = primitive_integer(normal)
        object.__setattr__(self, "normal", direction)
        object.__setattr__(self, "offset", offset / s)

    @property
    def dim(self):
        return len(self.normal)

    def value(self, x):
        """Slack ``<normal, x> - offset``; nonnegative inside."""
        return _dot(self.normal, x) - self.offset

    def lift(self, dim, start):
        """Embed into ``dim`` coordinates, occupying ``start .. start+len``."""
        normal = [0] * dim
        normal[start:start + self.dim] = self.normal
        return HalfSpace(tuple(normal), self.offset)


@dataclass(frozen=True)
class Polytope:
    """Full-dimensional convex polytope with exact rational vertices.

    Build instances with :func:`hull_from_vertices` or
    :func:`vertices_from_halfspaces`; the raw constructor trusts its input.
    Vertices are sorted lexicographically and edges are index pairs
    ``(i, j)`` with ``i < j``.
    """

    dim: int
    vertices: tuple
    facets: tuple
    edges: tuple = field(default=())

    def tight_facets(self, i):
        """Indices of the facets containing vertex ``i``."""
        v = self.vertices[i]
        return tuple(k for k, h in enumerate(self.facets) if h.value(v) == 0)

    def neighbours(self, i):
        """Indices of the vertices joined to vertex ``i`` by an edge."""
        out = []
        for a, b in self.edges:
            if a == i:
                out.append(b)
            elif b == i:
                out.append(a)
        return sorted(out)

    def __len__(self):
        return len(self.vertices)


def _check_dim(dim):
    if dim < 1:
        raise DegeneratePolytope("dimension must be at least 1")
    cap = max_dim()
    if dim > cap:
        raise DimensionTooLarge(f"dimension {dim} exceeds the cap of {cap}")


def _affine_rank(points):
    base = points[0]
    return rank([[a - b for a, b in zip(p, base)] for p in points[1:]], len(base))


def _edge_list(dim, vertices, facets):
    tight = [frozenset(k for k, h in enumerate(facets) if h.value(v) == 0) for v in vertices]
    out = []
    for i, j in combinations(range(len(vertices)), 2):
        common = tight[i] & tight[j]
        if len(common) < dim - 1:
            continue
        if rank([facets[k].normal for k in common], dim) == dim - 1:
            out.append((i, j))
    return tuple(out)


def _assemble(dim, vertices, facets):
    vertices = tuple(sorted(set(vertices)))
    facets = tuple(sorted(set(facets)))
    return Polytope(dim, vertices, facets, _edge_list(dim, vertices, facets))


def hull_from_vertices(points):
    """Convex hull of a finite set of rational points.

    Points that are not vertices of the hull are dropped.

    :param points: iterable of coordinate sequences (ints, Fractions or
        ``"p/q"`` strings)
    :raises DegeneratePolytope: if the points do not span their dimension
    :raises DimensionTooLarge: above :func:`max_dim`
    """
    pts = sorted({_vec(p) for p in points})
    if not pts:
        raise DegeneratePolytope("no points given")
    dim = len(pts[0])
    if any(len(p) != dim for p in pts):
        raise DimensionMismatch("points have differing dimensions")
    _check_dim(dim)
    if len(pts) < dim + 1 or _affine_rank(pts) < dim:
        raise DegeneratePolytope(
            f"{len(pts)} distinct point(s) do not span a {dim}-dimensional polytope")

    facets = set()
    for combo in combinations(pts, dim):
        base = combo[0]
        rows = [[a - b for a, b in zip(p, base)] for p in combo[1:]]
        ns = nullspace(rows, dim)
        if len(ns) != 1:
            continue
        normal, _ = primitive_integer(ns[0])
        b = _dot(normal, base)
        vals = [_dot(normal, p) for p in pts]
        if all(v >= b for v in vals):
            facets.add(HalfSpace(normal, b))
        elif all(v <= b for v in vals):
            facets.add(HalfSpace(tuple(-a for a in normal), -b))

    facets = list(facets)
    vertices = []
    for p in pts:
        normals = [h.normal for h in facets if h.value(p) == 0]
        if len(normals) >= dim and rank(normals, dim) == dim:
            vertices.append(p)
    return _assemble(dim, vertices, facets)


def _as_halfspace(h):
    if isinstance(h, HalfSpace):
        return h
    normal, offset = h
    return HalfSpace(tuple(normal), offset)


def vertices_from_halfspaces(halfspaces, dim):
    """Polytope cut out by the inequalities ``<normal, x> >= offset``.

    Redundant inequalities are dropped from the returned facet list.

    :raises UnboundedRegion: if the region is unbounded (this includes
        inequality systems whose normals do not span, which may also be empty)
    :raises EmptyRegion: if no point satisfies every inequality
    :raises DegeneratePolytope: if the region is lower dimensional
    """
    _check_dim(dim)
    hs = sorted({_as_halfspace(h) for h in halfspaces})
    if any(h.dim != dim for h in hs):
        raise DimensionMismatch(f"half-spaces must have dimension {dim}")
    normals = [h.normal for h in hs]
    if len(hs) < dim or rank(normals, dim) < dim:
        raise UnboundedRegion("inequality normals do not span; region contains a line or is empty")

    points = set()
    for combo in combinations(hs, dim):
        x = solve([h.normal for h in combo], [h.offset for h in combo])
        if x is None:
            continue
        x = tuple(x)
        if all(h.value(x) >= 0 for h in hs):
            points.add(x)
    if not points:
        raise EmptyRegion("no point satisfies all inequalities")

    # extreme rays of the recession cone {d : <a, d> >= 0}
    for combo in combinations(normals, dim - 1):
        ns = nullspace([list(a) for a in combo], dim)
        if len(ns) != 1:
            continue
        for sign in (1, -1):
            d = [sign * c for c in ns[0]]
            if all(_dot(a, d) >= 0 for a in normals):
                raise UnboundedRegion(f"region is unbounded along {tuple(str(c) for c in d)}")

    vertices = sorted(points)
    if len(vertices) < dim + 1 or _affine_rank(vertices) < dim:
        raise DegeneratePolytope("region is not full-dimensional")
    facets = []
    for h in hs:
        tight = [v for v in vertices if h.value(v) == 0]
        if len(tight) >= dim and _affine_rank(tight) == dim - 1:
            facets.append(h)
    return _assemble(dim, vertices, facets)


def edges(p):
    """Edge list of ``p`` as sorted vertex-index pairs."""
    return list(p.edges)


def contains_point(p, x):
    x = _vec(x)
    if len(x) != p.dim:
        raise DimensionMismatch(f"point has dimension {len(x)}, polytope {p.dim}")
    return all(h.value(x) >= 0 for h in p.facets)


def contains_polytope(outer, inner):
    """True iff ``inner`` is a subset of ``outer`` (vertex-wise facet check)."""
    if outer.dim != inner.dim:
        raise DimensionMismatch(f"dimensions {outer.dim} and {inner.dim}")
    return all(h.value(v) >= 0 for v in inner.vertices for h in outer.facets)


def product(p, q):
    """Cartesian product ``p x q``."""
    if not isinstance(p, Polytope) or not isinstance(q, Polytope):
        raise DegeneratePolytope("both factors must be full-dimensional polytopes")
    dim = p.dim + q.dim
    _check_dim(dim)
    vertices = [u + v for u in p.vertices for v in q.vertices]
    facets = [h.lift(dim, 0) for h in p.facets] + [h.lift(dim, p.dim) for h in q.facets]
    return _assemble(dim, vertices, facets)


def affine_image(p, matrix, translation=None):
    """Image of ``p`` under ``x -> matrix @ x + translation``.

    The matrix must be invertible; for unimodular matrices the image is
    again described by primitive integer normals.
    """
    n = p.dim
    if len(matrix) != n or any(len(row) != n for row in matrix):
        raise DimensionMismatch(f"need a {n}x{n} matrix")
    b = _vec(translation) if translation is not None else (Fraction(0),) * n
    if len(b) != n:
        raise DimensionMismatch("translation has the wrong dimension")
    a = [[as_fraction(x) for x in row] for row in matrix]
    points = [tuple(_dot(row, v) + bi for row, bi in zip(a, b)) for v in p.vertices]
    return hull_from_vertices(points)


def scale(p, factor):
    """Dilation of ``p`` about the origin by a positive rational factor."""
    factor = as_fraction(factor)
    if factor <= 0:
        raise ValueError("scale factor must be positive")
    return Polytope(
        p.dim,
        tuple(tuple(factor * c for c in v) for v in p.vertices),
        tuple(sorted(HalfSpace(h.normal, factor * h.offset) for h in p.facets)),
        p.edges,
    )


def corner_chop(p, vertex_index, eps):
    """Cut off a smooth vertex at lattice depth ``eps`` (toric blow-up).

    The vertex ``x`` with primitive edge directions ``w_1 .. w_n`` is
    replaced by the points ``x + eps * w_i``. The new facet has the integer
    normal ``u`` with ``<u, w_i> = 1`` for every ``i``.

    :raises NotDelzantVertex: if the vertex is not simple and smooth
    :raises ChopTooLarge: unless ``eps`` is strictly below the shortest
        lattice length of an edge at the vertex
    """
    from .delzant import vertex_data
    from .lattice import is_unimodular

    eps = as_fraction(eps)
    if eps <= 0:
        raise ValueError("chop size must be positive")
    vd = vertex_data(p, vertex_index)
    n = p.dim
    if len(vd.weights) != n:
        raise NotDelzantVertex(f"vertex {vertex_index} meets {len(vd.weights)} edges, expected {n}")
    if not is_unimodular(vd.weights):
        raise NotDelzantVertex(f"edge directions at vertex {vertex_index} are not a lattice basis")
    if eps >= vd.min_edge_length:
        raise ChopTooLarge(
            f"chop size {eps} must be below the shortest edge length {vd.min_edge_length}")
    # u solves W^T u = (1, ..., 1) where W has the weights as columns
    u = solve([list(w) for w in vd.weights], [Fraction(1)] * n)
    u = tuple(int(c) for c in u)
    new = HalfSpace(u, _dot(u, vd.point) + eps)
    return vertices_from_halfspaces(list(p.facets) + [new], n)
