"""Delzant conditions and per-vertex data.

A polytope is Delzant when it is simple (``n`` edges at every vertex),
edge-rational (edges have rational directions) and smooth (the primitive
edge directions at each vertex form a basis of ``Z^n``).
"""

from dataclasses import dataclass, field
from fractions import Fraction

from .errors import IndexOutOfRange, NotDelzant
from .lattice import primitive_decompose
from .linalg import int_det

__all__ = [
    "VertexData",
    "DelzantReport",
    "vertex_data",
    "all_vertex_data",
    "validate_delzant",
    "require_delzant",
    "euler_characteristic",
]


@dataclass(frozen=True)
class VertexData:
    """A vertex together with its outgoing primitive edge directions.

    ``weights[i]`` and ``edge_lengths[i]`` describe the same edge; weights
    are sorted lexicographically.
    """

    index: int
    point: tuple
    weights: tuple
    edge_lengths: tuple
    min_edge_length: Fraction = field(init=False)

    def __post_init__(self):
        if len(self.weights) != len(self.edge_lengths):
            raise ValueError("weights and edge_lengths differ in length")
        if not self.edge_lengths:
            raise ValueError("a vertex needs at least one edge")
        object.__setattr__(self, "min_edge_length", min(self.edge_lengths))

    @property
    def dim(self):
        return len(self.point)


def vertex_data(p, vertex_index):
    """Weights and lattice edge lengths at vertex ``vertex_index`` of ``p``."""
    if not 0 <= vertex_index < len(p.vertices):
        raise IndexOutOfRange(f"vertex index {vertex_index} not in 0..{len(p.vertices) - 1}")
    x = p.vertices[vertex_index]
    pairs = []
    for j in p.neighbours(vertex_index):
        dec = primitive_decompose([b - a for a, b in zip(x, p.vertices[j])])
        pairs.append((dec.direction, dec.scale))
    pairs.sort()
    return VertexData(
        index=vertex_index,
        point=x,
        weights=tuple(w for w, _ in pairs),
        edge_lengths=tuple(s for _, s in pairs),
    )


def all_vertex_data(p):
    return [vertex_data(p, i) for i in range(len(p.vertices))]


def _fmt_point(x):
    return "(" + ", ".join(str(c) for c in x) + ")"


@dataclass(frozen=True)
class DelzantReport:
    is_simple: bool
    is_edge_rational: bool
    is_smooth: bool
    per_vertex: tuple
    failures: tuple

    @property
    def is_delzant(self):
        return self.is_simple and self.is_edge_rational and self.is_smooth

    def to_json(self):
        return {
            "is_simple": self.is_simple,
            "is_edge_rational": self.is_edge_rational,
            "is_smooth": self.is_smooth,
            "per_vertex": [
                {"vertex": i, "edge_count": k, "abs_det": d} for i, k, d in self.per_vertex
            ],
            "failures": list(self.failures),
        }


def validate_delzant(p):
    """Check the three Delzant conditions and collect witnesses.

    ``per_vertex`` holds ``(index, edge_count, abs_det)`` triples, where
    ``abs_det`` is ``None`` at vertices that do not meet exactly ``n`` edges.
    Smoothness is only reported true when the polytope is simple.
    """
    n = p.dim
    simple = True
    smooth = True
    per_vertex = []
    failures = []
    for vd in all_vertex_data(p):
        k = len(vd.weights)
        label = f"vertex {vd.index} at {_fmt_point(vd.point)}"
        if k != n:
            simple = False
            per_vertex.append((vd.index, k, None))
            failures.append(f"{label}: {k} edges meet, expected {n}")
            continue
        d = abs(int_det([list(w) for w in vd.weights]))
        per_vertex.append((vd.index, k, d))
        if d != 1:
            smooth = False
            failures.append(f"{label}: |det| of edge directions is {d}, expected 1")
    if not simple:
        smooth = False
        failures.append("smoothness not established: polytope is not simple")
    # rational vertices always give rational edge directions
    return DelzantReport(simple, True, smooth, tuple(per_vertex), tuple(failures))


def require_delzant(p):
    report = validate_delzant(p)
    if not report.is_delzant:
        raise NotDelzant("; ".join(report.failures))
    return report


def euler_characteristic(p):
    """Euler characteristic of the toric manifold over ``p``: its vertex count."""
    require_delzant(p)
    return len(p.vertices)
