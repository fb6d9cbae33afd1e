"""The embedding-count step function of a Delzant polytope.

Radii are handled through ``t = r**2`` so every breakpoint is rational. For a
vertex ``x`` let ``m(x)`` be the smallest lattice length of an edge at ``x``.
A closed ball of size ``t`` fits equivariantly at ``x`` iff ``m(x) > t``
(``m(x) >= t`` for the open ball), and each fitting vertex contributes
``n!`` components, one per way of matching the coordinate axes of the ball
with the edge directions at ``x``. Every component is a copy of ``T^n``.
"""

from bisect import bisect_left, bisect_right
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations
from math import factorial, isqrt

from .delzant import all_vertex_data, require_delzant
from .errors import NegativeRadius, NonSimpleVertex, NotDelzantVertex
from .geometry import Polytope, contains_polytope, hull_from_vertices
from .lattice import is_unimodular
from .linalg import as_fraction, int_det

__all__ = [
    "CLOSED",
    "OPEN",
    "StepFunction",
    "EmbeddingSpaceDescriptor",
    "BallImage",
    "c_p",
    "emb_function",
    "emb_at",
    "embedding_space",
    "ball_momentum_image",
    "standard_ball_polytope",
    "check_affine_correspondence",
    "plateau_thresholds",
    "sqrt_display",
]

CLOSED = "closed"
OPEN = "open"


def _mode(mode):
    if mode not in (CLOSED, OPEN):
        raise ValueError(f"mode must be {CLOSED!r} or {OPEN!r}, got {mode!r}")
    return mode


def _t(t):
    t = as_fraction(t)
    if t < 0:
        raise NegativeRadius(f"t = r^2 must be nonnegative, got {t}")
    return t


def sqrt_display(t):
    """Human-readable square root of a nonnegative rational.

    Exact when ``t`` is a rational square, otherwise ``"sqrt(t)"``.
    """
    t = as_fraction(t)
    rn, rd = isqrt(t.numerator), isqrt(t.denominator)
    if rn * rn == t.numerator and rd * rd == t.denominator:
        return str(Fraction(rn, rd))
    return f"sqrt({t})"


@dataclass(frozen=True)
class StepFunction:
    """``t -> n! * #{vertices with min edge length > t}``, stored by its drops.

    ``thresholds`` are the distinct per-vertex minimum edge lengths in
    increasing order and ``drop_counts[j]`` is how many vertices have
    minimum length ``thresholds[j]``.
    """

    n: int
    chi: int
    thresholds: tuple
    drop_counts: tuple

    def __post_init__(self):
        if list(self.thresholds) != sorted(set(self.thresholds)):
            raise ValueError("thresholds must be strictly increasing")
        if len(self.thresholds) != len(self.drop_counts):
            raise ValueError("thresholds and drop_counts differ in length")
        if any(c <= 0 for c in self.drop_counts) or sum(self.drop_counts) != self.chi:
            raise ValueError("drop_counts must be positive and sum to chi")

    @property
    def factorial(self):
        return factorial(self.n)

    def surviving(self, t, mode=CLOSED):
        """Number of vertices that still admit a ball of size ``t``."""
        t = _t(t)
        if _mode(mode) == CLOSED:
            dropped = bisect_right(self.thresholds, t)
        else:
            dropped = bisect_left(self.thresholds, t)
        return self.chi - sum(self.drop_counts[:dropped])

    def __call__(self, t, mode=CLOSED):
        return self.factorial * self.surviving(t, mode)

    def pieces(self):
        """``[(t_lo, t_hi, value), ...]`` in closed mode; ``t_hi`` of the last piece is ``None``."""
        edges = [Fraction(0)] + list(self.thresholds)
        out = []
        for k, lo in enumerate(edges):
            hi = edges[k + 1] if k + 1 < len(edges) else None
            if hi == lo:
                continue
            out.append((lo, hi, self(lo)))
        return out

    def to_json(self):
        pieces = []
        for lo, hi, value in self.pieces():
            pieces.append({
                "t_interval": [str(lo), "inf" if hi is None else str(hi)],
                "r_interval_display": [sqrt_display(lo), "inf" if hi is None else sqrt_display(hi)],
                "value": value,
            })
        return {
            "n": self.n,
            "chi": self.chi,
            "factorial": self.factorial,
            "thresholds_t": [str(t) for t in self.thresholds],
            "drop_counts": list(self.drop_counts),
            "pieces": pieces,
        }


@dataclass(frozen=True)
class EmbeddingSpaceDescriptor:
    """Homotopy type of the ball-embedding space: ``component_count`` copies of ``T^n``."""

    n: int
    t: Fraction
    mode: str
    qualifying_vertices: tuple
    qualifying_points: tuple
    permutation_labels: tuple

    @property
    def components_per_vertex(self):
        return factorial(self.n)

    @property
    def component_count(self):
        return self.components_per_vertex * len(self.qualifying_vertices)

    @property
    def component_type(self):
        return f"T^{self.n}"

    def to_json(self):
        return {
            "t": str(self.t),
            "r_display": sqrt_display(self.t),
            "mode": self.mode,
            "n": self.n,
            "component_count": self.component_count,
            "component_type": self.component_type,
            "components_per_vertex": self.components_per_vertex,
            "qualifying_vertices": list(self.qualifying_vertices),
            "qualifying_points": [[str(c) for c in x] for x in self.qualifying_points],
            "permutation_labels": [
                {
                    "vertex": v,
                    "permutations": [
                        {"perm": list(perm), "images": [list(w) for w in images]}
                        for perm, images in labels
                    ],
                }
                for v, labels in zip(self.qualifying_vertices, self.permutation_labels)
            ],
        }


@dataclass(frozen=True)
class BallImage:
    """Moment image ``conv{x, x + t w_1, ..., x + t w_n}`` of a ball centred over ``x``.

    ``contained`` is ``None`` when no ambient polytope was supplied.
    """

    base: tuple
    t: Fraction
    simplex: Polytope
    contained: object = None


def c_p(vd, t, mode=CLOSED):
    """1 if a ball of size ``t`` fits at the vertex, else 0."""
    t = _t(t)
    if _mode(mode) == CLOSED:
        return int(vd.min_edge_length > t)
    return int(vd.min_edge_length >= t)


def emb_function(p):
    """Step function of a Delzant polytope.

    :raises NotDelzant: if ``p`` fails a Delzant condition
    """
    require_delzant(p)
    counts = Counter(vd.min_edge_length for vd in all_vertex_data(p))
    thresholds = tuple(sorted(counts))
    return StepFunction(
        n=p.dim,
        chi=len(p.vertices),
        thresholds=thresholds,
        drop_counts=tuple(counts[t] for t in thresholds),
    )


def emb_at(sf, t, mode=CLOSED):
    return sf(t, mode)


def _check_weights(vd):
    n = vd.dim
    if len(vd.weights) != n:
        raise NonSimpleVertex(f"vertex {vd.index} has {len(vd.weights)} edges, expected {n}")
    if not is_unimodular(vd.weights):
        d = abs(int_det([list(w) for w in vd.weights]))
        raise NotDelzantVertex(f"edge directions at vertex {vd.index} have |det| = {d}")


def embedding_space(p, t, mode=CLOSED):
    """Describe the space of equivariant ball embeddings of size ``t`` into ``p``.

    Each qualifying vertex carries its ``n!`` labels ``(perm, images)``
    where ``images[i] = weights[perm[i]]`` is the edge direction that the
    ``i``-th coordinate axis of the ball is sent to.
    """
    require_delzant(p)
    t = _t(t)
    _mode(mode)
    verts, points, labels = [], [], []
    for vd in all_vertex_data(p):
        if not c_p(vd, t, mode):
            continue
        verts.append(vd.index)
        points.append(vd.point)
        labels.append(tuple(
            (perm, tuple(vd.weights[k] for k in perm))
            for perm in permutations(range(p.dim))
        ))
    return EmbeddingSpaceDescriptor(p.dim, t, mode, tuple(verts), tuple(points), tuple(labels))


def ball_momentum_image(vd, t, polytope=None):
    """Simplex swept out in moment space by a ball of size ``t`` at the vertex.

    :param polytope: if given, ``contained`` reports whether the simplex lies
        inside it
    """
    t = _t(t)
    if t == 0:
        raise NegativeRadius("ball size must be positive")
    _check_weights(vd)
    x = vd.point
    pts = [x] + [tuple(a + t * w for a, w in zip(x, wt)) for wt in vd.weights]
    simplex = hull_from_vertices(pts)
    contained = None if polytope is None else contains_polytope(polytope, simplex)
    return BallImage(x, t, simplex, contained)


def standard_ball_polytope(n, t):
    """``conv{0, t e_1, ..., t e_n}``: the moment image of the standard ball with ``r**2 = t``."""
    t = _t(t)
    if n < 1 or t == 0:
        raise ValueError("need n >= 1 and t > 0")
    pts = [tuple(Fraction(0) for _ in range(n))]
    pts += [tuple(t if j == i else Fraction(0) for j in range(n)) for i in range(n)]
    return hull_from_vertices(pts)


def check_affine_correspondence(vd, perm, t):
    """Check that ``y -> x + sum_i y_i w_perm(i)`` carries the standard ball
    simplex onto the ball image at the vertex and has a unimodular linear part.
    """
    _check_weights(vd)
    n = vd.dim
    perm = tuple(perm)
    if sorted(perm) != list(range(n)):
        raise ValueError(f"{perm} is not a permutation of 0..{n - 1}")
    cols = [vd.weights[perm[i]] for i in range(n)]
    linear = [[cols[j][i] for j in range(n)] for i in range(n)]
    if abs(int_det(linear)) != 1:
        return False

    def apply(y):
        return tuple(xi + sum(row[j] * y[j] for j in range(n)) for xi, row in zip(vd.point, linear))

    source = standard_ball_polytope(n, t)
    target = ball_momentum_image(vd, t).simplex
    return sorted(apply(y) for y in source.vertices) == sorted(target.vertices)


def plateau_thresholds(sf):
    """``(t_low, t_high)``: the function is maximal on ``[0, t_low)`` and zero from ``t_high`` on."""
    return sf.thresholds[0], sf.thresholds[-1]
