"""Integer-lattice primitives: primitive directions, lattice lengths, unimodularity.

The lattice length of a rational segment ``[x, y]`` is the rational number
``d`` such that ``y - x = d * u`` with ``u`` a primitive integer vector. Any
primitive vector can be completed to a basis of ``Z^n``, so ``d`` is also the
length of ``[x, y]`` after moving it onto the first coordinate axis with a
matrix of determinant one.
"""

import random
from dataclasses import dataclass
from fractions import Fraction

from .errors import DimensionMismatch, ZeroSegment, ZeroVector
from .linalg import as_fraction, int_det, primitive_integer

__all__ = [
    "PrimitiveDecomposition",
    "primitive_decompose",
    "sl_length",
    "is_unimodular",
    "random_unimodular",
]


@dataclass(frozen=True)
class PrimitiveDecomposition:
    """``vector == scale * direction`` with ``direction`` primitive."""

    direction: tuple
    scale: Fraction

    def vector(self):
        return tuple(self.scale * d for d in self.direction)


def primitive_decompose(v):
    """Split a nonzero rational vector into primitive direction and positive scale.

    The direction keeps the orientation of ``v``, so edge directions read off
    a vertex always point away from it.

    >>> primitive_decompose(["1/2", "1/2"])
    PrimitiveDecomposition(direction=(1, 1), scale=Fraction(1, 2))
    """
    v = [as_fraction(x) for x in v]
    if not v:
        raise ZeroVector("empty vector")
    try:
        direction, scale = primitive_integer(v)
    except ZeroDivisionError:
        raise ZeroVector("zero vector has no primitive decomposition") from None
    return PrimitiveDecomposition(direction, scale)


def sl_length(x, y):
    """Lattice length of the segment from ``x`` to ``y`` (symmetric, unsigned)."""
    if len(x) != len(y):
        raise DimensionMismatch(f"points of dimension {len(x)} and {len(y)}")
    diff = [as_fraction(b) - as_fraction(a) for a, b in zip(x, y)]
    if all(d == 0 for d in diff):
        raise ZeroSegment("segment endpoints coincide")
    return primitive_decompose(diff).scale


def is_unimodular(vectors):
    """True iff the integer vectors form a basis of ``Z^n`` (``|det| == 1``)."""
    n = len(vectors)
    if n == 0 or any(len(v) != n for v in vectors):
        raise DimensionMismatch(f"need n vectors of length n, got {[len(v) for v in vectors]}")
    return abs(int_det([list(v) for v in vectors])) == 1


def random_unimodular(n, seed, magnitude_bound=3):
    """Deterministic pseudo-random matrix in ``GL(n, Z)``.

    Built from random elementary shears followed by a random signed
    permutation. A shear that would push an entry above ``magnitude_bound``
    in absolute value is skipped, so the bound always holds when
    ``magnitude_bound >= 1``.

    :param n: size of the matrix
    :param seed: seed of the private RNG; equal seeds give equal matrices
    :param magnitude_bound: cap on entry absolute values
    :returns: list of ``n`` integer rows
    """
    if n < 1:
        raise ValueError("n must be positive")
    rng = random.Random(seed)
    m = [[int(i == j) for j in range(n)] for i in range(n)]
    if n > 1:
        for _ in range(6 * n):
            i, j = rng.sample(range(n), 2)
            c = rng.choice((-2, -1, 1, 2))
            row = [a + c * b for a, b in zip(m[i], m[j])]
            if max(abs(a) for a in row) <= magnitude_bound:
                m[i] = row
    perm = list(range(n))
    rng.shuffle(perm)
    signs = [rng.choice((-1, 1)) for _ in range(n)]
    return [[signs[i] * a for a in m[perm[i]]] for i in range(n)]
