"""Independent brute-force oracles used by the tests.

None of these go through the code paths they are used to check.
"""

from fractions import Fraction
from itertools import combinations, permutations, product
from math import floor, ceil, lcm


def perm_det(m):
    """Leibniz-formula determinant."""
    n = len(m)
    total = 0
    for perm in permutations(range(n)):
        inversions = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        term = -1 if inversions % 2 else 1
        for i in range(n):
            term *= m[i][perm[i]]
        total += term
    return total


def _barycentric(point, simplex):
    """Exact affine coordinates of ``point`` w.r.t. affinely independent ``simplex``.

    Solves by Cramer's rule on the normal equations restricted to a square
    minor; returns None if ``point`` is off the affine hull.
    """
    base = simplex[0]
    cols = [[a - b for a, b in zip(p, base)] for p in simplex[1:]]
    rhs = [a - b for a, b in zip(point, base)]
    k, d = len(cols), len(base)
    if k == 0:
        return [Fraction(1)] if all(r == 0 for r in rhs) else None
    for rows in combinations(range(d), k):
        m = [[cols[j][i] for j in range(k)] for i in rows]
        dm = perm_det(m)
        if dm == 0:
            continue
        coeffs = []
        for j in range(k):
            mj = [row[:] for row in m]
            for r, i in enumerate(rows):
                mj[r][j] = rhs[i]
            coeffs.append(Fraction(perm_det(mj), dm))
        recon = [sum(coeffs[j] * cols[j][i] for j in range(k)) for i in range(d)]
        if recon != rhs:
            return None
        return [1 - sum(coeffs)] + coeffs
    return None


def in_hull(point, others):
    """Caratheodory: ``point`` in conv(others) iff in some simplex on <= d+1 of them."""
    point = [Fraction(c) for c in point]
    others = [[Fraction(c) for c in o] for o in others]
    d = len(point)
    for k in range(1, d + 2):
        for sub in combinations(others, k):
            bc = _barycentric(point, list(sub))
            if bc is not None and all(c >= 0 for c in bc):
                return True
    return False


def hull_vertices(points):
    """Points that are not convex combinations of the remaining points."""
    pts = sorted({tuple(Fraction(c) for c in p) for p in points})
    return [p for p in pts if not in_hull(p, [q for q in pts if q != p])]


def lattice_length_by_counting(x, y):
    """Lattice length via counting lattice points on the dilated segment.

    After scaling by the common denominator ``D`` both endpoints are
    integral, and an integral segment of lattice length ``L`` contains
    exactly ``L + 1`` lattice points.
    """
    x = [Fraction(c) for c in x]
    y = [Fraction(c) for c in y]
    D = 1
    for c in x + y:
        D = lcm(D, c.denominator)
    X = [int(c * D) for c in x]
    Y = [int(c * D) for c in y]
    diff = [b - a for a, b in zip(X, Y)]
    # walk the segment parameter over every step that lands on an integer in
    # the first nonzero coordinate, then check the others
    k = next(i for i, v in enumerate(diff) if v != 0)
    count = 0
    for step in range(abs(diff[k]) + 1):
        s = Fraction(step, abs(diff[k]))
        if all((X[i] + s * diff[i]).denominator == 1 for i in range(len(X))):
            count += 1
    return Fraction(count - 1, D)


def box_points(lo, hi, dim):
    return list(product(range(lo, hi + 1), repeat=dim))
