"""Small exact linear algebra over the rationals and the integers.

Matrices are plain lists of rows. Everything is done with
:class:`fractions.Fraction` or ``int``; nothing here ever touches a float.
"""

from fractions import Fraction
from math import gcd

__all__ = [
    "as_fraction",
    "rref",
    "rank",
    "nullspace",
    "solve",
    "det",
    "int_det",
    "matmul",
    "matvec",
    "transpose",
    "inverse",
    "primitive_integer",
]


def as_fraction(x):
    """Coerce ``x`` (int, Fraction or string such as ``"3/4"``) to a Fraction.

    Floats are rejected: they carry binary rounding that would silently break
    exact comparisons.
    """
    if isinstance(x, bool):
        raise TypeError("booleans are not rational coordinates")
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x.strip())
    if isinstance(x, float):
        raise TypeError(f"refusing float {x!r}; pass an int, Fraction or string")
    # numpy integers and similar
    try:
        return Fraction(int(x)) if int(x) == x else Fraction(x)
    except (TypeError, ValueError):
        raise TypeError(f"cannot interpret {x!r} as a rational") from None


def rref(rows, ncols=None):
    """Reduced row echelon form.

    :returns: ``(matrix, pivot_columns)`` with Fraction entries.
    """
    m = [[Fraction(v) for v in row] for row in rows]
    if ncols is None:
        ncols = len(m[0]) if m else 0
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        p = m[r][c]
        m[r] = [v / p for v in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m, pivots


def rank(rows, ncols=None):
    if not rows:
        return 0
    return len(rref(rows, ncols)[1])


def nullspace(rows, ncols):
    """Basis of ``{x : rows @ x = 0}`` as a list of Fraction vectors."""
    if not rows:
        return [[Fraction(int(i == j)) for j in range(ncols)] for i in range(ncols)]
    m, pivots = rref(rows, ncols)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for i, pc in enumerate(pivots):
            v[pc] = -m[i][f]
        basis.append(v)
    return basis


def solve(a, b):
    """Solve the square system ``a x = b``; ``None`` if ``a`` is singular."""
    n = len(a)
    aug = [list(row) + [bi] for row, bi in zip(a, b)]
    m, pivots = rref(aug, n)
    if pivots != list(range(n)):
        return None
    return [m[i][n] for i in range(n)]


def det(a):
    """Determinant of a square rational matrix by fraction elimination."""
    n = len(a)
    m = [[Fraction(v) for v in row] for row in a]
    result = Fraction(1)
    for c in range(n):
        piv = next((i for i in range(c, n) if m[i][c] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != c:
            m[c], m[piv] = m[piv], m[c]
            result = -result
        p = m[c][c]
        result *= p
        for i in range(c + 1, n):
            if m[i][c] != 0:
                f = m[i][c] / p
                m[i] = [x - f * y for x, y in zip(m[i], m[c])]
    return result


def int_det(a):
    """Determinant of a square integer matrix (Bareiss, stays in ``int``)."""
    n = len(a)
    if n == 0:
        return 1
    m = [[int(v) for v in row] for row in a]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if m[i][k] != 0), None)
            if swap is None:
                return 0
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def transpose(a):
    return [list(col) for col in zip(*a)]


def matmul(a, b):
    bt = transpose(b)
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]


def matvec(a, v):
    return [sum(x * y for x, y in zip(row, v)) for row in a]


def inverse(a):
    n = len(a)
    aug = [list(row) + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(a)]
    m, pivots = rref(aug, n)
    if pivots != list(range(n)):
        raise ZeroDivisionError("matrix is singular")
    return [row[n:] for row in m]


def primitive_integer(v):
    """Scale a nonzero rational vector to the primitive integer vector on its ray.

    :returns: ``(direction, scale)`` with ``scale > 0`` and
        ``scale * direction == v``; ``direction`` is a tuple of ints with gcd 1.
    """
    fracs = [as_fraction(x) for x in v]
    if all(x == 0 for x in fracs):
        raise ZeroDivisionError("zero vector has no primitive direction")
    den = 1
    for x in fracs:
        den = den * x.denominator // gcd(den, x.denominator)
    ints = [int(x * den) for x in fracs]
    g = 0
    for x in ints:
        g = gcd(g, x)
    return tuple(x // g for x in ints), Fraction(g, den)
