"""Generators for the standard Delzant polytopes.

Each generator returns a validated :class:`~delzant_emb.geometry.Polytope`.
:func:`build` evaluates a small expression language such as
``"chopped(cube(2, 2), (2, 2), 1/2)"`` so catalog entries can be named on the
command line.
"""

import ast
from fractions import Fraction

from .delzant import validate_delzant
from .errors import DelzantEmbError, InvalidParameters, UnknownEntry
from .geometry import Polytope, corner_chop, hull_from_vertices, product
from .linalg import as_fraction

__all__ = [
    "simplex",
    "cube",
    "cp_product",
    "hirzebruch",
    "pentagon",
    "chopped",
    "CATALOG",
    "build",
]

PENTAGON_VERTICES = ((0, 0), (2, 0), (2, 1), (1, 2), (0, 2))


def _positive(name, value):
    value = as_fraction(value)
    if value <= 0:
        raise InvalidParameters(f"{name} must be positive, got {value}")
    return value


def _dimension(name, value):
    if isinstance(value, Fraction) and value.denominator == 1:
        value = int(value)
    if not isinstance(value, int) or isinstance(value, bool) or value < 1:
        raise InvalidParameters(f"{name} must be a positive integer, got {value}")
    return value


def _checked(p):
    report = validate_delzant(p)
    if not report.is_delzant:
        raise InvalidParameters("generated polytope is not Delzant: " + "; ".join(report.failures))
    return p


def simplex(n, lam=1):
    """``conv{0, lam e_1, ..., lam e_n}``, the polytope of ``CP^n``."""
    n = _dimension("n", n)
    lam = _positive("lam", lam)
    pts = [(0,) * n] + [tuple(lam if j == i else 0 for j in range(n)) for i in range(n)]
    return _checked(hull_from_vertices(pts))


def cube(n, lam=1):
    """``[0, lam]^n``, the polytope of ``(CP^1)^n``."""
    n = _dimension("n", n)
    segment = simplex(1, lam)
    p = segment
    for _ in range(n - 1):
        p = product(p, segment)
    return _checked(p)


def cp_product(n, m, lam=1):
    """``simplex(n, lam) x simplex(m, lam)``, the polytope of ``CP^n x CP^m``."""
    return _checked(product(simplex(n, lam), simplex(m, lam)))


def hirzebruch(a, b, k):
    """Trapezoid ``conv{(0,0), (a + k b, 0), (a, b), (0, b)}``.

    :param a: top edge length (> 0)
    :param b: height (> 0)
    :param k: twisting integer (>= 0); ``k = 0`` gives a rectangle
    """
    a = _positive("a", a)
    b = _positive("b", b)
    k = as_fraction(k)
    if k.denominator != 1 or k < 0:
        raise InvalidParameters(f"k must be a nonnegative integer, got {k}")
    return _checked(hull_from_vertices([(0, 0), (a + k * b, 0), (a, b), (0, b)]))


def pentagon():
    """Square ``[0, 2]^2`` with the corner at ``(2, 2)`` chopped at depth 1."""
    return _checked(hull_from_vertices(PENTAGON_VERTICES))


def chopped(base, vertex, eps):
    """Corner chop of ``base`` at ``vertex`` (an index or a coordinate tuple)."""
    if not isinstance(base, Polytope):
        raise InvalidParameters("chopped() needs a polytope as its first argument")
    if isinstance(vertex, (tuple, list)):
        point = tuple(as_fraction(c) for c in vertex)
        if point not in base.vertices:
            raise InvalidParameters(f"{vertex} is not a vertex of the base polytope")
        index = base.vertices.index(point)
    else:
        if isinstance(vertex, Fraction) and vertex.denominator == 1:
            vertex = int(vertex)
        if not isinstance(vertex, int) or isinstance(vertex, bool) or vertex < 0:
            raise InvalidParameters(f"vertex must be an index or a coordinate tuple, got {vertex!r}")
        index = vertex
    try:
        return _checked(corner_chop(base, index, eps))
    except InvalidParameters:
        raise
    except DelzantEmbError as exc:
        raise InvalidParameters(str(exc)) from exc


CATALOG = {
    "simplex": simplex,
    "cube": cube,
    "cp_product": cp_product,
    "hirzebruch": hirzebruch,
    "pentagon": pentagon,
    "chopped": chopped,
}


def _eval(node):
    if isinstance(node, ast.Call):
        if not isinstance(node.func, ast.Name):
            raise InvalidParameters("only plain catalog names may be called")
        name = node.func.id
        if name not in CATALOG:
            raise UnknownEntry(f"unknown catalog entry {name!r}; known: {', '.join(sorted(CATALOG))}")
        if node.keywords:
            kwargs = {kw.arg: _eval(kw.value) for kw in node.keywords}
        else:
            kwargs = {}
        args = [_eval(a) for a in node.args]
        try:
            return CATALOG[name](*args, **kwargs)
        except TypeError as exc:
            raise InvalidParameters(f"{name}: {exc}") from None
    if isinstance(node, ast.Name):
        return _eval(ast.Call(func=node, args=[], keywords=[]))
    if isinstance(node, ast.Constant):
        if isinstance(node.value, bool) or not isinstance(node.value, (int, str)):
            raise InvalidParameters(f"unsupported literal {node.value!r}; use integers or 'p/q'")
        return as_fraction(node.value) if isinstance(node.value, str) else node.value
    if isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.USub, ast.UAdd)):
        v = _eval(node.operand)
        return -v if isinstance(node.op, ast.USub) else v
    if isinstance(node, ast.BinOp) and isinstance(node.op, ast.Div):
        return Fraction(_eval(node.left)) / Fraction(_eval(node.right))
    if isinstance(node, (ast.Tuple, ast.List)):
        return tuple(_eval(e) for e in node.elts)
    raise InvalidParameters(f"unsupported expression: {ast.dump(node)}")


def build(expr):
    """Evaluate a catalog expression, e.g. ``"hirzebruch(1, 1, 1)"`` or ``"pentagon"``."""
    try:
        tree = ast.parse(expr.strip(), mode="eval")
    except SyntaxError as exc:
        raise InvalidParameters(f"cannot parse catalog expression {expr!r}: {exc.msg}") from None
    result = _eval(tree.body)
    if not isinstance(result, Polytope):
        raise InvalidParameters(f"{expr!r} does not describe a polytope")
    return result
