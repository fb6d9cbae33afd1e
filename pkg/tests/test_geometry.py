from fractions import Fraction
from itertools import combinations

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st
from scipy.spatial import ConvexHull

from delzant_emb import build
from delzant_emb.errors import (
    ChopTooLarge, DegeneratePolytope, DimensionMismatch, DimensionTooLarge, EmptyRegion,
    NotDelzantVertex, UnboundedRegion,
)
from delzant_emb.geometry import (
    HalfSpace, affine_image, contains_point, contains_polytope, corner_chop, edges,
    hull_from_vertices, product, scale, vertices_from_halfspaces,
)
from delzant_emb.lattice import random_unimodular
from delzant_emb.linalg import rank
from oracles import hull_vertices, in_hull

F = Fraction
PENTAGON = [(0, 0), (2, 0), (2, 1), (1, 2), (0, 2)]


def fr(points):
    return sorted(tuple(F(c) for c in p) for p in points)


def scipy_facet_count(points):
    hull = ConvexHull(np.array([[float(c) for c in p] for p in points]))
    return len({tuple(np.round(eq, 9)) for eq in hull.equations})


def test_pentagon_hull():
    p = hull_from_vertices(PENTAGON)
    assert p.dim == 2
    assert list(p.vertices) == fr(PENTAGON)
    assert len(p.facets) == 5
    assert len(p.edges) == 5
    assert all(len(p.neighbours(i)) == 2 for i in range(5))
    assert {(h.normal, h.offset) for h in p.facets} == {
        ((1, 0), 0), ((0, 1), 0), ((-1, 0), -2), ((0, -1), -2), ((-1, -1), -3)}


def test_unit_simplex_facets():
    p = hull_from_vertices([(0, 0), (1, 0), (0, 1)])
    assert {(h.normal, h.offset) for h in p.facets} == {((1, 0), 0), ((0, 1), 0), ((-1, -1), -1)}


def test_non_vertices_discarded():
    pts = [(0, 0), (2, 0), (0, 2), (1, 1)]
    p = hull_from_vertices(pts)
    assert list(p.vertices) == fr([(0, 0), (0, 2), (2, 0)])
    assert list(p.vertices) == hull_vertices(pts)


def test_interior_and_duplicate_points_discarded():
    pts = [(0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1), ("1/5", "1/5", "1/5"), (1, 0, 0)]
    assert len(hull_from_vertices(pts).vertices) == 4


@settings(max_examples=60, deadline=None)
@given(st.integers(2, 3).flatmap(lambda d: st.lists(
    st.lists(st.integers(-3, 3), min_size=d, max_size=d).map(tuple), min_size=d + 2, max_size=8)))
def test_hull_vertices_match_caratheodory_oracle(pts):
    d = len(pts[0])
    uniq = sorted(set(pts))
    if len(uniq) <= d or rank([[a - b for a, b in zip(p, uniq[0])] for p in uniq[1:]]) < d:
        with pytest.raises(DegeneratePolytope):
            hull_from_vertices(pts)
        return
    p = hull_from_vertices(pts)
    assert list(p.vertices) == hull_vertices(pts)
    assert len(p.facets) == scipy_facet_count(p.vertices)
    for v in p.vertices:
        assert all(h.value(v) >= 0 for h in p.facets)
        assert sum(h.value(v) == 0 for h in p.facets) >= d


def test_hull_errors(monkeypatch):
    with pytest.raises(DegeneratePolytope):
        hull_from_vertices([(1, 1)])
    with pytest.raises(DegeneratePolytope):
        hull_from_vertices([(0, 0), (1, 1), (2, 2)])
    with pytest.raises(DimensionTooLarge):
        hull_from_vertices([tuple(int(i == j) for j in range(5)) for i in range(5)] + [(0,) * 5])
    monkeypatch.setenv("DELZANT_EMB_MAX_DIM", "2")
    with pytest.raises(DimensionTooLarge):
        hull_from_vertices([(0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1)])


def test_halfspace_normalises_to_primitive():
    h = HalfSpace((2, 4), 6)
    assert h.normal == (1, 2) and h.offset == 3
    with pytest.raises(ValueError):
        HalfSpace((0, 0), 1)
    with pytest.raises(ValueError):
        HalfSpace((F(1, 2), 1), 1)


def test_unit_square_from_halfspaces():
    p = vertices_from_halfspaces([((1, 0), 0), ((0, 1), 0), ((-1, 0), -1), ((0, -1), -1)], 2)
    assert list(p.vertices) == fr([(0, 0), (0, 1), (1, 0), (1, 1)])
    assert len(p.edges) == 4
    # diagonals are not edges
    assert (0, 3) not in p.edges and (1, 2) not in p.edges


def test_pentagon_halfspace_round_trip():
    p = hull_from_vertices(PENTAGON)
    q = vertices_from_halfspaces(p.facets, 2)
    assert q == p


def test_redundant_halfspaces_dropped():
    hs = [((1, 0), 0), ((0, 1), 0), ((-1, -1), -1), ((-1, 0), -5), ((1, 1), -3)]
    p = vertices_from_halfspaces(hs, 2)
    assert len(p.facets) == 3


def test_halfspace_errors():
    with pytest.raises(UnboundedRegion):
        vertices_from_halfspaces([((1, 0), 0), ((0, 1), 0)], 2)
    with pytest.raises(UnboundedRegion):
        vertices_from_halfspaces([((1, 0), 0), ((0, 1), 0), ((-1, 1), -1)], 2)
    with pytest.raises(EmptyRegion):
        vertices_from_halfspaces([((1, 0), 0), ((0, 1), 0), ((-1, -1), 1)], 2)
    with pytest.raises(DegeneratePolytope):
        vertices_from_halfspaces([((1, 0), 0), ((0, 1), 0), ((-1, -1), 0)], 2)


def test_round_trip_on_catalog(catalog):
    for expr, p in catalog.items():
        assert vertices_from_halfspaces(p.facets, p.dim).vertices == p.vertices, expr


def test_edges_catalog_invariants(catalog):
    for p in catalog.values():
        for i, j in edges(p):
            common = set(p.tight_facets(i)) & set(p.tight_facets(j))
            assert rank([p.facets[k].normal for k in common], p.dim) == p.dim - 1
        if p.dim == 2:
            assert all(len(p.tight_facets(i)) == 2 for i in range(len(p.vertices)))


def test_three_simplex_edges():
    p = hull_from_vertices([(0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1)])
    assert edges(p) == list(combinations(range(4), 2))


def test_pentagon_edges_form_cycle():
    p = hull_from_vertices(PENTAGON)
    seen, cur, prev = [0], 0, None
    while True:
        nxt = [j for j in p.neighbours(cur) if j != prev][0]
        if nxt == 0:
            break
        seen.append(nxt)
        prev, cur = cur, nxt
    assert sorted(seen) == list(range(5))


def test_contains_point():
    p = hull_from_vertices(PENTAGON)
    assert contains_point(p, (1, 1))
    assert not contains_point(p, (2, 2))
    assert contains_point(p, p.vertices[0])
    assert contains_point(p, ("3/2", "3/2"))
    assert not contains_point(p, ("3/2", "8/5"))
    with pytest.raises(DimensionMismatch):
        contains_point(p, (1, 1, 1))


def test_contains_polytope():
    p = hull_from_vertices(PENTAGON)
    assert contains_polytope(p, hull_from_vertices([(0, 0), (2, 0), (0, 2)]))
    assert not contains_polytope(p, hull_from_vertices([(0, 0), (3, 0), (0, 3)]))
    assert contains_polytope(p, p)
    with pytest.raises(DimensionMismatch):
        contains_polytope(p, build("simplex(3, 1)"))


def test_contains_polytope_agrees_with_sampling(catalog, rng):
    for outer in catalog.values():
        for inner in catalog.values():
            if inner.dim != outer.dim or not contains_polytope(outer, inner):
                continue
            for _ in range(100):
                w = [F(rng.randint(0, 20)) for _ in inner.vertices]
                if sum(w) == 0:
                    w[0] = F(1)
                s = sum(w)
                x = [sum(wi * v[k] for wi, v in zip(w, inner.vertices)) / s for k in range(inner.dim)]
                assert contains_point(outer, x)


def test_product_square():
    seg = hull_from_vertices([(0,), (3,)])
    sq = product(seg, seg)
    assert list(sq.vertices) == fr([(0, 0), (0, 3), (3, 0), (3, 3)])
    assert len(sq.facets) == 4


def test_product_prism_counts():
    p = product(build("simplex(1, 1)"), build("simplex(2, 1)"))
    assert len(p.vertices) == 6
    assert len(p.facets) == 5 == scipy_facet_count(p.vertices)
    assert len(p.edges) == 9
    assert hull_from_vertices(p.vertices) == p


def test_product_vertex_count(catalog):
    a = catalog["hirzebruch(1, 1, 1)"]
    b = catalog["simplex(1, 1)"]
    assert len(product(a, b).vertices) == len(a.vertices) * len(b.vertices)
    with pytest.raises(DimensionTooLarge):
        product(catalog["cube(3, 1)"], catalog["hirzebruch(1, 1, 1)"])
    with pytest.raises(DegeneratePolytope):
        product(a, (F(1),))


def test_corner_chop_blowup_gives_pentagon():
    sq = build("cube(2, 2)")
    p = corner_chop(sq, sq.vertices.index((2, 2)), 1)
    assert list(p.vertices) == fr(PENTAGON)


def test_corner_chop_other_corner():
    sq = build("cube(2, 2)")
    p = corner_chop(sq, sq.vertices.index((0, 0)), F(1, 2))
    expected = [(F(1, 2), 0), (0, F(1, 2)), (2, 0), (2, 2), (0, 2)]
    assert list(p.vertices) == fr(expected)
    assert p == hull_from_vertices(expected)


def test_corner_chop_too_large():
    sq = build("cube(2, 1)")
    with pytest.raises(ChopTooLarge):
        corner_chop(sq, sq.vertices.index((0, 0)), 1)


def test_corner_chop_non_smooth_vertex():
    tri = hull_from_vertices([(0, 0), (1, 0), (0, 2)])
    with pytest.raises(NotDelzantVertex):
        corner_chop(tri, tri.vertices.index((1, 0)), F(1, 10))


def test_corner_chop_vertex_count(catalog):
    for p in catalog.values():
        from delzant_emb.delzant import vertex_data
        for i in range(len(p.vertices)):
            eps = vertex_data(p, i).min_edge_length / 2
            q = corner_chop(p, i, eps)
            assert len(q.vertices) == len(p.vertices) + p.dim - 1


def test_affine_image_and_scale(catalog):
    p = catalog["pentagon"]
    a = random_unimodular(2, 5, 3)
    q = affine_image(p, a, (F(1, 2), -3))
    assert len(q.vertices) == 5
    assert scale(p, 3) == hull_from_vertices([(3 * x, 3 * y) for x, y in PENTAGON])
    assert not in_hull((3, 3), scale(p, F(3, 2)).vertices)
