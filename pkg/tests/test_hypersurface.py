from fractions import Fraction

import pytest

from tropical_patchwork.core import TropicalPolynomial, lattice_points
from tropical_patchwork.generators import random_full_triangulation
from tropical_patchwork.hypersurface import compact_cells, realize
from tropical_patchwork.subdivision import SubdivisionError, regular_subdivision


def _line():
    pts = lattice_points(3, 1)
    return regular_subdivision(TropicalPolynomial(3, 1, tuple(pts), (0, 0, 0)))


def test_tropical_line_cells():
    poset = compact_cells(_line())
    by_dim = {}
    for cell in poset.cells:
        by_dim.setdefault(cell.dim, []).append(cell)
    assert len(by_dim[1]) == 3                 # rays
    assert len(by_dim[0]) == 4                 # central vertex + 3 endpoints
    boundary = [c for c in poset.cells if c.sedentarity]
    assert len(boundary) == 3
    assert all(c.dim == 0 for c in boundary)
    assert len(poset.maximal) == 3
    assert sum(len(f) for f in poset.facet_ids) == 6
    # Euler characteristic of the compactified complex: a tripod
    assert len(by_dim[0]) - len(by_dim[1]) == 1
    # boundary endpoints sit on the opposite coordinate face
    fp = _line().face_poset()
    for cell in boundary:
        face = fp.faces[cell.dual_face]
        i = cell.sedentarity.bit_length() - 1
        assert all(poset.subdivision.points[p][i] == 0 for p in face)


def test_maximal_cells_are_dual_to_edges(harnack, cubic212):
    for poly in (harnack[0], cubic212[0]):
        sub = regular_subdivision(poly)
        poset = compact_cells(sub)
        edges = sub.f_vector()[1]
        top = [c for c in poset.cells if c.dim == poly.n - 2]
        assert len(poset.maximal) == edges
        assert all(poset.cells[i].sedentarity == 0 for i in poset.maximal)
        # no top-dimensional cells at infinity
        assert len(top) == edges


def test_example1_maximal_count(harnack):
    poset = compact_cells(regular_subdivision(harnack[0]))
    assert len(poset.maximal) == 18


def test_compactified_curve_connectivity_and_euler(harnack):
    # the compactified cubic curve is connected with one cycle (chi = 0);
    # the line is a contractible tripod (chi = 1)
    pts = lattice_points(3, 1)
    line = regular_subdivision(TropicalPolynomial(3, 1, tuple(pts), (0, 0, 0)))
    for sub, chi in ((line, 1), (regular_subdivision(harnack[0]), 0)):
        poset = compact_cells(sub)
        assert sum((-1) ** c.dim for c in poset.cells) == chi
        parent = list(range(len(poset.cells)))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for cid, facets in enumerate(poset.facet_ids):
            for fid in facets:
                parent[find(cid)] = find(fid)
        assert len({find(x) for x in range(len(poset.cells))}) == 1


def test_facets_drop_dimension_by_one(cubic212):
    poset = compact_cells(regular_subdivision(cubic212[0]))
    for cid, cell in enumerate(poset.cells):
        for fid in poset.facet_ids[cid]:
            assert poset.cells[fid].dim == cell.dim - 1


def test_facets_are_transitive_reduction_of_face_order():
    for sub in (_line(), regular_subdivision(random_full_triangulation(3, 2, 5))):
        poset = compact_cells(sub)
        fp = sub.face_poset()
        face_sets = [frozenset(f) for f in fp.faces]

        def leq(a, b):
            # a is a face of b
            ca, cb = poset.cells[a], poset.cells[b]
            return (cb.sedentarity & ~ca.sedentarity) == 0 and \
                face_sets[cb.dual_face] <= face_sets[ca.dual_face]

        ncells = len(poset.cells)
        below = {b: [a for a in range(ncells) if a != b and leq(a, b)]
                 for b in range(ncells)}
        for b in range(ncells):
            covers = {a for a in below[b]
                      if not any(leq(a, m) for m in below[b] if m != a)}
            assert covers == set(poset.facet_ids[b])


def test_every_cell_under_some_maximal(cubic212):
    poset = compact_cells(regular_subdivision(cubic212[0]))
    fp = poset.subdivision.face_poset()
    for cell in poset.cells:
        face = set(fp.faces[cell.dual_face])
        assert any(set(fp.faces[poset.cells[m].dual_face]) <= face
                   for m in poset.maximal)


def test_compact_cells_requires_triangulation():
    pts = lattice_points(3, 2)
    sub = regular_subdivision(TropicalPolynomial(3, 2, tuple(pts), tuple([0] * 6)))
    with pytest.raises(SubdivisionError):
        compact_cells(sub)


def test_realize_line():
    poset = compact_cells(_line())
    kinds = {}
    for cid, cell in enumerate(poset.cells):
        if cell.sedentarity == 0:
            r = realize(poset, cid)
            kinds.setdefault(r.kind, []).append(r)
    assert len(kinds["vertex"]) == 1
    assert kinds["vertex"][0].points[0] == (0, 0)
    assert sorted(r.direction for r in kinds["ray"]) == [(-1, -1), (0, 1), (1, 0)]


def test_realize_example1(harnack):
    poly, _ = harnack
    sub = regular_subdivision(poly)
    poset = compact_cells(sub)
    vertices = []
    for cid, cell in enumerate(poset.cells):
        if cell.sedentarity == 0:
            r = realize(poset, cid)
            if r.kind == "vertex":
                vertices.append((cid, r.points[0]))
    assert len(vertices) == 9
    fp = sub.face_poset()
    for cid, x in vertices:
        # the minimum at the realized vertex is attained exactly on the dual triangle
        xh = (x[0], x[1], Fraction(0))
        value = poly.evaluate(xh)
        argmin = {v for v, c in zip(poly.exponents, poly.coefficients)
                  if c + sum(a * b for a, b in zip(xh, v)) == value}
        tri = {poly.exponents[i] for i in fp.faces[poset.cells[cid].dual_face]}
        assert argmin == tri


def _march_limit_argmin(poly, x0, direction, restrict=None):
    """Argmin of c_v + <x0 + t*dir, a_v> for all large t, by (rate, offset) order."""
    items = []
    for v, c in zip(poly.exponents, poly.coefficients):
        if restrict is not None and any(v[i] for i in restrict):
            continue
        a = v[:-1]
        rate = sum(d * e for d, e in zip(direction, a))
        offset = c + sum(x * e for x, e in zip(x0, a))
        items.append((rate, offset, v))
    best = min(items)[:2]
    return {v for rate, offset, v in items if (rate, offset) == best}


def test_sedentarity_model_geometric_limits(harnack):
    # for every boundary facet of an unbounded curve cell, marching toward the
    # claimed stratum stays in the cell and lands on the dual face
    instances = [
        TropicalPolynomial(3, 1, tuple(lattice_points(3, 1)), (0, 0, 0)),
        random_full_triangulation(3, 2, 7),
        harnack[0],
        random_full_triangulation(3, 3, 8),
    ]
    for poly in instances:
        sub = regular_subdivision(poly)
        poset = compact_cells(sub)
        fp = sub.face_poset()
        checked = 0
        for cid, cell in enumerate(poset.cells):
            if cell.sedentarity or fp.dims[cell.dual_face] != 1:
                continue
            for fid in poset.facet_ids[cid]:
                fcell = poset.cells[fid]
                if not fcell.sedentarity:
                    continue
                assert fcell.dual_face == cell.dual_face
                i = fcell.sedentarity.bit_length() - 1
                march = (-1, -1) if i == 2 else ((1, 0) if i == 0 else (0, 1))
                ray = realize(poset, cid)
                assert ray.kind == "ray"
                x0 = tuple(p + q for p, q in zip(ray.points[0], ray.direction))
                dual = {poly.exponents[t] for t in fp.faces[cell.dual_face]}
                # marching keeps the argmin on the dual edge
                assert _march_limit_argmin(poly, x0, march) == dual
                # the limit argmin among monomials alive on the stratum is the edge
                assert _march_limit_argmin(poly, x0, march, restrict=[i]) == dual
                checked += 1
        assert checked > 0
