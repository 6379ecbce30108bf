"""Exact convex-hull machinery over the integers.

`lower_cells` computes the regular subdivision induced by integer heights as
the family of maximal tight sets of lower supporting hyperplanes, found by
pivoting across walls of known cells. Supporting planes are carried in
homogeneous integer form (w, delta, b) with

    slack_i = delta * h_i - <w, a_i> - b >= 0,   equality on the tight set,

so every decision is an integer sign test. `hull_facets_fulldim` enumerates
facets of full-dimensional polytopes (needed for walls of non-simplex cells
and for face enumeration of degenerate subdivisions).
"""

from __future__ import annotations

from collections import deque
from fractions import Fraction
from math import gcd

from . import kernels


def _dot(u, v):
    return sum(a * b for a, b in zip(u, v))


def _sub(p, q):
    return tuple(a - b for a, b in zip(p, q))


def _neg(u):
    return tuple(-a for a in u)


def _vec_gcd(entries) -> int:
    g = 0
    for e in entries:
        g = gcd(g, e)
        if g == 1:
            return 1
    return g


def _primitive(u):
    g = _vec_gcd(u)
    if g > 1:
        return tuple(e // g for e in u)
    return tuple(u)


def _echelon_int(rows: list) -> tuple[int, list[int], list[list[int]]]:
    """Fraction-free row echelon. Returns (rank, pivot columns, reduced rows)."""
    mat = [list(r) for r in rows]
    if not mat:
        return 0, [], []
    ncols = len(mat[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(mat)) if mat[i][c] != 0), None)
        if p is None:
            continue
        mat[r], mat[p] = mat[p], mat[r]
        lead = mat[r][c]
        for i in range(len(mat)):
            if i != r and mat[i][c] != 0:
                f = mat[i][c]
                mat[i] = [lead * a - f * b for a, b in zip(mat[i], mat[r])]
                g = _vec_gcd(mat[i])
                if g > 1:
                    mat[i] = [a // g for a in mat[i]]
        pivots.append(c)
        r += 1
        if r == len(mat):
            break
    return r, pivots, mat


def affine_rank(points) -> int:
    """Dimension of the affine hull of the given integer points."""
    if len(points) <= 1:
        return 0
    base = points[0]
    rank, _, _ = _echelon_int([_sub(p, base) for p in points[1:]])
    return rank


def nullspace_vector(rows: list, dim: int):
    """A nonzero integer u with <row, u> = 0 for every row, or None if full rank."""
    if not rows:
        return (1,) + (0,) * (dim - 1)
    rank, pivots, mat = _echelon_int(rows)
    if rank == dim:
        return None
    free = next(c for c in range(dim) if c not in pivots)
    sol = [Fraction(0)] * dim
    sol[free] = Fraction(1)
    for r in range(rank - 1, -1, -1):
        pc = pivots[r]
        acc = Fraction(0)
        for c in range(pc + 1, dim):
            if mat[r][c]:
                acc += mat[r][c] * sol[c]
        sol[pc] = -acc / mat[r][pc]
    lcm = 1
    for s in sol:
        lcm = lcm * s.denominator // gcd(lcm, s.denominator)
    return _primitive(tuple(int(s * lcm) for s in sol))


def _normal_orthogonal(diffs: list, m: int):
    """Integer vector orthogonal to all difference vectors (closed forms for m <= 3)."""
    if m == 1:
        return (1,)
    if m == 2 and len(diffs) == 1:
        (dx, dy) = diffs[0]
        return _primitive((dy, -dx))
    if m == 3 and len(diffs) == 2:
        a, b = diffs
        u = (a[1] * b[2] - a[2] * b[1],
             a[2] * b[0] - a[0] * b[2],
             a[0] * b[1] - a[1] * b[0])
        return _primitive(u)
    u = nullspace_vector(diffs, m)
    if u is None:
        raise ValueError("difference vectors already span the space")
    return u


def int_det(rows) -> int:
    """Exact determinant of a square integer matrix (Bareiss)."""
    mat = [list(r) for r in rows]
    n = len(mat)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if mat[k][k] == 0:
            p = next((i for i in range(k + 1, n) if mat[i][k] != 0), None)
            if p is None:
                return 0
            mat[k], mat[p] = mat[p], mat[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                mat[i][j] = (mat[i][j] * mat[k][k] - mat[i][k] * mat[k][j]) // prev
            mat[i][k] = 0
        prev = mat[k][k]
    return sign * mat[n - 1][n - 1]


def _normalize_plane(w, delta, b):
    g = gcd(_vec_gcd(w), gcd(delta, b))
    if g > 1:
        return tuple(e // g for e in w), delta // g, b // g
    return tuple(w), delta, b


def _rotate_plane(w, delta, b, u, t_u, p, q):
    """Rotate plane by theta = p/q over the locus <u, x> = t_u."""
    w2 = tuple(q * wi + p * delta * ui for wi, ui in zip(w, u))
    b2 = q * b - p * delta * t_u
    return _normalize_plane(w2, q * delta, b2)


def _min_ratio(nums, dens):
    """min nums[i]/dens[i] over dens[i] > 0, as a reduced (p, q); None if no candidate."""
    best_p = best_q = None
    for num, den in zip(nums, dens):
        if den <= 0:
            continue
        if best_p is None or num * best_q < best_p * den:
            best_p, best_q = num, den
    if best_p is None:
        return None
    g = gcd(best_p, best_q)
    return best_p // g, best_q // g


def _flatten(points):
    flat = []
    for p in points:
        flat.extend(p)
    return flat


def _initial_lower_facet(apts, flat, heights):
    """First cell of the subdivision, found by rotating a lower supporting plane."""
    k = len(apts)
    m = len(apts[0])
    b = min(heights)
    w = (0,) * m
    delta = 1
    tight = [i for i in range(k) if heights[i] == b]
    while True:
        base = apts[tight[0]]
        diffs = [_sub(apts[i], base) for i in tight[1:]]
        rank, _, _ = _echelon_int(diffs) if diffs else (0, [], [])
        if rank == m:
            break
        u = nullspace_vector(diffs, m)
        t_u = _dot(u, base)
        dvec = kernels.affine_values(flat, k, m, u, -t_u)
        if not any(d > 0 for d in dvec):
            u = _neg(u)
            dvec = [-d for d in dvec]
        slacks = kernels.slack_vector(flat, k, m, heights, w, delta, b)
        p, q = _min_ratio(slacks, [delta * d for d in dvec])
        w, delta, b = _rotate_plane(w, delta, b, u, _dot(u, base), p, q)
        slacks = kernels.slack_vector(flat, k, m, heights, w, delta, b)
        tight = [i for i in range(k) if slacks[i] == 0]
    return tight, (w, delta, b)


def _cell_walls(apts, cell):
    """Outer wall descriptions (u, t) of a full-dimensional cell: <u, x> <= t on it."""
    m = len(apts[0])
    pts = [apts[i] for i in cell]
    if len(cell) == m + 1:
        walls = []
        for j in range(m + 1):
            rest = pts[:j] + pts[j + 1:]
            diffs = [_sub(p, rest[0]) for p in rest[1:]]
            u = _normal_orthogonal(diffs, m)
            t = _dot(u, rest[0])
            side = _dot(u, pts[j])
            if side == t:
                raise ValueError("degenerate simplex cell")
            if side > t:
                u, t = _neg(u), -t
            walls.append((u, t))
        return walls
    return [(u, t) for (_, u, t) in hull_facets_fulldim(pts)]


def lower_cells(apts: list[tuple[int, ...]], heights: list[int]) -> list[tuple[int, ...]]:
    """Maximal cells of the regular subdivision of the points under the heights.

    Each cell is the sorted tuple of indices of all points lying on one lower
    facet of the lifted hull. An affine lift yields the trivial subdivision.
    """
    k = len(apts)
    m = len(apts[0])
    lifted = [apts[i] + (heights[i],) for i in range(k)]
    if affine_rank(lifted) <= m:
        return [tuple(range(k))]
    flat = _flatten(apts)
    first, plane = _initial_lower_facet(apts, flat, heights)
    first_key = tuple(first)
    seen = {first_key}
    queue = deque([(first_key, plane)])
    cells = []
    while queue:
        cell, (w, delta, b) = queue.popleft()
        cells.append(cell)
        slacks = kernels.slack_vector(flat, k, m, heights, w, delta, b)
        for u, t in _cell_walls(apts, cell):
            dvec = kernels.affine_values(flat, k, m, u, -t)
            ratio = _min_ratio(slacks, [delta * d for d in dvec])
            if ratio is None:
                continue  # wall on the boundary of the support polytope
            p, q = ratio
            neighbor = tuple(i for i in range(k)
                             if q * slacks[i] == p * delta * dvec[i])
            if neighbor not in seen:
                seen.add(neighbor)
                queue.append((neighbor,
                              _rotate_plane(w, delta, b, u, t, p, q)))
    cells.sort()
    return cells


def _project_to_rank(pts):
    """Project onto pivot coordinates of the affine hull (an affine bijection)."""
    base = pts[0]
    diffs = [_sub(p, base) for p in pts[1:]]
    rank, pivots, _ = _echelon_int(diffs)
    if rank == len(pts[0]):
        return [tuple(p) for p in pts], list(range(rank))
    return [tuple(p[c] for c in pivots) for p in pts], pivots


def _hull_1d(pts):
    vals = [p[0] for p in pts]
    lo, hi = min(vals), max(vals)
    return [
        (tuple(i for i, v in enumerate(vals) if v == lo), (-1,), -lo),
        (tuple(i for i, v in enumerate(vals) if v == hi), (1,), hi),
    ]


def _hull_2d(pts):
    def cross(o, a, b):
        return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])

    order = sorted(range(len(pts)), key=lambda i: pts[i])
    lower: list[int] = []
    for i in order:
        while len(lower) >= 2 and cross(pts[lower[-2]], pts[lower[-1]], pts[i]) <= 0:
            lower.pop()
        lower.append(i)
    upper: list[int] = []
    for i in reversed(order):
        while len(upper) >= 2 and cross(pts[upper[-2]], pts[upper[-1]], pts[i]) <= 0:
            upper.pop()
        upper.append(i)
    ring = lower[:-1] + upper[:-1]
    facets = []
    for a, b in zip(ring, ring[1:] + ring[:1]):
        d = _sub(pts[b], pts[a])
        u = _primitive((d[1], -d[0]))
        t = _dot(u, pts[a])
        tight = tuple(i for i in range(len(pts)) if _dot(u, pts[i]) == t)
        facets.append((tight, u, t))
    return facets


def _initial_facet_full(pts):
    """Some facet of a full-dimensional polytope, by rotating a supporting plane."""
    r = len(pts[0])
    k = len(pts)
    w = (0,) * (r - 1) + (1,)
    t = max(_dot(w, p) for p in pts)
    tight = [i for i in range(k) if _dot(w, pts[i]) == t]
    while True:
        base = pts[tight[0]]
        diffs = [_sub(pts[i], base) for i in tight[1:]]
        rank, _, _ = _echelon_int(diffs) if diffs else (0, [], [])
        if rank == r - 1:
            break
        u = nullspace_vector(diffs, r)
        t_u = _dot(u, base)
        dvec = [_dot(u, p) - t_u for p in pts]
        if not any(d > 0 for d in dvec):
            u = _neg(u)
            dvec = [-d for d in dvec]
        slacks = [t - _dot(w, p) for p in pts]
        p_, q_ = _min_ratio(slacks, dvec)
        w = tuple(q_ * wi + p_ * ui for wi, ui in zip(w, u))
        t = q_ * t + p_ * t_u
        g = gcd(_vec_gcd(w), t)
        if g > 1:
            w = tuple(e // g for e in w)
            t //= g
        tight = [i for i in range(k) if _dot(w, pts[i]) == t]
    return tight, w, t


def _rotate_over_ridge(pts, slacks, w, t, ridge, u, r):
    """Neighbor facet across a ridge; u is orthogonal to the ridge, negative on the facet."""
    while True:
        t_u = _dot(u, pts[ridge[0]])
        dvec = [_dot(u, p) - t_u for p in pts]
        ratio = _min_ratio(slacks, dvec)
        if ratio is not None:
            p_, q_ = ratio
            w2 = tuple(q_ * wi + p_ * ui for wi, ui in zip(w, u))
            t2 = q_ * t + p_ * t_u
            g = gcd(_vec_gcd(w2), t2)
            if g > 1:
                w2 = tuple(e // g for e in w2)
                t2 //= g
            tight = tuple(i for i in range(len(pts))
                          if q_ * slacks[i] == p_ * dvec[i])
            return tight, w2, t2
        flat_tight = [i for i, d in enumerate(dvec) if d == 0]
        if affine_rank([pts[i] for i in flat_tight]) == r - 1:
            u2 = _primitive(u)
            return tuple(flat_tight), u2, _dot(u2, pts[ridge[0]])
        # u points into the ridge's normal cone; shear it past the facet
        # normal just far enough that a point shows up beyond the sweep
        c = None
        for i in range(len(pts)):
            if slacks[i] > 0:
                need = 0 if dvec[i] > 0 else (-dvec[i]) // slacks[i] + 1
                c = need if c is None or need < c else c
        u = tuple(ui - c * wi for ui, wi in zip(u, w))


def _giftwrap(pts):
    """All facets of a full-dimensional polytope in dimension >= 3."""
    r = len(pts[0])
    tight, w, t = _initial_facet_full(pts)
    first = (tuple(tight), w, t)
    seen = {first[0]}
    queue = deque([first])
    facets = []
    while queue:
        cell, w, t = queue.popleft()
        facets.append((cell, w, t))
        sub = [pts[i] for i in cell]
        proj, _ = _project_to_rank(sub)
        slacks = [t - _dot(w, p) for p in pts]
        for tloc, _, _ in hull_facets_fulldim(proj):
            ridge = [cell[j] for j in tloc]
            rows = [_sub(pts[i], pts[ridge[0]]) for i in ridge[1:]]
            rows.append(list(w))
            u = nullspace_vector(rows, r)
            off = next(i for i in cell if _dot(u, pts[i]) != _dot(u, pts[ridge[0]]))
            if _dot(u, pts[off]) > _dot(u, pts[ridge[0]]):
                u = _neg(u)
            neighbor, w2, t2 = _rotate_over_ridge(pts, slacks, w, t, ridge, u, r)
            if neighbor not in seen:
                seen.add(neighbor)
                queue.append((neighbor, w2, t2))
    return facets


def hull_facets_fulldim(pts):
    """Facets of conv(pts) for points affinely spanning their ambient space.

    Returns (tight index tuple, outward normal, offset) triples with
    <normal, x> <= offset on the polytope and equality exactly on the facet.
    """
    r = len(pts[0])
    if r == 1:
        return _hull_1d(pts)
    if r == 2:
        return _hull_2d(pts)
    return _giftwrap(pts)


def polytope_face_dims(points, idxs):
    """All faces of conv(points[i] for i in idxs), as {frozen index set: dimension}.

    Includes the polytope itself and its vertices. Faces are identified by the
    set of given points lying on them.
    """
    out: dict[frozenset, int] = {}
    start = frozenset(idxs)
    stack = [(start, affine_rank([points[i] for i in idxs]))]
    while stack:
        fs, dim = stack.pop()
        if fs in out:
            continue
        out[fs] = dim
        if dim == 0:
            continue
        sub = sorted(fs)
        if len(sub) == dim + 1:
            for j in range(len(sub)):
                stack.append((fs - {sub[j]}, dim - 1))
            continue
        pts = [points[i] for i in sub]
        proj, _ = _project_to_rank(pts)
        for tloc, _, _ in hull_facets_fulldim(proj):
            stack.append((frozenset(sub[j] for j in tloc), dim - 1))
    return out
