"""Regular subdivisions induced by coefficient lifts, with predicates and face poset.

The lift drops the last exponent coordinate (a lattice isomorphism of the
degree-d slice onto Z^(n-1)) and uses the coefficients as heights. Heights are
cleared to a common integer denominator, so the hull runs entirely over the
integers.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from itertools import combinations
from math import gcd

from . import hull
from .core import Exponent, PatchworkError, TropicalPolynomial


class SubdivisionError(PatchworkError):
    """A pipeline precondition on the induced subdivision failed."""


@dataclass
class FacePoset:
    """Faces of a triangulated point configuration with cover relations.

    Faces are vertex-index tuples sorted by (dimension, lexicographic order);
    covers are (lower id, upper id) pairs with a dimension gap of one.
    """

    faces: list[tuple[int, ...]]
    dims: list[int]
    covers: list[tuple[int, int]]
    index: dict[tuple[int, ...], int]

    @cached_property
    def up_covers(self) -> list[list[int]]:
        up: list[list[int]] = [[] for _ in self.faces]
        for low, high in self.covers:
            up[low].append(high)
        return up

    def count_by_dim(self) -> list[int]:
        top = max(self.dims)
        out = [0] * (top + 1)
        for dm in self.dims:
            out[dm] += 1
        return out


@dataclass(frozen=True)
class RegularSubdivision:
    """Maximal cells of the subdivision, as sorted tuples of point indices.

    A cell lists every configuration point on its lower facet, so non-simplex
    cells and unused points are faithfully represented.
    """

    n: int
    d: int
    points: tuple[Exponent, ...]
    heights: tuple[Fraction, ...]
    maximal_cells: tuple[tuple[int, ...], ...]

    @cached_property
    def apts(self) -> list[tuple[int, ...]]:
        """Dehomogenized points: the last exponent coordinate is dropped."""
        return [p[:-1] for p in self.points]

    @cached_property
    def used_points(self) -> frozenset[int]:
        used: set[int] = set()
        for cell in self.maximal_cells:
            used.update(cell)
        return frozenset(used)

    @cached_property
    def _face_map(self) -> dict[frozenset[int], int]:
        """Every face of every cell, keyed by point set, valued by dimension."""
        m = self.n - 1
        faces: dict[frozenset[int], int] = {}
        stack: list[tuple[frozenset[int], int]] = [
            (frozenset(c), m) for c in self.maximal_cells]
        while stack:
            fs, dim = stack.pop()
            if fs in faces:
                continue
            faces[fs] = dim
            if dim == 0:
                continue
            sub = sorted(fs)
            if len(sub) == dim + 1:
                for x in sub:
                    stack.append((fs - {x}, dim - 1))
                continue
            pts = [self.apts[i] for i in sub]
            proj, _ = hull._project_to_rank(pts)
            for tloc, _, _ in hull.hull_facets_fulldim(proj):
                stack.append((frozenset(sub[j] for j in tloc), dim - 1))
        return faces

    @cached_property
    def vertex_points(self) -> frozenset[int]:
        return frozenset(next(iter(fs))
                         for fs, dm in self._face_map.items() if dm == 0)

    @property
    def is_full(self) -> bool:
        return len(self.vertex_points) == len(self.points)

    @property
    def is_triangulation(self) -> bool:
        return all(len(c) == self.n for c in self.maximal_cells)

    @cached_property
    def is_unimodular(self) -> bool:
        if not self.is_triangulation:
            return False
        return all(abs(self.cell_volume(c)) == 1 for c in self.maximal_cells)

    def cell_volume(self, cell: tuple[int, ...]) -> int:
        """Normalized lattice volume of a cell (1 for a unimodular simplex)."""
        m = self.n - 1
        total = 0
        for simplex in self._triangulate(tuple(sorted(cell)), m):
            base = self.apts[simplex[0]]
            rows = [hull._sub(self.apts[i], base) for i in simplex[1:]]
            total += abs(hull.int_det(rows))
        return total

    def total_volume(self) -> int:
        return sum(self.cell_volume(c) for c in self.maximal_cells)

    def _triangulate(self, idxs: tuple[int, ...], dim: int) -> list[tuple[int, ...]]:
        if len(idxs) == dim + 1:
            return [idxs]
        v0 = min(idxs, key=lambda i: self.apts[i])
        sub = sorted(idxs)
        pts = [self.apts[i] for i in sub]
        proj, _ = hull._project_to_rank(pts)
        out: list[tuple[int, ...]] = []
        for tloc, _, _ in hull.hull_facets_fulldim(proj):
            facet = tuple(sorted(sub[j] for j in tloc))
            if v0 in facet:
                continue
            for s in self._triangulate(facet, dim - 1):
                out.append(s + (v0,))
        return out

    def f_vector(self) -> tuple[int, ...]:
        """Face counts by dimension 0 .. n-1 of the induced polyhedral complex."""
        counts = [0] * self.n
        for dm in self._face_map.values():
            counts[dm] += 1
        return tuple(counts)

    @cached_property
    def _face_poset(self) -> FacePoset:
        if not self.is_triangulation:
            raise SubdivisionError("face poset requires a triangulation")
        face_set: set[tuple[int, ...]] = set()
        for cell in self.maximal_cells:
            for size in range(1, self.n + 1):
                face_set.update(combinations(cell, size))
        faces = sorted(face_set, key=lambda f: (len(f), f))
        index = {f: i for i, f in enumerate(faces)}
        dims = [len(f) - 1 for f in faces]
        covers: list[tuple[int, int]] = []
        for f in faces:
            if len(f) < 2:
                continue
            fid = index[f]
            for j in range(len(f)):
                covers.append((index[f[:j] + f[j + 1:]], fid))
        return FacePoset(faces, dims, covers, index)

    def face_poset(self) -> FacePoset:
        return self._face_poset


def regular_subdivision(poly: TropicalPolynomial) -> RegularSubdivision:
    """Subdivision of the support induced by the coefficients via exact lower hull."""
    if not poly.has_full_support:
        raise SubdivisionError(
            "support must be every lattice point of the dilated simplex")
    denom = 1
    for c in poly.coefficients:
        denom = denom * c.denominator // gcd(denom, c.denominator)
    heights = [int(c * denom) for c in poly.coefficients]
    apts = [v[:-1] for v in poly.exponents]
    cells = hull.lower_cells(apts, heights)
    return RegularSubdivision(
        n=poly.n,
        d=poly.d,
        points=poly.exponents,
        heights=poly.coefficients,
        maximal_cells=tuple(cells),
    )
