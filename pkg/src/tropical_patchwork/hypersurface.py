"""Face poset of the compactified tropical hypersurface.

Cells are pairs (I, G): a sedentarity mask I of coordinates sent to infinity
and a dual face G of the subdivision with dim G >= 1, where every point of G
vanishes on I. The cell dimension is n - 1 - |I| - dim G. Facets either grow
G by one cover in the face poset (staying inside the I-face) or grow I by one
admissible coordinate.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

from . import hull
from .subdivision import RegularSubdivision, SubdivisionError


@dataclass(frozen=True)
class CompactCell:
    sedentarity: int  # n-bit mask of coordinates equal to infinity
    dual_face: int    # face id in the FacePoset
    dim: int


@dataclass
class HypersurfacePoset:
    n: int
    subdivision: RegularSubdivision
    cells: list[CompactCell]
    facet_ids: list[tuple[int, ...]]   # per cell: ids of its codimension-1 faces
    maximal: tuple[int, ...]           # cells with empty sedentarity and dual edge
    index: dict[tuple[int, int], int]  # (sedentarity, face id) -> cell id
    zero_masks: list[int]              # per face id: coordinates vanishing on it

    @cached_property
    def cells_by_dim(self) -> list[list[int]]:
        out: list[list[int]] = [[] for _ in range(self.n - 1)]
        for cid, cell in enumerate(self.cells):
            out[cell.dim].append(cid)
        return out


def _submasks_ascending(mask: int) -> list[int]:
    subs = []
    s = mask
    while True:
        subs.append(s)
        if s == 0:
            break
        s = (s - 1) & mask
    subs.reverse()
    return subs


def compact_cells(sub: RegularSubdivision) -> HypersurfacePoset:
    """Build the hypersurface poset of a triangulated subdivision."""
    if not sub.is_triangulation:
        raise SubdivisionError("hypersurface poset requires a triangulation")
    n = sub.n
    fp = sub.face_poset()
    points = sub.points

    zero_masks: list[int] = []
    for face in fp.faces:
        zm = (1 << n) - 1
        for i in face:
            pt_mask = 0
            for j, e in enumerate(points[i]):
                if e == 0:
                    pt_mask |= 1 << j
            zm &= pt_mask
        zero_masks.append(zm)

    cells: list[CompactCell] = []
    index: dict[tuple[int, int], int] = {}
    for fid, face in enumerate(fp.faces):
        fdim = fp.dims[fid]
        if fdim < 1:
            continue
        for sed in _submasks_ascending(zero_masks[fid]):
            cid = len(cells)
            cells.append(CompactCell(sed, fid, n - 1 - sed.bit_count() - fdim))
            index[(sed, fid)] = cid

    facet_ids: list[tuple[int, ...]] = []
    for cell in cells:
        sed, fid = cell.sedentarity, cell.dual_face
        facets = []
        for gid in fp.up_covers[fid]:
            if sed & ~zero_masks[gid] == 0:
                facets.append(index[(sed, gid)])
        extra = zero_masks[fid] & ~sed
        while extra:
            bit = extra & -extra
            facets.append(index[(sed | bit, fid)])
            extra ^= bit
        facet_ids.append(tuple(facets))

    maximal = tuple(cid for cid, cell in enumerate(cells)
                    if cell.sedentarity == 0 and fp.dims[cell.dual_face] == 1)
    return HypersurfacePoset(n, sub, cells, facet_ids, maximal, index, zero_masks)


@dataclass(frozen=True)
class RealizedCell:
    """Geometric description of an interior cell in the chart x_n = 0."""

    kind: str  # "vertex", "segment" or "ray"
    points: tuple[tuple[Fraction, ...], ...]
    direction: tuple[int, ...] | None = None


def _dual_vertex(sub: RegularSubdivision, cell: tuple[int, ...]) -> tuple[Fraction, ...]:
    """Point where all monomials of a maximal subdivision cell are minimal."""
    heights = sub.heights
    apts = sub.apts
    i0 = cell[0]
    rows = []
    rhs = []
    for i in cell[1:]:
        rows.append([Fraction(a - b) for a, b in zip(apts[i], apts[i0])])
        rhs.append(heights[i0] - heights[i])
    m = len(apts[0])
    # solve rows * x = rhs by Gaussian elimination over the rationals
    aug = [rows[r] + [rhs[r]] for r in range(m)]
    for c in range(m):
        p = next(r for r in range(c, m) if aug[r][c] != 0)
        aug[c], aug[p] = aug[p], aug[c]
        lead = aug[c][c]
        aug[c] = [v / lead for v in aug[c]]
        for r in range(m):
            if r != c and aug[r][c] != 0:
                f = aug[r][c]
                aug[r] = [v - f * w for v, w in zip(aug[r], aug[c])]
    return tuple(aug[c][m] for c in range(m))


def realize(poset: HypersurfacePoset, cell_id: int) -> RealizedCell:
    """Realize an interior cell of a plane tropical curve (n = 3 only)."""
    sub = poset.subdivision
    if sub.n != 3:
        raise ValueError("geometric realization is implemented for n = 3 only")
    cell = poset.cells[cell_id]
    if cell.sedentarity != 0:
        raise ValueError("only interior cells (empty sedentarity) can be realized")
    fp = sub.face_poset()
    face = fp.faces[cell.dual_face]
    if len(face) == 3:
        return RealizedCell("vertex", (_dual_vertex(sub, face),))
    if len(face) != 2:
        raise ValueError("unexpected dual face dimension")
    triangles = [fp.faces[g] for g in fp.up_covers[cell.dual_face]]
    if len(triangles) == 2:
        return RealizedCell(
            "segment",
            (_dual_vertex(sub, triangles[0]), _dual_vertex(sub, triangles[1])))
    if len(triangles) != 1:
        raise ValueError("edge contained in more than two triangles")
    tri = triangles[0]
    apts = sub.apts
    u, v = face
    w = next(i for i in tri if i not in face)
    direction = hull._primitive(
        (apts[u][1] - apts[v][1], apts[v][0] - apts[u][0]))
    if hull._dot(direction, hull._sub(apts[w], apts[u])) < 0:
        direction = hull._neg(direction)
    return RealizedCell("ray", (_dual_vertex(sub, tri),), direction)
