"""Primal construction of the real part of a plane tropical curve (n = 3).

In each of the four quadrant copies of the dilated triangle, every triangle
of the subdivision whose corners get non-constant signs contributes the
segment joining the midpoints of its two sign-change edges. Copies are glued
along shared coordinate faces and by the antipodal rule on the outer
boundary. The construction never touches the dual chain complex, so it
serves as an independent check of the homology pipeline.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .core import SignDistribution, TropicalPolynomial
from .subdivision import RegularSubdivision, SubdivisionError, regular_subdivision


@dataclass(frozen=True)
class MidpointSegment:
    copy: int                      # orthant mask with third bit clear
    start: tuple[Fraction, Fraction]
    end: tuple[Fraction, Fraction]
    component: int


@dataclass
class MidpointGraph:
    vertices: int
    edges: int
    components: int
    cycle_rank: int
    segments: list[MidpointSegment]

    @property
    def betti(self) -> tuple[int, int]:
        return (self.components, self.cycle_rank)


def _sign(eps_bits: tuple[int, ...], z: int, v: tuple[int, ...], idx: int) -> int:
    acc = eps_bits[idx]
    for i in range(3):
        if (z >> i) & 1:
            acc += v[i]
    return acc & 1


def _zero_mask(u: tuple[int, ...], v: tuple[int, ...]) -> int:
    mask = 0
    for i in range(3):
        if u[i] == 0 and v[i] == 0:
            mask |= 1 << i
    return mask


def _canonical(z: int, clear: int) -> int:
    # least key among z and its antipode with the cleared coordinates dropped;
    # key order is lexicographic in (z_1, z_2, z_3)
    a = z & ~clear & 7
    b = ~z & ~clear & 7
    ka = ((a & 1) << 2) | (a & 2) | (a >> 2)
    kb = ((b & 1) << 2) | (b & 2) | (b >> 2)
    return a if ka <= kb else b


def midpoint_graph(sub: RegularSubdivision, eps_bits: tuple[int, ...]) -> MidpointGraph:
    if sub.n != 3:
        raise ValueError("midpoint construction applies to plane curves only")
    if not sub.is_triangulation or not sub.is_full:
        raise SubdivisionError("midpoint construction requires a full triangulation")
    points = sub.points
    node_ids: dict[tuple[frozenset[int], int], int] = {}
    graph_edges: list[tuple[int, int, int, tuple, tuple]] = []

    def node(i: int, j: int, z: int) -> int:
        key = (frozenset((i, j)), _canonical(z, _zero_mask(points[i], points[j])))
        if key not in node_ids:
            node_ids[key] = len(node_ids)
        return node_ids[key]

    def midpoint(i: int, j: int) -> tuple[Fraction, Fraction]:
        return (Fraction(points[i][0] + points[j][0], 2),
                Fraction(points[i][1] + points[j][1], 2))

    for z in (0, 1, 2, 3):  # orthant representatives with the third bit clear
        for cell in sub.maximal_cells:
            signs = [_sign(eps_bits, z, points[i], i) for i in cell]
            change = [(a, b) for a in range(3) for b in range(a + 1, 3)
                      if signs[a] != signs[b]]
            if not change:
                continue
            (a1, b1), (a2, b2) = change
            u = node(cell[a1], cell[b1], z)
            v = node(cell[a2], cell[b2], z)
            graph_edges.append((u, v, z,
                                midpoint(cell[a1], cell[b1]),
                                midpoint(cell[a2], cell[b2])))

    nv = len(node_ids)
    parent = list(range(nv))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v, _, _, _ in graph_edges:
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[rv] = ru

    roots = sorted({find(x) for x in range(nv)})
    comp_index = {r: i for i, r in enumerate(roots)}
    components = len(roots)
    cycle_rank = len(graph_edges) - nv + components
    segments = [MidpointSegment(z, s, e, comp_index[find(u)])
                for u, v, z, s, e in graph_edges]
    return MidpointGraph(nv, len(graph_edges), components, cycle_rank, segments)


def curve_betti_oracle(poly: TropicalPolynomial, signs: SignDistribution) -> tuple[int, int]:
    """(components, cycle rank) of the midpoint graph of a patchworked curve."""
    sub = regular_subdivision(poly)
    return midpoint_graph(sub, signs.vector(poly)).betti
