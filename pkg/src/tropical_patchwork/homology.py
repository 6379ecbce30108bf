"""GF(2) cellular chain complex of the real part and its Betti numbers.

Chain groups are spanned by orbit classes of (cell, orthant) pairs; the
boundary of a class re-canonicalizes the orthant in each facet cell and
cancels repeats mod 2. Betti numbers come from bit-packed rank computations.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import kernels
from .core import PatchworkError, SignDistribution, TropicalPolynomial
from .hypersurface import HypersurfacePoset, compact_cells
from .phase import OrbitClass, PhaseStructure, canonical_rep, phase_structure
from .subdivision import (RegularSubdivision, SubdivisionError,
                          regular_subdivision)


class ChainComplexError(PatchworkError):
    """Internal consistency failure while assembling the chain complex."""


@dataclass(frozen=True)
class BettiVector:
    b: tuple[int, ...]
    chi: int

    def __iter__(self):
        return iter(self.b)


@dataclass
class RealPartComplex:
    """Chain data of the real part: classes per dimension and boundary lists."""

    n: int
    classes: list[list[OrbitClass]]          # index q = cell dimension, 0..n-2
    boundaries: list[list[list[int]]]        # per q >= 1: rows of (q-1)-class columns, mod 2
    incidences: list[list[list[int]]]        # same rows before mod-2 cancellation

    def class_counts(self) -> tuple[int, ...]:
        return tuple(len(c) for c in self.classes)

    def euler_characteristic(self) -> int:
        return sum((-1) ** q * len(c) for q, c in enumerate(self.classes))


def _iter_bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def real_part_complex(poset: HypersurfacePoset, phases: PhaseStructure) -> RealPartComplex:
    n = poset.n
    top = n - 2
    classes: list[list[OrbitClass]] = [[] for _ in range(top + 1)]
    col: dict[tuple[int, int], int] = {}
    for cid, cell in enumerate(poset.cells):
        mask = phases.cell_mask(cell)
        if not mask:
            continue
        reps = sorted({canonical_rep(n, cell.sedentarity, z) for z in _iter_bits(mask)})
        for rep in reps:
            col[(cid, rep)] = len(classes[cell.dim])
            classes[cell.dim].append(OrbitClass(cid, rep))

    boundaries: list[list[list[int]]] = [[]]
    incidences: list[list[list[int]]] = [[]]
    for q in range(1, top + 1):
        rows: list[list[int]] = []
        raw_rows: list[list[int]] = []
        for cls in classes[q]:
            raw: list[int] = []
            acc: set[int] = set()
            for fid in poset.facet_ids[cls.cell_id]:
                fcell = poset.cells[fid]
                target = col[(fid, canonical_rep(n, fcell.sedentarity, cls.rep))]
                raw.append(target)
                acc ^= {target}
            raw_rows.append(raw)
            rows.append(sorted(acc))
        boundaries.append(rows)
        incidences.append(raw_rows)
    return RealPartComplex(n, classes, boundaries, incidences)


def _bitrows(rows: list[list[int]]) -> list[int]:
    out = []
    for row in rows:
        acc = 0
        for c in row:
            acc |= 1 << c
        out.append(acc)
    return out


def gf2_rank(rows: list[list[int]], ncols: int) -> int:
    """Rank over GF(2) of a matrix given as per-row column index lists."""
    return kernels.gf2_rank_bitrows(_bitrows(rows), ncols)


def betti(cx: RealPartComplex) -> BettiVector:
    """Betti numbers from boundary ranks; verifies that boundaries compose to zero."""
    top = cx.n - 2
    bitrows = [None] + [_bitrows(cx.boundaries[q]) for q in range(1, top + 1)]
    for q in range(2, top + 1):
        lower = bitrows[q - 1]
        for row in cx.boundaries[q]:
            acc = 0
            for c in row:
                acc ^= lower[c]
            if acc:
                raise ChainComplexError("boundary of a boundary is nonzero")
    ranks = [0] * (top + 2)
    for q in range(1, top + 1):
        ranks[q] = kernels.gf2_rank_bitrows(bitrows[q], len(cx.classes[q - 1]))
    b = tuple(len(cx.classes[q]) - ranks[q] - ranks[q + 1] for q in range(top + 1))
    chi = sum((-1) ** q * bq for q, bq in enumerate(b))
    if chi != cx.euler_characteristic():
        raise ChainComplexError("Euler characteristic mismatch")
    return BettiVector(b, chi)


class _UnionFind:
    def __init__(self, size: int):
        self.parent = list(range(size))
        self.count = size

    def find(self, x: int) -> int:
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[rb] = ra
            self.count -= 1


def component_count(cx: RealPartComplex) -> int:
    """Connected components of the class-incidence graph (independent b0 check)."""
    offsets = []
    total = 0
    for cls in cx.classes:
        offsets.append(total)
        total += len(cls)
    if total == 0:
        return 0
    uf = _UnionFind(total)
    for q in range(1, cx.n - 1):
        for r, raw in enumerate(cx.incidences[q]):
            for c in raw:
                uf.union(offsets[q] + r, offsets[q - 1] + c)
    return len({uf.find(x) for x in range(total)})


@dataclass
class PipelineResult:
    """Everything the census and the CLI report about one instance."""

    subdivision: "RegularSubdivision"
    poset: HypersurfacePoset
    complex: RealPartComplex
    betti: BettiVector
    components: int


def analyze(poly: TropicalPolynomial, signs: SignDistribution) -> PipelineResult:
    """Full pipeline: subdivision, hypersurface poset, phase, homology."""
    sub = regular_subdivision(poly)
    if not sub.is_triangulation:
        raise SubdivisionError("induced subdivision is not a triangulation")
    if not sub.is_full:
        raise SubdivisionError("induced subdivision is not full")
    poset = compact_cells(sub)
    return analyze_with_poset(poset, poly, signs)


def analyze_with_poset(poset: HypersurfacePoset, poly: TropicalPolynomial,
                       signs: SignDistribution) -> PipelineResult:
    """Sign-dependent part of the pipeline, for reuse across sign distributions."""
    eps = signs.vector(poly)
    phases = phase_structure(poset, eps)
    cx = real_part_complex(poset, phases)
    bv = betti(cx)
    comp = component_count(cx)
    if comp != bv.b[0]:
        raise ChainComplexError("component count disagrees with b0")
    return PipelineResult(poset.subdivision, poset, cx, bv, comp)


def betti_numbers(poly: TropicalPolynomial, signs: SignDistribution) -> BettiVector:
    return analyze(poly, signs).betti
