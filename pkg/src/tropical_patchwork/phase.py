"""Real phase structure: symmetrized signs, orthant sets, orbit canonicalization.

Orthants are n-bit masks z (bit i is the sign bit of coordinate i+1); orthant
sets are 2^n-bit masks indexed by z. The sign of monomial v in orthant z is
eps(v) + <z, v> mod 2, and a maximal hypersurface cell carries the orthants
where the two endpoints of its dual edge get distinct signs.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .core import Exponent, antipode
from .hypersurface import CompactCell, HypersurfacePoset

MAX_VARIABLES = 14  # orthant-set masks have 2^n bits


def symmetrized_sign(eps: int, z: int, v: Exponent) -> int:
    """eps(v) + <z, v> mod 2 for an orthant mask z."""
    acc = eps
    for i, e in enumerate(v):
        if (z >> i) & 1:
            acc += e
    return acc & 1


@lru_cache(maxsize=None)
def _bit_reversal(n: int) -> tuple[int, ...]:
    # key giving lexicographic order on (z_1, ..., z_n); z_1 most significant
    out = []
    for z in range(1 << n):
        r = 0
        for i in range(n):
            if (z >> i) & 1:
                r |= 1 << (n - 1 - i)
        out.append(r)
    return tuple(out)


def canonical_rep(n: int, sedentarity: int, z: int) -> int:
    """Lex-least orthant among z and its antipode with sedentarity bits cleared."""
    key = _bit_reversal(n)
    a = z & ~sedentarity
    b = antipode(z, n) & ~sedentarity
    return a if key[a] <= key[b] else b


def _parity_mask(n: int, u: int, want: int) -> int:
    """Orthant-set mask of {z : <z, u> mod 2 == want} for a coordinate mask u."""
    if u == 0:
        return ((1 << (1 << n)) - 1) if want == 0 else 0
    mask = 0
    for z in range(1 << n):
        if (z & u).bit_count() & 1 == want:
            mask |= 1 << z
    return mask


@dataclass
class PhaseStructure:
    """Orthant sets of all hypersurface cells for one sign distribution."""

    n: int
    eps: tuple[int, ...]        # sign bits aligned with subdivision point order
    face_masks: list[int]       # per face id; 0 for vertices of the subdivision

    def cell_mask(self, cell: CompactCell) -> int:
        return self.face_masks[cell.dual_face]


def phase_of_maximal(n: int, eps: tuple[int, ...], points, edge: tuple[int, ...]) -> int:
    """Orthant set of the maximal cell dual to the given edge of the subdivision."""
    if len(edge) != 2:
        raise ValueError("dual face of a maximal cell must be an edge")
    i, j = edge
    u = 0
    for t in range(n):
        if (points[i][t] + points[j][t]) & 1:
            u |= 1 << t
    c = eps[i] ^ eps[j]
    return _parity_mask(n, u, 1 ^ c)


def phase_structure(poset: HypersurfacePoset, eps: tuple[int, ...]) -> PhaseStructure:
    """Orthant sets for every face: unions of the dual-edge sets over edges."""
    n = poset.n
    if n > MAX_VARIABLES:
        raise ValueError(f"at most {MAX_VARIABLES} variables supported")
    fp = poset.subdivision.face_poset()
    points = poset.subdivision.points
    face_masks = [0] * len(fp.faces)
    for fid, face in enumerate(fp.faces):
        if fp.dims[fid] == 1:
            face_masks[fid] = phase_of_maximal(n, eps, points, face)
    for fid, face in enumerate(fp.faces):
        if fp.dims[fid] >= 2:
            mask = 0
            for a in range(len(face)):
                for b in range(a + 1, len(face)):
                    mask |= face_masks[fp.index[(face[a], face[b])]]
            face_masks[fid] = mask
    return PhaseStructure(n, tuple(eps), face_masks)


def phase_of_cell(phases: PhaseStructure, cell: CompactCell) -> int:
    return phases.cell_mask(cell)


@dataclass(frozen=True)
class OrbitClass:
    """A cell together with the canonical orthant of one identification orbit."""

    cell_id: int
    rep: int


def canonical_class(poset: HypersurfacePoset, phases: PhaseStructure,
                    cell_id: int, z: int) -> OrbitClass:
    cell = poset.cells[cell_id]
    if not (phases.cell_mask(cell) >> z) & 1:
        raise ValueError(f"orthant {z} is not in the phase set of cell {cell_id}")
    return OrbitClass(cell_id, canonical_rep(poset.n, cell.sedentarity, z))
