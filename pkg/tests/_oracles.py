"""Independent brute-force oracles used to pin expected values.

Everything here works from definitions with rational arithmetic and stays
deliberately separate from the package's algorithms.
"""

from fractions import Fraction
from itertools import combinations


def frac_det(mat):
    mat = [[Fraction(x) for x in row] for row in mat]
    n = len(mat)
    det = Fraction(1)
    for c in range(n):
        piv = next((r for r in range(c, n) if mat[r][c] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != c:
            mat[c], mat[piv] = mat[piv], mat[c]
            det = -det
        det *= mat[c][c]
        inv = 1 / mat[c][c]
        for r in range(c + 1, n):
            if mat[r][c] != 0:
                f = mat[r][c] * inv
                mat[r] = [a - f * b for a, b in zip(mat[r], mat[c])]
    return det


def frac_affine_rank(points):
    if len(points) <= 1:
        return 0
    base = points[0]
    rows = [[Fraction(a - b) for a, b in zip(p, base)] for p in points[1:]]
    ncols = len(rows[0])
    rank = 0
    for c in range(ncols):
        piv = next((r for r in range(rank, len(rows)) if rows[r][c] != 0), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        inv = 1 / rows[rank][c]
        for r in range(len(rows)):
            if r != rank and rows[r][c] != 0:
                f = rows[r][c] * inv
                rows[r] = [a - f * b for a, b in zip(rows[r], rows[rank])]
        rank += 1
    return rank


def _solve_plane(apts, heights, combo):
    """(alpha, beta) with <alpha, a_i> + beta = h_i on the combo, or None."""
    m = len(apts[0])
    mat = [[Fraction(x) for x in apts[i]] + [Fraction(1)] for i in combo]
    rhs = [Fraction(heights[i]) for i in combo]
    size = m + 1
    aug = [mat[r] + [rhs[r]] for r in range(size)]
    for c in range(size):
        piv = next((r for r in range(c, size) if aug[r][c] != 0), None)
        if piv is None:
            return None
        aug[c], aug[piv] = aug[piv], aug[c]
        inv = 1 / aug[c][c]
        aug[c] = [v * inv for v in aug[c]]
        for r in range(size):
            if r != c and aug[r][c] != 0:
                f = aug[r][c]
                aug[r] = [v - f * w for v, w in zip(aug[r], aug[c])]
    sol = [aug[r][size] for r in range(size)]
    return sol[:m], sol[m]


def brute_lower_cells(apts, heights):
    """Maximal cells of the regular subdivision, by enumerating all candidate
    supporting planes through (m+1)-subsets of lifted points."""
    k = len(apts)
    m = len(apts[0])
    cells = set()
    for combo in combinations(range(k), m + 1):
        plane = _solve_plane(apts, heights, combo)
        if plane is None:
            continue
        alpha, beta = plane
        vals = [sum(a * x for a, x in zip(alpha, apts[j])) + beta for j in range(k)]
        if any(heights[j] < vals[j] for j in range(k)):
            continue
        tight = tuple(sorted(j for j in range(k) if heights[j] == vals[j]))
        if frac_affine_rank([apts[j] for j in tight]) == m:
            cells.add(tight)
    if not cells:
        # affine lift: the trivial subdivision
        return [tuple(range(k))]
    return sorted(cells)


def naive_gf2_rank(rows):
    """Rank of a 0/1 matrix over GF(2) from row reduction on lists."""
    work = [list(r) for r in rows]
    if not work:
        return 0
    ncols = len(work[0])
    rank = 0
    for c in range(ncols):
        piv = next((r for r in range(rank, len(work)) if work[r][c]), None)
        if piv is None:
            continue
        work[rank], work[piv] = work[piv], work[rank]
        for r in range(len(work)):
            if r != rank and work[r][c]:
                work[r] = [(a + b) % 2 for a, b in zip(work[r], work[rank])]
        rank += 1
        if rank == len(work):
            break
    return rank
