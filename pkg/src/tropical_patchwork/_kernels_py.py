"""Pure-Python twins of the compiled kernels.

Arbitrary-precision integers throughout, so these never refuse an input.
The compiled module in ``_kernels.pyx`` implements the same contracts on
bounded machine integers and returns None when a value would not fit.
"""

from __future__ import annotations

BACKEND = "python"


def gf2_rank_bitrows(rows: list[int], ncols: int) -> int:
    """Rank over GF(2); each row is an int bitset (bit j = column j)."""
    pivots: dict[int, int] = {}
    rank = 0
    for row in rows:
        while row:
            low = row & -row
            piv = pivots.get(low)
            if piv is None:
                pivots[low] = row
                rank += 1
                break
            row ^= piv
    return rank


def affine_values(flat: list[int], k: int, m: int, u: tuple[int, ...], c: int) -> list[int]:
    """<u, a_i> + c for the k points stored row-major in flat."""
    out = []
    pos = 0
    for _ in range(k):
        acc = c
        for j in range(m):
            acc += u[j] * flat[pos + j]
        out.append(acc)
        pos += m
    return out


def slack_vector(flat: list[int], k: int, m: int, heights: list[int],
                 w: tuple[int, ...], delta: int, b: int) -> list[int]:
    """delta*h_i - <w, a_i> - b for the k lifted points."""
    out = []
    pos = 0
    for i in range(k):
        acc = delta * heights[i] - b
        for j in range(m):
            acc -= w[j] * flat[pos + j]
        out.append(acc)
        pos += m
    return out
