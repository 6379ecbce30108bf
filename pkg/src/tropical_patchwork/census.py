"""Census harness: random triangulations x random signs, CSV rows, histograms.

Rows are computed by a worker pool but always emitted in (tri_index,
sign_index) order, and every stream derives from (seed, tri_index,
sign_index), so the CSV body is reproducible for a fixed seed regardless of
the worker count (wall_ms excepted, being a measurement).
"""

from __future__ import annotations

import logging
import multiprocessing
import os
import time
from dataclasses import dataclass
from fractions import Fraction

from .core import PatchworkError
from .generators import (GeneratorConfig, GeneratorError, bound_b0, bound_b1,
                         bound_chi)
from .homology import analyze_with_poset
from .hypersurface import compact_cells
from .subdivision import regular_subdivision

log = logging.getLogger(__name__)


class CensusBoundViolation(PatchworkError):
    """A computed Betti vector broke a proven bound; indicates a bug."""


@dataclass(frozen=True)
class CensusRow:
    tri_index: int
    sign_index: int
    tri_seed: int
    sign_seed: int
    full: bool
    unimodular: bool
    f: tuple[int, ...]
    b: tuple[int, ...]
    chi: int
    wall_ms: int


def csv_header(n: int) -> str:
    fcols = ",".join(f"f{i}" for i in range(n))
    bcols = ",".join(f"b{i}" for i in range(n - 1))
    return f"tri_index,sign_index,tri_seed,sign_seed,full,unimodular,{fcols},{bcols},chi,wall_ms"


def row_to_csv(row: CensusRow) -> str:
    flags = f"{str(row.full).lower()},{str(row.unimodular).lower()}"
    nums = ",".join(str(x) for x in (*row.f, *row.b, row.chi))
    return (f"{row.tri_index},{row.sign_index},{row.tri_seed},{row.sign_seed},"
            f"{flags},{nums},{row.wall_ms}")


def _check_bounds(n: int, d: int, row: CensusRow) -> None:
    if n != 4:
        return  # the closed-form bounds below are specific to surfaces
    if row.b[1] > bound_b1(d):
        raise CensusBoundViolation(
            f"b1={row.b[1]} exceeds {bound_b1(d)} at row {row.tri_index}/{row.sign_index}")
    if row.unimodular:
        if row.b[0] > bound_b0(d):
            raise CensusBoundViolation(
                f"unimodular b0={row.b[0]} exceeds {bound_b0(d)} "
                f"at row {row.tri_index}/{row.sign_index}")
        if row.chi != bound_chi(d):
            raise CensusBoundViolation(
                f"unimodular chi={row.chi} != {bound_chi(d)} "
                f"at row {row.tri_index}/{row.sign_index}")


def _tri_rows(args) -> list[CensusRow] | None:
    cfg, tri_index, signs_per_tri = args
    try:
        poly = cfg.triangulation(tri_index)
    except GeneratorError as exc:
        log.warning("tri_index %d skipped: %s", tri_index, exc)
        return None
    sub = regular_subdivision(poly)
    fvec = sub.f_vector()
    unimod = sub.is_unimodular
    poset = compact_cells(sub)
    rows = []
    for sign_index in range(signs_per_tri):
        eps = cfg.signs(tri_index, sign_index)
        t0 = time.perf_counter()
        result = analyze_with_poset(poset, poly, eps)
        wall_ms = int((time.perf_counter() - t0) * 1000)
        row = CensusRow(tri_index, sign_index, cfg.triangulation_seed(tri_index),
                        cfg.sign_seed(tri_index, sign_index),
                        sub.is_full, unimod, fvec, result.betti.b,
                        result.betti.chi, wall_ms)
        _check_bounds(cfg.n, cfg.d, row)
        rows.append(row)
    return rows


def default_workers() -> int:
    env = os.environ.get("PATCHWORK_THREADS")
    if env:
        return max(1, int(env))
    return os.cpu_count() or 1


def run_census(n: int, d: int, triangulations: int, signs: int, seed: int,
               lam: Fraction | int | str = Fraction(1, 4),
               workers: int | None = None) -> tuple[list[CensusRow], int]:
    """All census rows in index order plus the number of skipped triangulations."""
    if triangulations < 1 or signs < 1:
        raise ValueError("need at least one triangulation and one sign distribution")
    cfg = GeneratorConfig(n, d, seed, Fraction(lam))
    if workers is None:
        workers = default_workers()
    tasks = [(cfg, i, signs) for i in range(triangulations)]
    results: list[list[CensusRow] | None]
    if workers <= 1 or triangulations == 1:
        results = [_tri_rows(t) for t in tasks]
    else:
        with multiprocessing.Pool(workers) as pool:
            results = pool.map(_tri_rows, tasks, chunksize=1)
    rows: list[CensusRow] = []
    skipped = 0
    for res in results:
        if res is None:
            skipped += 1
        else:
            rows.extend(res)
    return rows, skipped


def rows_to_csv(rows: list[CensusRow], n: int) -> str:
    lines = [csv_header(n)]
    lines.extend(row_to_csv(r) for r in rows)
    return "\n".join(lines) + "\n"


def betti_histogram(rows: list[CensusRow]) -> list[tuple[tuple[int, ...], int, float]]:
    """(betti vector, count, percentage), most frequent first."""
    counts: dict[tuple[int, ...], int] = {}
    for row in rows:
        counts[row.b] = counts.get(row.b, 0) + 1
    total = len(rows)
    ordered = sorted(counts.items(), key=lambda kv: (-kv[1], kv[0]))
    return [(b, c, 100.0 * c / total) for b, c in ordered]


def format_summary(rows: list[CensusRow], skipped: int, n: int, d: int) -> str:
    lines = [f"census: n={n} d={d} rows={len(rows)} skipped_triangulations={skipped}"]
    lines.append("betti histogram:")
    for b, count, pct in betti_histogram(rows):
        label = "(" + ",".join(str(x) for x in b) + ")"
        lines.append(f"  {label:<16} {count:>8}  {pct:6.2f}%")
    return "\n".join(lines)
