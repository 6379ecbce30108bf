"""Kernel selection: compiled extension when available, pure Python otherwise.

Set PATCHWORK_PURE_PYTHON=1 to force the fallback. The compiled kernels work
on machine integers and return None for inputs that would overflow; wrappers
here transparently re-run such calls on the pure path, so results are
identical either way.
"""

from __future__ import annotations

import os

from . import _kernels_py as _py

_ext = None
if os.environ.get("PATCHWORK_PURE_PYTHON") != "1":
    try:
        from . import _kernels as _ext  # type: ignore[attr-defined]
    except ImportError:
        _ext = None

BACKEND = _ext.BACKEND if _ext is not None else _py.BACKEND


def gf2_rank_bitrows(rows: list[int], ncols: int) -> int:
    if _ext is not None:
        got = _ext.gf2_rank_bitrows(rows, ncols)
        if got is not None:
            return got
    return _py.gf2_rank_bitrows(rows, ncols)


def affine_values(flat, k, m, u, c):
    if _ext is not None:
        got = _ext.affine_values(flat, k, m, u, c)
        if got is not None:
            return got
    return _py.affine_values(flat, k, m, u, c)


def slack_vector(flat, k, m, heights, w, delta, b):
    if _ext is not None:
        got = _ext.slack_vector(flat, k, m, heights, w, delta, b)
        if got is not None:
            return got
    return _py.slack_vector(flat, k, m, heights, w, delta, b)
