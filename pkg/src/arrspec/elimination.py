"""Exact rank of integer matrices by fraction-free elimination.

Both backends run the same algorithm.  At each step a pivot is chosen by
smallest absolute value, with ties broken by Markowitz cost
(row nnz - 1) * (col nnz - 1).  Every other row with a nonzero in the pivot
column is then replaced by ``(p/g) * row - (a/g) * pivot_row`` with
g = gcd(p, a), and the row is divided by its content.  No fractions are
ever formed, and each step is an invertible row operation over Q, so the
pivot count is the rank.

The compiled kernel (``arrspec._kernels``) works on a dense int64 copy.  If
an entry would leave int64 range, it stops and hands back its pivot count
together with the remaining live rows.  Those rows are valid intermediate
rows, so the Python path finishes them with arbitrary-precision integers.
If the extension is missing, or ARRSPEC_PURE_PYTHON is set, the Python path
is used throughout.
"""
from __future__ import annotations

import os
from math import gcd
from typing import Mapping, Sequence

import numpy as np

try:
    from ._kernels import eliminate_int64 as _eliminate_int64
except ImportError:  # extension not built
    _eliminate_int64 = None

if os.environ.get("ARRSPEC_PURE_PYTHON"):
    _eliminate_int64 = None

HAVE_EXTENSION = _eliminate_int64 is not None

__all__ = ["HAVE_EXTENSION", "integer_rank", "rank_compiled", "rank_python"]

_INT64_MAX = 2**63 - 1

Row = Mapping[int, int]


def rank_python(rows: Sequence[Row]) -> int:
    """Rank of a sparse integer matrix given as ``{column: value}`` rows."""
    work = [{c: int(v) for c, v in r.items() if v} for r in rows]
    col_rows: dict[int, set[int]] = {}
    for i, r in enumerate(work):
        for c in r:
            col_rows.setdefault(c, set()).add(i)
    alive = [i for i, r in enumerate(work) if r]
    alive_set = set(alive)

    rank = 0
    while alive_set:
        best = None
        for i in alive:
            if i not in alive_set:
                continue
            r = work[i]
            row_cost = len(r) - 1
            for c, v in r.items():
                key = (abs(v), row_cost * (len(col_rows[c]) - 1))
                if best is None or key < best[0]:
                    best = (key, i, c)
            if best[0] == (1, 0):
                break
        _, p, pc = best
        prow = work[p]
        pv = prow[pc]
        alive_set.discard(p)
        for c in prow:
            col_rows[c].discard(p)

        for i in list(col_rows[pc]):
            r = work[i]
            a = r[pc]
            g = gcd(pv, a)
            mp, ma = pv // g, a // g
            new = {c: v * mp for c, v in r.items()} if mp != 1 else dict(r)
            for c, v in prow.items():
                nv = new.get(c, 0) - ma * v
                if nv:
                    new[c] = nv
                else:
                    new.pop(c, None)
            content = 0
            for v in new.values():
                content = gcd(content, v)
                if content == 1:
                    break
            if content > 1:
                new = {c: v // content for c, v in new.items()}
            for c in r:
                if c not in new:
                    col_rows[c].discard(i)
            for c in new:
                if c not in r:
                    col_rows.setdefault(c, set()).add(i)
            work[i] = new
            if not new:
                alive_set.discard(i)
        rank += 1
    return rank


def _dense_int64(rows: Sequence[Row], ncols: int) -> np.ndarray | None:
    dense = np.zeros((len(rows), ncols), dtype=np.int64)
    for i, r in enumerate(rows):
        for c, v in r.items():
            if abs(v) > _INT64_MAX - 1:
                return None
            dense[i, c] = v
    return dense


def rank_compiled(rows: Sequence[Row], ncols: int, resume: bool = True) -> int:
    """Rank via the int64 kernel.

    On int64 overflow the live rows are finished by ``rank_python`` when
    ``resume`` is true; otherwise OverflowError is raised.
    """
    if _eliminate_int64 is None:
        raise RuntimeError("compiled kernel unavailable")
    dense = _dense_int64(rows, ncols)
    if dense is None:
        if not resume:
            raise OverflowError("input entries exceed int64")
        return rank_python(rows)
    alive = np.zeros(len(rows), dtype=np.uint8)
    rank, finished = _eliminate_int64(dense, alive)
    if finished:
        return rank
    if not resume:
        raise OverflowError("int64 overflow during elimination")
    rest = []
    for i in np.flatnonzero(alive):
        cols = np.flatnonzero(dense[i])
        rest.append({int(c): int(dense[i, c]) for c in cols})
    return rank + rank_python(rest)


def integer_rank(rows: Sequence[Row], ncols: int, backend: str = "auto") -> int:
    """Exact rank over Q of the integer matrix with the given sparse rows.

    ``backend`` is ``"auto"`` (compiled kernel when built, else Python),
    ``"python"`` or ``"compiled"``.
    """
    if backend == "python":
        return rank_python(rows)
    if backend == "compiled":
        return rank_compiled(rows, ncols)
    if backend != "auto":
        raise ValueError(f"unknown backend {backend!r}")
    if _eliminate_int64 is not None:
        return rank_compiled(rows, ncols)
    return rank_python(rows)
