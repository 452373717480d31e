"""Binary merge kernels over a single workspace list.

Runs are described by a start cell, a step (+1 or -1) and a length, so one
kernel serves every read/write direction the mirrored algorithms need.
Only the run that just yielded is checked for exhaustion. A remainder that
already sits in its destination cells is not moved.
"""

from __future__ import annotations

from ..core import Counters


def merge_min(w: list, a: int, da: int, na: int, b: int, db: int, nb: int,
              k: int, dk: int, c: Counters) -> None:
    """Emit the smaller head first; ties go to run ``a``."""
    cmp = mv = dist = 0
    if na and nb:
        while True:
            cmp += 1
            if w[b].key < w[a].key:
                w[k] = w[b]
                mv += 1
                dist += abs(b - k)
                k += dk
                b += db
                nb -= 1
                if not nb:
                    break
            else:
                w[k] = w[a]
                mv += 1
                dist += abs(a - k)
                k += dk
                a += da
                na -= 1
                if not na:
                    break
    mv2, dist2 = _drain(w, a, da, na, k, dk) if na else _drain(w, b, db, nb, k, dk)
    c.comparisons += cmp
    c.moves += mv + mv2
    c.move_distance += dist + dist2


def merge_max(w: list, a: int, da: int, na: int, b: int, db: int, nb: int,
              k: int, dk: int, c: Counters) -> None:
    """Emit the larger head first; ties go to run ``b``."""
    cmp = mv = dist = 0
    if na and nb:
        while True:
            cmp += 1
            if w[b].key < w[a].key:
                w[k] = w[a]
                mv += 1
                dist += abs(a - k)
                k += dk
                a += da
                na -= 1
                if not na:
                    break
            else:
                w[k] = w[b]
                mv += 1
                dist += abs(b - k)
                k += dk
                b += db
                nb -= 1
                if not nb:
                    break
    mv2, dist2 = _drain(w, a, da, na, k, dk) if na else _drain(w, b, db, nb, k, dk)
    c.comparisons += cmp
    c.moves += mv + mv2
    c.move_distance += dist + dist2


def _drain(w, src, ds, n, k, dk):
    if not n or (src == k and ds == dk):
        return 0, 0
    if ds == dk:
        gap = abs(src - k)
        for _ in range(n):
            w[k] = w[src]
            src += ds
            k += dk
        return n, gap * n
    # reversing copy; callers guarantee source and destination are disjoint
    dist = 0
    for _ in range(n):
        w[k] = w[src]
        dist += abs(src - k)
        src += ds
        k += dk
    return n, dist


def copy_run(w: list, src: int, ds: int, n: int, k: int, dk: int, c: Counters) -> None:
    mv, dist = _drain(w, src, ds, n, k, dk)
    c.moves += mv
    c.move_distance += dist
