"""Gapped symmetric mergesorts: the Frogsort family, Geckosort and Squidsort.

A node of ``n`` data elements owns ``n + b`` consecutive cells starting at
``s``. In layout *Ab* its data sits left of its gap, in layout *aB* right of
it. A node always has an Ab child on the left and an aB child on the right,
so both children's gaps face the middle, possibly with extra free cells
between them. Merging from the outer borders inward then only needs ``b`` to
be at least the size of the inner child (the right one for Ab, the left one
for aB).

The split rule is the only difference between Frogsort0, 1 and 2. It maps
``(n, b, ab)`` to ``(n_l, b_l, n_r, b_r)``.
"""

from __future__ import annotations

import math
import sys
from contextlib import contextmanager
from typing import Callable, List, Optional, Tuple

from ..core import ConfigurationError, Counters, Element, SortContext
from ._merge import copy_run, merge_max, merge_min
from .knuth import ANY, ASC, DESC, _reverse

Split = Callable[[int, int, bool], Tuple[int, int, int, int]]

SQUID2_DEFAULT_P = 0.14


# ---------------------------------------------------------------------------
# split rules


def _split0(n, b, ab):
    """Triplet split: whole triplets, surplus triplet to the outer side."""
    if n & 1:
        # odd top level: all triplets left, the lone element as right child
        return n - 1, b, 1, 0
    if n == 2:
        return 1, 0, 1, 0
    t = n >> 1
    tl = (t + 1) >> 1 if ab else t >> 1
    tr = t - tl
    return 2 * tl, tl, 2 * tr, tr


def _split1(n, b, ab):
    if ab:
        nl = (n + 1) >> 1
        nr = n >> 1
    else:
        nl = n >> 1
        nr = (n + 1) >> 1
    return nl, nl >> 1, nr, nr >> 1


def check_p(p) -> float:
    if isinstance(p, bool) or not isinstance(p, (int, float)) or not 0 < p <= 0.5:
        raise ConfigurationError(f"p must satisfy 0 < p <= 0.5, got {p!r}")
    return float(p)


def frog2_bufsize(m: int, p: float) -> int:
    if m < 2:
        return 0
    return max(1, min(m >> 1, math.ceil(p * m)))


def _make_split2(p: float) -> Split:
    def split(n, b, ab):
        # the inner child gets exactly b elements, the outer one the rest
        ni, no = b, n - b
        bi = frog2_bufsize(ni, p)
        bo = min(frog2_bufsize(no, p), b - bi)
        if ab:
            return no, bo, ni, bi
        return ni, bi, no, bo
    return split


# ---------------------------------------------------------------------------
# layout, setup and shared plumbing


def _leaf_cells(split: Split, s, n, b, ab, out: List[int]) -> None:
    if n == 1:
        out.append(s)
        return
    nl, bl, nr, br = split(n, b, ab)
    _leaf_cells(split, s, nl, bl, True, out)
    _leaf_cells(split, s + n + b - nr - br, nr, br, False, out)


def _setup(w: list, cells: List[int], c: Counters, trace) -> None:
    """Spread the data from the front of ``w`` to its leaf cells."""
    mv = dist = 0
    for i in range(len(cells) - 1, -1, -1):
        p = cells[i]
        if p != i:
            w[p] = w[i]
            mv += 1
            dist += p - i
    c.moves += mv
    c.move_distance += dist
    if trace is not None:
        live = set(cells)
        for i in range(len(w)):
            if i not in live:
                w[i] = None
        trace.append(list(w))


def _snap(w, s, n, b, ab, trace) -> None:
    gap = range(s + n, s + n + b) if ab else range(s, s + b)
    for i in gap:
        w[i] = None
    trace.append(list(w))


@contextmanager
def _deep_recursion(limit=20000):
    old = sys.getrecursionlimit()
    if old < limit:
        sys.setrecursionlimit(limit)
    try:
        yield
    finally:
        sys.setrecursionlimit(old)


def _prepare(ctx: SortContext, data: List[Element], split: Split, b: int, trace):
    n = len(data)
    ctx.reserve_buffer(b)
    w = data + [None] * b
    cells: List[int] = []
    _leaf_cells(split, 0, n, b, True, cells)
    _setup(w, cells, ctx.counters, trace)
    return w


# ---------------------------------------------------------------------------
# Frogsort


def _frog(w, s, n, b, ab, split, c, trace):
    nl, bl, nr, br = split(n, b, ab)
    if nl > 1:
        _frog(w, s, nl, bl, True, split, c, trace)
    rs = s + n + b - nr - br
    if nr > 1:
        _frog(w, rs, nr, br, False, split, c, trace)
    r = rs + br
    if ab:
        merge_max(w, s + nl - 1, -1, nl, r + nr - 1, -1, nr, s + n - 1, -1, c)
    else:
        merge_min(w, s, 1, nl, r, 1, nr, s + b, 1, c)
    if trace is not None:
        _snap(w, s, n, b, ab, trace)


def _run_frog(ctx, data, split, b, trace):
    n = len(data)
    if n < 2:
        return
    with _deep_recursion():
        w = _prepare(ctx, data, split, b, trace)
        _frog(w, 0, n, b, True, split, ctx.counters, trace)
    data[:] = w[:n]


def frogsort0(ctx: SortContext, data: List[Element], trace: Optional[list] = None) -> None:
    """Frogsort on triplets: each pair of elements starts with one gap cell.

    With an odd count the lone last element is merged in by the top call.
    ``trace`` collects a workspace snapshot after setup and after every
    merge; cells that hold no live data are ``None`` in the snapshots.
    """
    _run_frog(ctx, data, _split0, len(data) >> 1, trace)


def frogsort1(ctx: SortContext, data: List[Element], trace: Optional[list] = None) -> None:
    """Frogsort on single elements with a buffer of ``N // 2``."""
    _run_frog(ctx, data, _split1, len(data) >> 1, trace)


def frogsort2(ctx: SortContext, data: List[Element], p: float = 0.5, trace: Optional[list] = None) -> None:
    """Frogsort whose inner branches get a fraction ``p`` of each node."""
    p = check_p(p)
    _run_frog(ctx, data, _make_split2(p), frog2_bufsize(len(data), p), trace)


# ---------------------------------------------------------------------------
# Geckosort: Ab nodes produce AscLeft, aB nodes produce AscRight


def _gecko(w, s, n, b, ab, c):
    nl, bl, nr, br = _split1(n, b, ab)
    if nl > 1:
        _gecko(w, s, nl, bl, True, c)
    rs = s + n + b - nr - br
    if nr > 1:
        _gecko(w, rs, nr, br, False, c)
    r = rs + br
    # left child is ascending, right child holds its maximum at its left end
    if ab:
        merge_max(w, s + nl - 1, -1, nl, r, 1, nr, s + n - 1, -1, c)
    else:
        merge_max(w, s + nl - 1, -1, nl, r, 1, nr, s + b, 1, c)


def geckosort(ctx: SortContext, data: List[Element]) -> None:
    n = len(data)
    if n < 2:
        return
    b = n >> 1
    with _deep_recursion():
        w = _prepare(ctx, data, _split1, b, None)
        _gecko(w, 0, n, b, True, ctx.counters)
    data[:] = w[:n]


# ---------------------------------------------------------------------------
# Squidsort: Frogsort with omitted merges and data-driven direction


def _squid(w, s, n, b, ab, split, c):
    nl, bl, nr, br = split(n, b, ab)
    dl = _squid(w, s, nl, bl, True, split, c) if nl > 1 else ANY
    rs = s + n + b - nr - br
    dr = _squid(w, rs, nr, br, False, split, c) if nr > 1 else ANY
    l0, l1 = s, s + nl - 1
    r0, r1 = rs + br, s + n + b - 1
    if dl == ANY and dr == ANY:
        c.comparisons += 1
        dl = dr = DESC if w[r0].key < w[l0].key else ASC
        omit = True
    else:
        if dl == ANY:
            dl = dr
        elif dr == ANY:
            dr = dl
        omit = None
    # the outer child decides the direction of the node
    d = dl if ab else dr
    if ab:
        if d == ASC:
            rmin, rmax = (r0, r1) if dr == ASC else (r1, r0)
            if omit is None:
                c.comparisons += 1
                omit = not w[rmin].key < w[l1].key
            if omit:
                copy_run(w, rmin, 1 if dr == ASC else -1, nr, s + nl, 1, c)
            else:
                merge_max(w, l1, -1, nl, rmax, -1 if dr == ASC else 1, nr, s + n - 1, -1, c)
        else:
            rmin, rmax = (r1, r0) if dr == DESC else (r0, r1)
            if omit is None:
                c.comparisons += 1
                omit = w[rmax].key < w[l1].key
            if omit:
                copy_run(w, rmax, 1 if dr == DESC else -1, nr, s + nl, 1, c)
            else:
                merge_min(w, l1, -1, nl, rmin, -1 if dr == DESC else 1, nr, s + n - 1, -1, c)
    else:
        if dl == ASC:
            lmin, lmax, lstep = l0, l1, 1
        else:
            lmin, lmax, lstep = l1, l0, -1
        if d == ASC:
            if omit is None:
                c.comparisons += 1
                omit = not w[r0].key < w[lmax].key
            if omit:
                copy_run(w, lmin, lstep, nl, s + b, 1, c)
            else:
                merge_min(w, lmin, lstep, nl, r0, 1, nr, s + b, 1, c)
        else:
            if omit is None:
                c.comparisons += 1
                omit = w[r0].key < w[lmin].key
            if omit:
                copy_run(w, lmax, -lstep, nl, s + b, 1, c)
            else:
                merge_max(w, lmax, -lstep, nl, r0, 1, nr, s + b, 1, c)
    return d


def squidsort(ctx: SortContext, data: List[Element], p: float = 0.5) -> None:
    """Frogsort2 splits with Octosort's lazily enforced direction.

    Every node keeps the direction of its outer child and skips the merge
    when one comparison proves the halves do not overlap. Only the top
    level turns a descending result around.
    """
    p = check_p(p)
    n = len(data)
    if n < 2:
        return
    split = _split1 if p == 0.5 else _make_split2(p)
    b = frog2_bufsize(n, p)
    with _deep_recursion():
        w = _prepare(ctx, data, split, b, None)
        if _squid(w, 0, n, b, True, split, ctx.counters) == DESC:
            _reverse(w, 0, n - 1, ctx.counters)
    data[:] = w[:n]


def squidsort1(ctx: SortContext, data: List[Element]) -> None:
    squidsort(ctx, data, 0.5)


def squidsort2(ctx: SortContext, data: List[Element], p: float = SQUID2_DEFAULT_P) -> None:
    squidsort(ctx, data, p)
