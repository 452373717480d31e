"""Mergesorts with a distant 100% buffer.

The workspace is one list: data cells ``0..N-1`` followed by buffer cells
``N..2N-1``. A region is named by its base offset (0 or N); a half sorted
"into the buffer" occupies the same offsets shifted by N.
"""

from __future__ import annotations

from typing import List, Sequence

from ..core import Counters, Element, SortContext
from ._merge import copy_run, merge_min

ASC, DESC, ANY = "asc", "desc", "any"


def merge_knuth(ctx: SortContext, left: Sequence[Element], right: Sequence[Element]) -> List[Element]:
    """Stable merge of two ascending runs into a fresh output region.

    The output is modelled as cells following the two runs, so move
    distances are those of a merge into an adjacent region.
    """
    w = list(left) + list(right) + [None] * (len(left) + len(right))
    nl, nr = len(left), len(right)
    merge_min(w, 0, 1, nl, nl, 1, nr, nl + nr, 1, ctx.counters)
    return w[nl + nr:]


def _workspace(ctx: SortContext, data: List[Element]) -> list:
    n = len(data)
    ctx.reserve_buffer(n)
    return data + [None] * n


# ---------------------------------------------------------------------------


def knuthsort(ctx: SortContext, data: List[Element]) -> None:
    """Nocopy mergesort: merges alternate between data and buffer."""
    n = len(data)
    w = _workspace(ctx, data)
    if n:
        _knuth(w, 0, n, False, n, ctx.counters)
    data[:] = w[:n]


def _knuth(w, lo, m, to_buf, n, c: Counters):
    if m == 1:
        if to_buf:
            copy_run(w, lo, 1, 1, n + lo, 1, c)
        return
    h = m // 2
    _knuth(w, lo, h, not to_buf, n, c)
    _knuth(w, lo + h, m - h, not to_buf, n, c)
    src = 0 if to_buf else n
    dst = n - src
    merge_min(w, src + lo, 1, h, src + lo + h, 1, m - h, dst + lo, 1, c)


# ---------------------------------------------------------------------------


def bimesort(ctx: SortContext, data: List[Element]) -> None:
    """Left half to AscLeft, right half to AscRight, merged outside-in.

    The merge loop is driven by the output count alone: once one run is
    used up its pointer walks into the other run from that run's largest
    end, which acts as a sentinel.
    """
    n = len(data)
    w = _workspace(ctx, data)
    if n:
        _bime(w, 0, n, False, False, n, ctx.counters)
    data[:] = w[:n]


def _bime(w, lo, m, to_buf, asc_right, n, c: Counters):
    if m == 1:
        if to_buf:
            copy_run(w, lo, 1, 1, n + lo, 1, c)
        return
    h = m // 2
    _bime(w, lo, h, not to_buf, False, n, c)
    _bime(w, lo + h, m - h, not to_buf, True, n, c)
    src = 0 if to_buf else n
    dst = n - src
    i = src + lo
    lend = i + h
    j = src + lo + m - 1
    if asc_right:
        k, dk = dst + lo + m - 1, -1
    else:
        k, dk = dst + lo, 1
    cmp = dist = 0
    for _ in range(m):
        cmp += 1
        if w[j].key < w[i].key:
            s = j
            j -= 1
        elif i < lend:
            s = i
            i += 1
        else:
            # left run used up and the rest is one tie block: right run order
            s = j
            j -= 1
        w[k] = w[s]
        dist += abs(s - k)
        k += dk
    c.comparisons += cmp
    c.moves += m
    c.move_distance += dist


# ---------------------------------------------------------------------------


def _reconcile(w, lo, h, m, left_base, right_base, c: Counters) -> int:
    """Bring both halves into one region by copying the smaller half."""
    if left_base == right_base:
        return left_base
    if h <= m - h:
        copy_run(w, left_base + lo, 1, h, right_base + lo, 1, c)
        return right_base
    copy_run(w, right_base + lo + h, 1, m - h, left_base + lo + h, 1, c)
    return left_base


def omitsort(ctx: SortContext, data: List[Element]) -> str:
    """Mergesort that skips merges whose halves do not overlap.

    Returns the region ("data") the result was assembled in before the final
    copy-back, which is always "data" for the caller-visible list.
    """
    n = len(data)
    w = _workspace(ctx, data)
    c = ctx.counters
    if n:
        base = _omit(w, 0, n, n, c)
        if base:
            copy_run(w, n, 1, n, 0, 1, c)
    data[:] = w[:n]
    return "data"


def _omit(w, lo, m, n, c: Counters) -> int:
    if m == 1:
        return 0
    h = m // 2
    lb = _omit(w, lo, h, n, c)
    rb = _omit(w, lo + h, m - h, n, c)
    c.comparisons += 1
    if not w[rb + lo + h].key < w[lb + lo + h - 1].key:
        return _reconcile(w, lo, h, m, lb, rb, c)
    base = _reconcile(w, lo, h, m, lb, rb, c)
    other = n - base
    merge_min(w, base + lo, 1, h, base + lo + h, 1, m - h, other + lo, 1, c)
    return other


# ---------------------------------------------------------------------------


def octosort(ctx: SortContext, data: List[Element]) -> None:
    """Omitsort whose runs keep the direction the data arrived in.

    A run is ASC (AscLeft) or DESC (stored AscRight, i.e. the reverse of its
    stable ascending order). Children of one direction merge lazily in that
    direction; disagreeing children are merged to ASC. Only the top level
    enforces ascending order, with one final reversal if needed.
    """
    n = len(data)
    w = _workspace(ctx, data)
    c = ctx.counters
    if n:
        base, d = _octo(w, 0, n, n, c)
        if d == DESC:
            if base:
                copy_run(w, n + n - 1, -1, n, 0, 1, c)
            else:
                _reverse(w, 0, n - 1, c)
        elif base:
            copy_run(w, n, 1, n, 0, 1, c)
    data[:] = w[:n]


def _reverse(w, i, j, c: Counters):
    mv = dist = 0
    while i < j:
        w[i], w[j] = w[j], w[i]
        mv += 2
        dist += 2 * (j - i)
        i += 1
        j -= 1
    c.moves += mv
    c.move_distance += dist


def _octo(w, lo, m, n, c: Counters):
    if m == 1:
        return 0, ANY
    h = m // 2
    lb, dl = _octo(w, lo, h, n, c)
    rb, dr = _octo(w, lo + h, m - h, n, c)
    base = _reconcile(w, lo, h, m, lb, rb, c)
    L0, L1 = base + lo, base + lo + h - 1
    R0, R1 = base + lo + h, base + lo + m - 1
    if dl == ANY and dr == ANY:
        # two single elements: either order is a presorted run
        c.comparisons += 1
        return base, DESC if w[R0].key < w[L0].key else ASC
    if dl == ANY:
        dl = dr
    elif dr == ANY:
        dr = dl
    other = n - base
    if dl == dr == ASC:
        c.comparisons += 1
        if not w[R0].key < w[L1].key:
            return base, ASC
        merge_min(w, L0, 1, h, R0, 1, m - h, other + lo, 1, c)
        return other, ASC
    if dl == dr == DESC:
        c.comparisons += 1
        if w[R0].key < w[L1].key:
            return base, DESC
        # stable ascending order read from the right ends, written leftward
        merge_min(w, L1, -1, h, R1, -1, m - h, other + lo + m - 1, -1, c)
        return other, DESC
    # disagreeing directions: enforce ascending, reading the DESC run backwards
    if dl == ASC:
        merge_min(w, L0, 1, h, R1, -1, m - h, other + lo, 1, c)
    else:
        merge_min(w, L1, -1, h, R0, 1, m - h, other + lo, 1, c)
    return other, ASC
