"""In-place partition sorts, partial sorting and selection.

The asymmetric partitions send pivot ties wholly to one side. With
``ties_left`` the left part holds keys ``<= v`` and the right part ``> v``;
the mirrored partition holds ``< v`` left and ``>= v`` right. In both cases
one element with key ``v`` is parked at the boundary cell and excluded from
recursion, so every call strictly shrinks its range.

All sorts recurse into the smaller part and loop on the larger one, keeping
the Python stack at O(log N) even for degenerate splits.
"""

from __future__ import annotations

from typing import List, NamedTuple, Optional

from .core import CapacityError, Counters, Element, SortContext


class PartitionResult(NamedTuple):
    boundary: int
    all_tied: bool


class TieRange(NamedTuple):
    lo: int
    hi: int


# ---------------------------------------------------------------------------
# partition kernels


def _part_left(a: List[Element], l: int, r: int, p: int, c: Counters, diet: bool) -> int:
    """Ties-left partition of ``a[l..r]`` around ``a[p]``; -1 when all tied."""
    c.partitions += 1
    v = a[p].key
    cmp = mv = dist = 0
    i = l
    if diet:
        while i <= r:
            cmp += 1
            if a[i].key != v:
                break
            i += 1
        else:
            c.comparisons += cmp
            return -1
        # rewind one: the main loop compares a[i] again
    j = r
    while True:
        while i <= j:
            cmp += 1
            if v < a[i].key:
                break
            i += 1
        while i < j:
            cmp += 1
            if not v < a[j].key:
                break
            j -= 1
        if i >= j:
            break
        a[i], a[j] = a[j], a[i]
        mv += 2
        dist += 2 * (j - i)
        if p == j:
            p = i
        i += 1
        j -= 1
    b = i - 1
    if p != b:
        a[p], a[b] = a[b], a[p]
        mv += 2
        dist += 2 * (b - p)
    c.comparisons += cmp
    c.moves += mv
    c.move_distance += dist
    return b


def _part_right(a: List[Element], l: int, r: int, p: int, c: Counters, diet: bool) -> int:
    """Mirror of :func:`_part_left`: ties go right, scanning starts at ``r``."""
    c.partitions += 1
    v = a[p].key
    cmp = mv = dist = 0
    j = r
    if diet:
        while j >= l:
            cmp += 1
            if a[j].key != v:
                break
            j -= 1
        else:
            c.comparisons += cmp
            return -1
    i = l
    while True:
        while i <= j:
            cmp += 1
            if a[j].key < v:
                break
            j -= 1
        while i < j:
            cmp += 1
            if not a[i].key < v:
                break
            i += 1
        if i >= j:
            break
        a[i], a[j] = a[j], a[i]
        mv += 2
        dist += 2 * (j - i)
        if p == i:
            p = j
        i += 1
        j -= 1
    b = j + 1
    if p != b:
        a[p], a[b] = a[b], a[p]
        mv += 2
        dist += 2 * (p - b)
    c.comparisons += cmp
    c.moves += mv
    c.move_distance += dist
    return b


def partition_asym_diet(
    ctx: SortContext, data: List[Element], ties_left: bool = True,
    l: int = 0, r: Optional[int] = None, diet: bool = True,
) -> PartitionResult:
    """One asymmetric partitioning step with a uniformly random pivot."""
    if r is None:
        r = len(data) - 1
    if r < l:
        raise ValueError("partition needs a non-empty range")
    p = ctx.rng.randint(l, r)
    kernel = _part_left if ties_left else _part_right
    b = kernel(data, l, r, p, ctx.counters, diet)
    if b < 0:
        return PartitionResult(r, True)
    return PartitionResult(b, False)


def _presorted(a: List[Element], l: int, r: int, c: Counters, from_left: bool) -> bool:
    """POET pre-loop: scan from one end while the ascending order holds."""
    cmp = 0
    if from_left:
        i = l
        while i < r:
            cmp += 1
            if a[i + 1].key < a[i].key:
                break
            i += 1
        done = i >= r
    else:
        j = r
        while j > l:
            cmp += 1
            if a[j].key < a[j - 1].key:
                break
            j -= 1
        done = j <= l
    c.comparisons += cmp
    return done


# ---------------------------------------------------------------------------
# baselines


def quicksort2(ctx: SortContext, data: List[Element]) -> None:
    """Symmetric partitioning; both pointers stop on pivot ties."""
    _qs2(data, 0, len(data) - 1, ctx.counters, ctx.rng)


def _qs2(a, l, r, c, rng):
    while l < r:
        p = rng.randint(l, r)
        c.partitions += 1
        cmp = mv = dist = 0
        if p != r:
            a[p], a[r] = a[r], a[p]
            mv += 2
            dist += 2 * (r - p)
        v = a[r].key
        i = l - 1
        j = r
        while True:
            i += 1
            cmp += 1
            while a[i].key < v:
                i += 1
                cmp += 1
            j -= 1
            while j > l:
                cmp += 1
                if not v < a[j].key:
                    break
                j -= 1
            if i >= j:
                break
            a[i], a[j] = a[j], a[i]
            mv += 2
            dist += 2 * (j - i)
        if i != r:
            a[i], a[r] = a[r], a[i]
            mv += 2
            dist += 2 * (r - i)
        c.comparisons += cmp
        c.moves += mv
        c.move_distance += dist
        if i - l < r - i:
            _qs2(a, l, i - 1, c, rng)
            l = i + 1
        else:
            _qs2(a, i + 1, r, c, rng)
            r = i - 1


def quicksort3(ctx: SortContext, data: List[Element]) -> None:
    """Single-pass ternary partitioning; pivot ties are never recursed into."""
    _qs3(data, 0, len(data) - 1, ctx.counters, ctx.rng)


def _qs3(a, l, r, c, rng):
    while l < r:
        v = a[rng.randint(l, r)].key
        c.partitions += 1
        cmp = mv = dist = 0
        lt = i = l
        gt = r
        while i <= gt:
            x = a[i].key
            cmp += 1
            if x < v:
                if lt != i:
                    a[lt], a[i] = a[i], a[lt]
                    mv += 2
                    dist += 2 * (i - lt)
                lt += 1
                i += 1
            else:
                cmp += 1
                if v < x:
                    if i != gt:
                        a[i], a[gt] = a[gt], a[i]
                        mv += 2
                        dist += 2 * (gt - i)
                    gt -= 1
                else:
                    i += 1
        c.comparisons += cmp
        c.moves += mv
        c.move_distance += dist
        if lt - l < r - gt:
            if lt - 1 > l:
                _qs3(a, l, lt - 1, c, rng)
            l = gt + 1
        else:
            if r > gt + 1:
                _qs3(a, gt + 1, r, c, rng)
            r = lt - 1


# ---------------------------------------------------------------------------
# DIET / FLIP / POET sorts

ZOCK, ZACK, ZUCK = "zock", "zack", "zuck"


def _child_orientations(mode: str, ties_left: bool):
    """Orientation of (left child, right child) after a partition."""
    if mode == ZOCK:
        return ties_left, ties_left
    if mode == ZACK:
        return not ties_left, not ties_left
    # ZUCK: only the branch holding the pivot ties flips, which leaves the
    # left child mirrored-right and the right child left-oriented either way
    if ties_left:
        return False, ties_left
    return ties_left, True


def _flip_sort(a, l, r, ties_left, c, rng, mode, diet, poet):
    while l < r:
        if poet and _presorted(a, l, r, c, ties_left):
            return
        p = rng.randint(l, r)
        if ties_left:
            b = _part_left(a, l, r, p, c, diet)
        else:
            b = _part_right(a, l, r, p, c, diet)
        if b < 0:
            return
        left_o, right_o = _child_orientations(mode, ties_left)
        if b - l < r - b:
            _flip_sort(a, l, b - 1, left_o, c, rng, mode, diet, poet)
            l, ties_left = b + 1, right_o
        else:
            _flip_sort(a, b + 1, r, right_o, c, rng, mode, diet, poet)
            r, ties_left = b - 1, left_o


def zocksort(ctx: SortContext, data: List[Element]) -> None:
    """DIET partitioning with a fixed orientation; fooled by skewed ties."""
    _flip_sort(data, 0, len(data) - 1, True, ctx.counters, ctx.rng, ZOCK, True, False)


def zacksort(ctx: SortContext, data: List[Element], diet: bool = True) -> None:
    _flip_sort(data, 0, len(data) - 1, True, ctx.counters, ctx.rng, ZACK, diet, False)


def zucksort(ctx: SortContext, data: List[Element], diet: bool = True) -> None:
    """Like zacksort, but flips orientation only in the tie-holding branch.

    ``diet=False`` drops the all-tied pre-loop and nothing else, which is how
    the one-extra-comparison cost of DIET is measured.
    """
    _flip_sort(data, 0, len(data) - 1, True, ctx.counters, ctx.rng, ZUCK, diet, False)


def ducksort(ctx: SortContext, data: List[Element]) -> None:
    """Zucksort with the tie pre-loop replaced by a presortedness scan."""
    _flip_sort(data, 0, len(data) - 1, True, ctx.counters, ctx.rng, ZUCK, False, True)


# ---------------------------------------------------------------------------
# partial sorting and selection


def quickpart(ctx: SortContext, data: List[Element], l: int, r: int) -> None:
    """Place order statistics ``l..r`` sorted at positions ``l..r``."""
    n = len(data)
    if not 0 <= l <= r < n:
        raise ValueError(f"need 0 <= l <= r < {n}, got l={l}, r={r}")
    _part_sort(data, 0, n - 1, l, r, True, ctx.counters, ctx.rng)


def _part_sort(a, lo, hi, l, r, ties_left, c, rng):
    while lo < hi:
        p = rng.randint(lo, hi)
        if ties_left:
            b = _part_left(a, lo, hi, p, c, True)
        else:
            b = _part_right(a, lo, hi, p, c, True)
        if b < 0:
            return
        left_o, right_o = _child_orientations(ZUCK, ties_left)
        go_left = b - 1 >= l
        go_right = b + 1 <= r
        if go_left and go_right:
            if b - lo < hi - b:
                _part_sort(a, lo, b - 1, l, r, left_o, c, rng)
                lo, ties_left = b + 1, right_o
            else:
                _part_sort(a, b + 1, hi, l, r, right_o, c, rng)
                hi, ties_left = b - 1, left_o
        elif go_left:
            hi, ties_left = b - 1, left_o
        elif go_right:
            lo, ties_left = b + 1, right_o
        else:
            return


def _select(ctx: SortContext, a: List[Element], k: int, poet: bool) -> TieRange:
    n = len(a)
    if not 0 <= k < n:
        raise ValueError(f"need 0 <= k < {n}, got {k}")
    c = ctx.counters
    rng = ctx.rng
    lo, hi = 0, n - 1
    ties_left = True
    presorted = False
    while lo < hi:
        if poet and _presorted(a, lo, hi, c, ties_left):
            presorted = True
            break
        p = rng.randint(lo, hi)
        if ties_left:
            b = _part_left(a, lo, hi, p, c, not poet)
        else:
            b = _part_right(a, lo, hi, p, c, not poet)
        if b < 0:
            break
        left_o, right_o = _child_orientations(ZUCK, ties_left)
        if k == b:
            # the other ties of a[b] are scattered over the tie-holding side
            if ties_left:
                lo, hi = _gather_ties(a, lo, b - 1, a[b].key, True, c), b
            else:
                lo, hi = b, _gather_ties(a, b + 1, hi, a[b].key, False, c)
            break
        elif k < b:
            hi, ties_left = b - 1, left_o
        else:
            lo, ties_left = b + 1, right_o
    v = a[k].key
    if presorted:
        lo = hi = k
    # the ties of v form one block around the final range: outside it they
    # can only be parked pivots adjacent to the range
    cmp = 0
    while lo > 0:
        cmp += 1
        if a[lo - 1].key != v:
            break
        lo -= 1
    while hi < n - 1:
        cmp += 1
        if a[hi + 1].key != v:
            break
        hi += 1
    c.comparisons += cmp
    return TieRange(lo, hi)


def _gather_ties(a, l, r, v, to_right, c: Counters) -> int:
    """Move the keys equal to ``v`` in ``a[l..r]`` to one end of the range.

    With ``to_right`` the range holds keys ``<= v`` and the ties end up at
    its right end; the index of the first tie (``r + 1`` if none) is
    returned. Otherwise the range holds keys ``>= v``, the ties go left and
    the index of the last tie (``l - 1`` if none) is returned.
    """
    cmp = mv = dist = 0
    i, j = l, r
    while True:
        if to_right:
            while i <= j:
                cmp += 1
                if not a[i].key < v:
                    break
                i += 1
            while i < j:
                cmp += 1
                if a[j].key < v:
                    break
                j -= 1
        else:
            while i <= j:
                cmp += 1
                if not v < a[j].key:
                    break
                j -= 1
            while i < j:
                cmp += 1
                if v < a[i].key:
                    break
                i += 1
        if i >= j:
            break
        a[i], a[j] = a[j], a[i]
        mv += 2
        dist += 2 * (j - i)
        i += 1
        j -= 1
    c.comparisons += cmp
    c.moves += mv
    c.move_distance += dist
    return i if to_right else j


def zackselect(ctx: SortContext, data: List[Element], k: int) -> TieRange:
    """Select the k-th smallest key and report the range of its ties."""
    return _select(ctx, data, k, poet=False)


def duckselect(ctx: SortContext, data: List[Element], k: int) -> TieRange:
    return _select(ctx, data, k, poet=True)


# ---------------------------------------------------------------------------
# stable Partition&Pool


def kiwisort(ctx: SortContext, data: List[Element]) -> None:
    """Stable zacksort using a distant buffer of up to N cells.

    A partition pass streams the range once: one class is compacted into the
    range prefix in encounter order, the other goes to the buffer and is
    copied back behind it. The parked pivot is the last tie (ties left) or
    the first tie (ties right), which is exactly its stable final position.
    """
    n = len(data)
    if ctx.buffer_capacity is not None and ctx.buffer_capacity < n:
        raise CapacityError(f"kiwisort needs {n} buffer cells, context provides {ctx.buffer_capacity}")
    buf: list = [None] * n
    peak = [0]
    _kiwi(data, 0, n - 1, True, ctx.counters, ctx.rng, buf, n, peak)
    if peak[0] > ctx.counters.peak_buffer:
        ctx.counters.peak_buffer = peak[0]


def _kiwi(a, l, r, ties_left, c, rng, buf, n, peak):
    while l < r:
        p = rng.randint(l, r)
        if ties_left:
            b = _kiwi_part_left(a, l, r, p, c, buf, n, peak)
        else:
            b = _kiwi_part_right(a, l, r, p, c, buf, n, peak)
        if b < 0:
            return
        ties_left = not ties_left
        if b - l < r - b:
            _kiwi(a, l, b - 1, ties_left, c, rng, buf, n, peak)
            l = b + 1
        else:
            _kiwi(a, b + 1, r, ties_left, c, rng, buf, n, peak)
            r = b - 1


def _kiwi_part_left(a, l, r, p, c, buf, n, peak):
    c.partitions += 1
    v = a[p].key
    cmp = mv = dist = 0
    i = l
    while i <= r:
        cmp += 1
        if a[i].key != v:
            break
        i += 1
    else:
        c.comparisons += cmp
        return -1
    # a[l..i-1] are ties and stay put; the last of them is held back
    if i > l:
        pend, pend_src = a[i - 1], i - 1
        w = i - 1
    else:
        pend, pend_src = None, -1
        w = l
    nb = 0
    for x in range(i, r + 1):
        e = a[x]
        cmp += 1
        if v < e.key:
            buf[nb] = e
            mv += 1
            dist += n + nb - x
            nb += 1
            continue
        cmp += 1
        if e.key < v:
            if w != x:
                a[w] = e
                mv += 1
                dist += x - w
            w += 1
        else:
            if pend is not None:
                if w != pend_src:
                    a[w] = pend
                    mv += 1
                    dist += pend_src - w
                w += 1
            pend, pend_src = e, x
    b = w
    if b != pend_src:
        a[b] = pend
        mv += 1
        dist += abs(pend_src - b)
    w += 1
    for t in range(nb):
        a[w + t] = buf[t]
        mv += 1
        dist += n + t - (w + t)
    if nb > peak[0]:
        peak[0] = nb
    c.comparisons += cmp
    c.moves += mv
    c.move_distance += dist
    return b


def _kiwi_part_right(a, l, r, p, c, buf, n, peak):
    c.partitions += 1
    v = a[p].key
    cmp = mv = dist = 0
    j = r
    while j >= l:
        cmp += 1
        if a[j].key != v:
            break
        j -= 1
    else:
        c.comparisons += cmp
        return -1
    # a[j+1..r] are ties that keep their cells; the first tie is parked
    first, first_src = None, -1
    w = l
    nb = 0
    for x in range(l, j + 1):
        e = a[x]
        cmp += 1
        if e.key < v:
            if w != x:
                a[w] = e
                mv += 1
                dist += x - w
            w += 1
            continue
        cmp += 1
        if v < e.key or first is not None:
            buf[nb] = e
            mv += 1
            dist += n + nb - x
            nb += 1
        else:
            first, first_src = e, x
    if first is None:
        # no tie before the suffix; its first element is the parked one and
        # the buffer (all > v) must slot in between it and the rest
        first, first_src = a[j + 1], j + 1
        tail_start = j + 2
    else:
        tail_start = j + 1
    b = w
    if b != first_src:
        a[b] = first
        mv += 1
        dist += abs(first_src - b)
    w += 1
    for t in range(nb):
        a[w + t] = buf[t]
        mv += 1
        dist += n + t - (w + t)
    assert w + nb == tail_start
    if nb > peak[0]:
        peak[0] = nb
    c.comparisons += cmp
    c.moves += mv
    c.move_distance += dist
    return b
