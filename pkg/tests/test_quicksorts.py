import itertools
import math
import statistics

import pytest
from hypothesis import given, settings, strategies as st

from symsort import quicksorts as qs
from symsort.core import CapacityError, SortContext, make_elements, verify_target
from symsort.patterns import PatternSpec, generate
from symsort.verify import brute_tie_range, quickpart_ok

UNSTABLE = [qs.quicksort2, qs.quicksort3, qs.zocksort, qs.zacksort, qs.zucksort, qs.ducksort]
ALL = UNSTABLE + [qs.kiwisort]


def sort_keys(fn, ks, seed=0):
    data = make_elements(ks)
    ctx = SortContext(seed=seed)
    fn(ctx, data)
    return data, ctx.counters


@pytest.mark.parametrize("fn", ALL)
@pytest.mark.parametrize("ks", [[3, 1, 2], [2, 3, 1], [1, 3, 2], [], [5], [2, 1, 2, 1]])
def test_small_examples(fn, ks):
    data, _ = sort_keys(fn, ks)
    assert [e.key for e in data] == sorted(ks)


@pytest.mark.parametrize("fn", [qs.quicksort2, qs.quicksort3])
def test_trivial_inputs_cost_nothing(fn):
    for ks in ([], [4]):
        _, c = sort_keys(fn, ks)
        assert c.comparisons == 0 and c.moves == 0


@pytest.mark.parametrize("fn", ALL)
@settings(max_examples=60, deadline=None)
@given(ks=st.lists(st.integers(0, 5), max_size=60), seed=st.integers(0, 2 ** 32))
def test_sorts_match_oracle(fn, ks, seed):
    original = make_elements(ks)
    data = list(original)
    fn(SortContext(seed=seed), data)
    assert verify_target(original, data, strict=fn is qs.kiwisort)


def test_kiwisort_is_stable_example():
    data, _ = sort_keys(qs.kiwisort, [2, 1, 2])
    assert [e.tag for e in data] == [1, 0, 2]


def test_kiwisort_needs_buffer():
    with pytest.raises(CapacityError):
        qs.kiwisort(SortContext(buffer_capacity=3), make_elements([3, 2, 1, 0]))
    c = SortContext(buffer_capacity=4)
    qs.kiwisort(c, make_elements([3, 2, 1, 0]))
    assert c.counters.peak_buffer <= 4


@pytest.mark.parametrize("fn", [qs.zocksort, qs.zacksort, qs.zucksort, qs.kiwisort])
def test_all_tied_terminates_after_one_scan(fn):
    _, c = sort_keys(fn, [7] * 5)
    assert c.comparisons <= 5 and c.moves == 0


def test_ducksort_all_tied_and_presorted():
    _, c = sort_keys(qs.ducksort, [7] * 50)
    assert c.moves == 0 and c.comparisons < 50
    _, c = sort_keys(qs.ducksort, list(range(4096)))
    assert c.comparisons <= 2 * 4096 and c.moves == 0


def test_quicksort2_does_not_terminate_early_on_ties():
    n = 1024
    _, c = sort_keys(qs.quicksort2, [7] * n)
    assert c.comparisons > n * math.log2(n) / 2


def test_quicksort3_single_pass_on_ties():
    _, c = sort_keys(qs.quicksort3, [7] * 4)
    assert c.partitions == 1


def test_quicksort3_beats_quicksort2_on_ties():
    def med(fn):
        return statistics.median(
            sort_keys(fn, [e.key for e in generate(PatternSpec("tielog2", 4096, s))], s)[1].comparisons
            for s in range(25)
        )
    assert med(qs.quicksort3) < med(qs.quicksort2)


# ---------------------------------------------------------------------------
# partitioning


def check_partition(keys, data, res, ties_left):
    assert sorted(data) == sorted(make_elements(keys))
    if res.all_tied:
        assert len(set(keys)) == 1
        return
    b = res.boundary
    v = data[b].key
    left, right = data[:b], data[b + 1:]
    if ties_left:
        assert all(e.key <= v for e in left) and all(e.key > v for e in right)
    else:
        assert all(e.key < v for e in left) and all(e.key >= v for e in right)


@pytest.mark.parametrize("ties_left", [True, False])
@pytest.mark.parametrize("diet", [True, False])
def test_partition_mece_exhaustive(ties_left, diet):
    for n in range(1, 9):
        for keys in itertools.product(range(3), repeat=n):
            for seed in range(2):
                data = make_elements(keys)
                res = qs.partition_asym_diet(SortContext(seed=seed), data, ties_left=ties_left, diet=diet)
                check_partition(keys, data, res, ties_left)


def test_partition_examples():
    ctx = SortContext()
    d = make_elements([5, 5, 5])
    res = qs.partition_asym_diet(ctx, d)
    assert res.all_tied and ctx.counters.moves == 0
    assert qs.partition_asym_diet(SortContext(), make_elements([1])).all_tied
    for seed in range(10):
        d = make_elements([2, 1])
        res = qs.partition_asym_diet(SortContext(seed=seed), d, ties_left=True)
        assert not res.all_tied and [e.key for e in d] == [1, 2]


def test_partition_rejects_empty():
    with pytest.raises(ValueError):
        qs.partition_asym_diet(SortContext(), [])


def test_diet_costs_exactly_one_comparison_per_partition():
    data = generate(PatternSpec("permut", 2000, 1))
    a, b = SortContext(seed=3), SortContext(seed=3)
    qs.zucksort(a, list(data))
    qs.zucksort(b, list(data), diet=False)
    assert a.counters.comparisons - b.counters.comparisons == a.counters.partitions


def test_diet_flag_keeps_arrangement():
    data = generate(PatternSpec("permut", 500, 2))
    x, y = list(data), list(data)
    qs.zucksort(SortContext(seed=1), x)
    qs.zucksort(SortContext(seed=1), y, diet=False)
    assert x == y


# ---------------------------------------------------------------------------
# FLIP


def adversarial(n, pos):
    ks = [1] * n
    ks[pos] = 0
    return ks


def test_zocksort_quadratic_on_skewed_ties():
    # the lone minimum at the far right is only found by a lucky pivot
    n = 2048
    _, c = sort_keys(qs.zocksort, adversarial(n, n - 1), seed=0)
    assert c.comparisons >= n * n / 8


@pytest.mark.parametrize("fn", [qs.zacksort, qs.zucksort])
def test_flip_is_robust(fn):
    n = 2048
    for seed in range(5):
        _, c = sort_keys(fn, adversarial(n, seed * 97 % n), seed)
        assert c.comparisons <= 64 * n * math.log2(n)


def test_child_orientations():
    assert qs._child_orientations(qs.ZOCK, True) == (True, True)
    assert qs._child_orientations(qs.ZACK, True) == (False, False)
    assert qs._child_orientations(qs.ZACK, False) == (True, True)
    # zuck flips only the branch that holds the ties
    assert qs._child_orientations(qs.ZUCK, True) == (False, True)
    assert qs._child_orientations(qs.ZUCK, False) == (False, True)


def test_tie_adaptive_comparisons_bound():
    n = 1 << 12
    d = math.ceil(math.log2(n))
    for fn in (qs.zacksort, qs.zucksort, qs.ducksort):
        _, c = sort_keys(fn, [e.key for e in generate(PatternSpec("tielog2", n, 0))])
        assert c.comparisons <= 8 * n * math.log2(d + 1)


# ---------------------------------------------------------------------------
# partial sorting and selection


def test_quickpart_examples():
    ks = [5, 8, 1, 3, 7, 2, 6, 4]
    d = make_elements(ks)
    qs.quickpart(SortContext(), d, 2, 4)
    assert [e.key for e in d[2:5]] == [3, 4, 5]
    d = make_elements(ks)
    qs.quickpart(SortContext(), d, 0, 7)
    assert [e.key for e in d] == sorted(ks)
    for k in range(8):
        d = make_elements(ks)
        qs.quickpart(SortContext(seed=k), d, k, k)
        assert d[k].key == k + 1


@settings(max_examples=200, deadline=None)
@given(st.lists(st.integers(0, 6), min_size=1, max_size=80), st.data())
def test_quickpart_property(ks, data):
    l = data.draw(st.integers(0, len(ks) - 1))
    r = data.draw(st.integers(l, len(ks) - 1))
    d = make_elements(ks)
    qs.quickpart(SortContext(seed=l), d, l, r)
    assert quickpart_ok(ks, d, l, r)


@pytest.mark.parametrize("l,r", [(-1, 2), (2, 1), (0, 8)])
def test_quickpart_bad_bounds(l, r):
    with pytest.raises(ValueError):
        qs.quickpart(SortContext(), make_elements(range(8)), l, r)


@pytest.mark.parametrize("fn", [qs.zackselect, qs.duckselect])
def test_select_examples(fn):
    assert fn(SortContext(), make_elements([3, 1, 2, 3, 3]), 2) == (2, 4)
    for k in range(6):
        assert fn(SortContext(seed=k), make_elements([4, 0, 5, 2, 1, 3]), k) == (k, k)
        assert fn(SortContext(seed=k), make_elements([9] * 6), k) == (0, 5)
    with pytest.raises(ValueError):
        fn(SortContext(), make_elements([1, 2]), 2)


@pytest.mark.parametrize("fn", [qs.zackselect, qs.duckselect])
@settings(max_examples=200, deadline=None)
@given(ks=st.lists(st.integers(0, 4), min_size=1, max_size=60), data=st.data())
def test_select_tie_range_property(fn, ks, data):
    k = data.draw(st.integers(0, len(ks) - 1))
    d = make_elements(ks)
    lo, hi = fn(SortContext(seed=k), d, k)
    assert (lo, hi) == brute_tie_range(ks, k)
    v = sorted(ks)[k]
    assert all(e.key == v for e in d[lo:hi + 1])
    assert all(e.key < v for e in d[:lo]) and all(e.key > v for e in d[hi + 1:])
