"""Self-check suites behind ``symsort verify``.

Each suite returns a list of failure strings; an empty list means it passed.
Failures carry the seed and input needed to reproduce them.
"""

from __future__ import annotations

import itertools
import math
import random
from typing import Callable, Dict, List, Optional

from . import quicksorts as qs
from .core import SortContext, make_elements, verify_target
from .patterns import PATTERNS, PatternSpec, generate, mix_seed
from .registry import Algorithm, algorithm_names, get_algorithm

EXHAUSTIVE_LEN = 7
ALPHABET = (0, 1, 2)


def exhaustive_keys(max_len=EXHAUSTIVE_LEN, alphabet=ALPHABET):
    for n in range(max_len + 1):
        yield from itertools.product(alphabet, repeat=n)


def _check_one(algo: Algorithm, keys, seed: int) -> Optional[str]:
    original = make_elements(keys)
    data = list(original)
    algo.fn(SortContext(seed=seed), data)
    if not verify_target(original, data, strict=algo.stable):
        kind = "unstable or unsorted" if algo.stable else "unsorted"
        return f"{algo.name}: {kind} output for seed={seed} keys={list(keys)}"
    return None


def sort_suite(algo: Algorithm, fuzz_cases: int = 400, max_n: int = 300, seed: int = 0) -> List[str]:
    fails = []
    for keys in exhaustive_keys():
        msg = _check_one(algo, keys, seed)
        if msg:
            fails.append(msg)
            break
    rng = random.Random(mix_seed("fuzz", algo.name, seed))
    for i in range(fuzz_cases):
        pattern = PATTERNS[i % len(PATTERNS)]
        n = rng.randint(1, max_n)
        s = mix_seed(seed, algo.name, i)
        keys = [e.key for e in generate(PatternSpec(pattern, n, s))]
        msg = _check_one(algo, keys, s)
        if msg:
            fails.append(msg + f" pattern={pattern}")
            break
    fails += _bounds(algo, seed)
    return fails


def _bounds(algo: Algorithm, seed: int) -> List[str]:
    """Counter sanity on one permutation."""
    n = 512
    data = generate(PatternSpec("permut", n, seed))
    ctx = SortContext(seed=seed)
    algo.fn(ctx, data)
    c = ctx.counters
    fails = []
    if min(c.comparisons, c.moves, c.move_distance, c.peak_buffer) < 0:
        fails.append(f"{algo.name}: negative counter {c.as_dict()}")
    if algo.name == "knuthsort" and c.comparisons > n * math.log2(n):
        fails.append(f"knuthsort: {c.comparisons} comparisons exceed n*log2(n)")
    if algo.family == "merge" and c.peak_buffer > n:
        fails.append(f"{algo.name}: peak buffer {c.peak_buffer} above n")
    return fails


def partition_suite(cases: int = 2000, seed: int = 0) -> List[str]:
    """Every element on exactly one side, ties wholly on the declared side."""
    rng = random.Random(mix_seed("partition", seed))
    for i in range(cases):
        n = rng.randint(1, 40)
        keys = [rng.randint(0, rng.randint(0, 6)) for _ in range(n)]
        ties_left = bool(i & 1)
        diet = bool(i & 2)
        data = make_elements(keys)
        ctx = SortContext(seed=i)
        res = qs.partition_asym_diet(ctx, data, ties_left=ties_left, diet=diet)
        bad = sorted(data) != sorted(make_elements(keys))
        if res.all_tied:
            bad = bad or len(set(keys)) != 1
        else:
            b = res.boundary
            v = data[b].key
            if ties_left:
                bad = bad or any(e.key > v for e in data[:b]) or any(e.key <= v for e in data[b + 1:])
            else:
                bad = bad or any(e.key >= v for e in data[:b]) or any(e.key < v for e in data[b + 1:])
        if bad:
            return [f"partition: ties_left={ties_left} diet={diet} seed={i} keys={keys}"]
    return []


def brute_tie_range(keys, k):
    s = sorted(keys)
    v = s[k]
    return s.index(v), len(s) - 1 - s[::-1].index(v)


def select_suite(fn: Callable, name: str, max_len: int = 6) -> List[str]:
    for keys in exhaustive_keys(max_len):
        for k in range(len(keys)):
            data = make_elements(keys)
            got = fn(SortContext(seed=k), data, k)
            if tuple(got) != brute_tie_range(keys, k) or data[k].key != sorted(keys)[k]:
                return [f"{name}: k={k} keys={list(keys)} got {tuple(got)}"]
    return []


def quickpart_suite(cases: int = 1000, seed: int = 0) -> List[str]:
    rng = random.Random(mix_seed("quickpart", seed))
    for i in range(cases):
        n = rng.randint(1, 60)
        keys = [rng.randint(0, 9) for _ in range(n)]
        l = rng.randrange(n)
        r = rng.randrange(l, n)
        data = make_elements(keys)
        qs.quickpart(SortContext(seed=i), data, l, r)
        if not quickpart_ok(keys, data, l, r):
            return [f"quickpart: seed={i} l={l} r={r} keys={keys}"]
    return []


def quickpart_ok(keys, data, l, r) -> bool:
    s = sorted(keys)
    if sorted(e.key for e in data) != s:
        return False
    if [e.key for e in data[l:r + 1]] != s[l:r + 1]:
        return False
    lo, hi = s[l], s[r]
    return all(e.key <= lo for e in data[:l]) and all(e.key >= hi for e in data[r + 1:])


def suites() -> Dict[str, Callable[[], List[str]]]:
    out: Dict[str, Callable[[], List[str]]] = {}
    for name in algorithm_names():
        out[name] = lambda a=get_algorithm(name): sort_suite(a)
    out["partition"] = partition_suite
    out["zackselect"] = lambda: select_suite(qs.zackselect, "zackselect")
    out["duckselect"] = lambda: select_suite(qs.duckselect, "duckselect")
    out["quickpart"] = quickpart_suite
    return out


def run(filter_name: Optional[str] = None, log=print) -> bool:
    """Run all suites, or only the one named; return True when all pass.

    Parametric names such as ``frogsort2:p=0.3`` are accepted as filters.
    Raises ConfigurationError for an unknown name.
    """
    table = suites()
    if filter_name is None:
        chosen = table
    elif filter_name in table:
        chosen = {filter_name: table[filter_name]}
    else:
        algo = get_algorithm(filter_name)
        chosen = {filter_name: lambda: sort_suite(algo)}
    ok = True
    for name, fn in chosen.items():
        fails = fn()
        log(f"{'PASS' if not fails else 'FAIL'} {name}")
        for f in fails:
            log(f"  {f}")
        ok = ok and not fails
    return ok

