"""Name lookup for every sorting algorithm in the package."""

from __future__ import annotations

import functools
import re
from dataclasses import dataclass
from typing import Callable, List

from . import mergesorts as ms
from . import quicksorts as qs
from .core import ConfigurationError

SortFn = Callable  # (ctx, data) -> None


@dataclass(frozen=True)
class Algorithm:
    name: str
    fn: SortFn
    stable: bool
    family: str  # "quick" or "merge"


_FIXED = {
    "quicksort2": (qs.quicksort2, False, "quick"),
    "quicksort3": (qs.quicksort3, False, "quick"),
    "zocksort": (qs.zocksort, False, "quick"),
    "zacksort": (qs.zacksort, False, "quick"),
    "zucksort": (qs.zucksort, False, "quick"),
    "ducksort": (qs.ducksort, False, "quick"),
    "kiwisort": (qs.kiwisort, True, "quick"),
    "knuthsort": (ms.knuthsort, True, "merge"),
    "bimesort": (ms.bimesort, True, "merge"),
    "omitsort": (ms.omitsort, True, "merge"),
    "octosort": (ms.octosort, True, "merge"),
    "frogsort0": (ms.frogsort0, True, "merge"),
    "frogsort1": (ms.frogsort1, True, "merge"),
    "geckosort": (ms.geckosort, True, "merge"),
    "squidsort1": (ms.squidsort1, True, "merge"),
}

_PARAM = {
    "frogsort2": ms.frogsort2,
    "squidsort2": ms.squidsort2,
}

_PARAM_RE = re.compile(r"^(frogsort2|squidsort2)(?::p=([0-9]*\.?[0-9]+(?:[eE][-+]?[0-9]+)?))?$")


def algorithm_names() -> List[str]:
    """Canonical names; the two parametric ones are listed with their default p."""
    return list(_FIXED) + [f"{k}:p={ms.SQUID2_DEFAULT_P}" for k in _PARAM]


def get_algorithm(name: str) -> Algorithm:
    if name in _FIXED:
        fn, stable, family = _FIXED[name]
        return Algorithm(name, fn, stable, family)
    m = _PARAM_RE.match(name)
    if not m:
        raise ConfigurationError(
            f"unknown algorithm {name!r}; known: {', '.join(algorithm_names())}"
        )
    base, p = m.group(1), m.group(2)
    p = ms.check_p(float(p) if p is not None else ms.SQUID2_DEFAULT_P)
    return Algorithm(name, functools.partial(_PARAM[base], p=p), True, "merge")


def parse_algorithms(spec: str) -> List[Algorithm]:
    """Parse a comma separated list of names."""
    names = [s.strip() for s in spec.split(",") if s.strip()]
    if not names:
        raise ConfigurationError("no algorithm given")
    return [get_algorithm(n) for n in names]
