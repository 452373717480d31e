"""Stable buffer-merging sorts."""

from .frog import (
    SQUID2_DEFAULT_P,
    check_p,
    frog2_bufsize,
    frogsort0,
    frogsort1,
    frogsort2,
    geckosort,
    squidsort,
    squidsort1,
    squidsort2,
)
from .knuth import bimesort, knuthsort, merge_knuth, octosort, omitsort

__all__ = [
    "SQUID2_DEFAULT_P",
    "bimesort",
    "check_p",
    "frog2_bufsize",
    "frogsort0",
    "frogsort1",
    "frogsort2",
    "geckosort",
    "knuthsort",
    "merge_knuth",
    "octosort",
    "omitsort",
    "squidsort",
    "squidsort1",
    "squidsort2",
]
