"""Deterministic generators for the eight benchmark input patterns."""

from __future__ import annotations

import hashlib
import math
import random
import struct
from dataclasses import dataclass
from typing import Callable, Dict, List

from .core import ConfigurationError, Element

PATTERNS = (
    "permut",
    "tielog2",
    "ascall",
    "asclocal",
    "ascglobal",
    "descall",
    "desclocal",
    "descglobal",
)

# patterns averaged into the TOTAL KPI
TOTAL_PATTERNS = ("permut", "tielog2", "ascall", "asclocal", "ascglobal")


def mix_seed(*parts) -> int:
    """Stable 64-bit seed derived from ``parts`` (BLAKE2b of their repr)."""
    digest = hashlib.blake2b(repr(parts).encode(), digest_size=8).digest()
    return struct.unpack("<Q", digest)[0]


@dataclass(frozen=True)
class PatternSpec:
    name: str
    n: int
    seed: int = 0

    def __post_init__(self):
        if self.name not in PATTERNS:
            raise ConfigurationError(f"unknown pattern {self.name!r}")
        if self.n < 0:
            raise ConfigurationError("n must be >= 0")


def block_len(n: int) -> int:
    return max(1, math.isqrt(n - 1) + 1) if n > 0 else 1


def _blocks(values: List[int], n: int) -> List[List[int]]:
    k = block_len(n)
    return [values[i:i + k] for i in range(0, n, k)]


def _permut(n, rng):
    keys = list(range(1, n + 1))
    rng.shuffle(keys)
    return keys


def _tielog2(n, rng):
    distinct = math.ceil(math.log2(max(n, 2)))
    return [rng.randint(1, distinct) for _ in range(n)]


def _local(n, rng, descending):
    keys = _permut(n, rng)
    out = []
    for block in _blocks(keys, n):
        out.extend(sorted(block, reverse=descending))
    return out


def _global(n, rng, descending):
    blocks = _blocks(list(range(1, n + 1)), n)
    if descending:
        blocks.reverse()
    out = []
    for block in blocks:
        rng.shuffle(block)
        out.extend(block)
    return out


_GENERATORS: Dict[str, Callable[[int, random.Random], List[int]]] = {
    "permut": _permut,
    "tielog2": _tielog2,
    "ascall": lambda n, rng: list(range(1, n + 1)),
    "descall": lambda n, rng: list(range(n, 0, -1)),
    "asclocal": lambda n, rng: _local(n, rng, False),
    "desclocal": lambda n, rng: _local(n, rng, True),
    "ascglobal": lambda n, rng: _global(n, rng, False),
    "descglobal": lambda n, rng: _global(n, rng, True),
}


def generate_keys(spec: PatternSpec) -> List[int]:
    rng = random.Random(mix_seed(spec.name, spec.n, spec.seed))
    return _GENERATORS[spec.name](spec.n, rng)


def generate(spec: PatternSpec) -> List[Element]:
    return [Element(k, i) for i, k in enumerate(generate_keys(spec))]
