"""Element model, sorting targets, instrumentation and the trusted oracle.

Every algorithm in this package works on a list of :class:`Element` and
reports its work into the :class:`Counters` of an explicit
:class:`SortContext`. Nothing here keeps global mutable state, so separate
contexts can be used from separate threads.
"""

from __future__ import annotations

import enum
import math
import random
from dataclasses import dataclass, field
from typing import Iterable, List, NamedTuple, Optional, Sequence


class SymsortError(Exception):
    """Base class for errors raised by this package."""


class ConfigurationError(SymsortError, ValueError):
    """Unknown algorithm/pattern name or an invalid parameter."""


class CapacityError(SymsortError):
    """The context's buffer is smaller than the algorithm needs."""


class AggregationError(SymsortError, ValueError):
    """Benchmark records do not cover what an aggregation requires."""


class Element(NamedTuple):
    key: float
    tag: int


class Ordering(enum.IntEnum):
    LESS = -1
    EQUAL = 0
    GREATER = 1


class Direction(enum.Enum):
    ASCENDING = "asc"
    DESCENDING = "desc"


class TieOrientation(enum.Enum):
    LEFT_TO_RIGHT = "left"
    RIGHT_TO_LEFT = "right"


class TargetOrder(enum.Enum):
    """The four stable sorting targets.

    ``AscRight`` is ``AscLeft`` read from the right end of memory, so in
    left-to-right terms its keys descend and its ties are reversed.
    ``DescLeft`` descends from the left but keeps ties in input order.
    """

    ASC_LEFT = (Direction.ASCENDING, TieOrientation.LEFT_TO_RIGHT)
    ASC_RIGHT = (Direction.ASCENDING, TieOrientation.RIGHT_TO_LEFT)
    DESC_LEFT = (Direction.DESCENDING, TieOrientation.LEFT_TO_RIGHT)
    DESC_RIGHT = (Direction.DESCENDING, TieOrientation.RIGHT_TO_LEFT)

    @property
    def direction(self) -> Direction:
        return self.value[0]

    @property
    def tie_orientation(self) -> TieOrientation:
        return self.value[1]


AscLeft = TargetOrder.ASC_LEFT
AscRight = TargetOrder.ASC_RIGHT
DescLeft = TargetOrder.DESC_LEFT
DescRight = TargetOrder.DESC_RIGHT


@dataclass(slots=True)
class Counters:
    comparisons: int = 0
    moves: int = 0
    move_distance: int = 0
    peak_buffer: int = 0
    # partitioning passes; diagnostic only, not part of the benchmark schema
    partitions: int = 0

    def as_dict(self) -> dict:
        return {
            "comparisons": self.comparisons,
            "moves": self.moves,
            "move_distance": self.move_distance,
            "peak_buffer": self.peak_buffer,
        }


@dataclass
class SortContext:
    """Per-run state: counters, a seeded generator and the buffer limit.

    ``buffer_capacity`` is the number of auxiliary element cells the run may
    use. ``None`` means the algorithm allocates what it declares.
    """

    seed: int = 0
    buffer_capacity: Optional[int] = None
    counters: Counters = field(default_factory=Counters)
    rng: random.Random = field(init=False, repr=False)

    def __post_init__(self) -> None:
        self.rng = random.Random(self.seed)

    def reserve_buffer(self, cells: int) -> None:
        """Claim ``cells`` auxiliary cells for this run or raise CapacityError."""
        if self.buffer_capacity is not None and cells > self.buffer_capacity:
            raise CapacityError(
                f"need {cells} buffer cells, context provides {self.buffer_capacity}"
            )
        if cells > self.counters.peak_buffer:
            self.counters.peak_buffer = cells


def compare_elements(ctx: SortContext, a: Element, b: Element) -> Ordering:
    ctx.counters.comparisons += 1
    if a.key < b.key:
        return Ordering.LESS
    if b.key < a.key:
        return Ordering.GREATER
    return Ordering.EQUAL


def move_element(ctx: SortContext, cells: list, src: int, dst: int) -> None:
    """Copy ``cells[src]`` to ``cells[dst]`` and account one move."""
    c = ctx.counters
    c.moves += 1
    c.move_distance += abs(src - dst)
    cells[dst] = cells[src]


def swap_elements(ctx: SortContext, cells: list, i: int, j: int) -> None:
    # two moves through an uncounted temporary
    c = ctx.counters
    c.moves += 2
    c.move_distance += 2 * abs(i - j)
    cells[i], cells[j] = cells[j], cells[i]


def check_key(key) -> float:
    if isinstance(key, bool) or not isinstance(key, (int, float)):
        raise ConfigurationError(f"keys must be int or float, got {type(key).__name__}")
    if isinstance(key, float) and math.isnan(key):
        raise ConfigurationError("NaN keys have no total order")
    return key


def make_elements(keys: Iterable) -> List[Element]:
    """Tag ``keys`` with their input positions."""
    return [Element(check_key(k), i) for i, k in enumerate(keys)]


def reference_sort(elements: Sequence[Element], target: TargetOrder = AscLeft) -> List[Element]:
    """Return ``elements`` arranged per ``target``; the trusted oracle."""
    # sorted() is guaranteed stable, also with reverse=True
    descending = target.direction is Direction.DESCENDING
    out = sorted(elements, key=lambda e: e.key, reverse=descending)
    if target.tie_orientation is TieOrientation.RIGHT_TO_LEFT:
        out.reverse()
    return out


def verify_target(
    original: Sequence[Element],
    output: Sequence[Element],
    target: TargetOrder = AscLeft,
    strict: bool = True,
) -> bool:
    """Check ``output`` against the oracle.

    Strict mode demands element-for-element equality (keys and tags). Relaxed
    mode, meant for unstable sorts, only checks the key sequence and that the
    (key, tag) pairs are a permutation of the input's.
    """
    if len(original) != len(output):
        return False
    expected = reference_sort(original, target)
    if strict:
        return list(output) == expected
    if [e.key for e in output] != [e.key for e in expected]:
        return False
    return sorted(output) == sorted(original)
