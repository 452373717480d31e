"""Memory and cost KPIs plus ratio-of-medians tables."""

from __future__ import annotations

import statistics
from dataclasses import asdict, dataclass, fields
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .core import AggregationError, ConfigurationError
from .patterns import TOTAL_PATTERNS

# row order of the published ratio tables
TABLE_ROWS = (
    "TOTAL",
    "ascall",
    "descall",
    "ascglobal",
    "descglobal",
    "asclocal",
    "desclocal",
    "tielog2",
    "permut",
)

METRICS = (
    "comparisons",
    "moves",
    "move_distance",
    "peak_buffer",
    "ram_pct",
    "wall_ns",
    "t_footprint",
    "c_footprint",
)


def ram_pct(data_elems: int, buffer_elems: int) -> float:
    """(data + buffer) / data."""
    if data_elems <= 0:
        raise ConfigurationError("ram_pct needs at least one data element")
    if buffer_elems < 0:
        raise ConfigurationError("buffer size must be >= 0")
    return (data_elems + buffer_elems) / data_elems


def footprint(ram: float, cost: float) -> float:
    if cost < 0:
        raise ConfigurationError("cost must be >= 0")
    return ram * cost


@dataclass(frozen=True)
class BenchRecord:
    algo: str
    pattern: str
    n: int
    rep: int
    seed: int
    comparisons: int
    moves: int
    move_distance: int
    peak_buffer: int
    ram_pct: float
    wall_ns: int
    t_footprint: float
    c_footprint: float

    @classmethod
    def build(cls, algo, pattern, n, rep, seed, counters, wall_ns) -> "BenchRecord":
        ram = ram_pct(n, counters.peak_buffer) if n else 1.0
        return cls(
            algo=algo,
            pattern=pattern,
            n=n,
            rep=rep,
            seed=seed,
            comparisons=counters.comparisons,
            moves=counters.moves,
            move_distance=counters.move_distance,
            peak_buffer=counters.peak_buffer,
            ram_pct=ram,
            wall_ns=wall_ns,
            # seconds, so the time footprint reads like the published one
            t_footprint=footprint(ram, wall_ns / 1e9),
            c_footprint=footprint(ram, counters.comparisons + counters.moves),
        )

    def as_dict(self) -> dict:
        return asdict(self)

    @classmethod
    def from_row(cls, row: dict) -> "BenchRecord":
        """Parse a CSV row (all values as strings)."""
        out = {}
        for f in fields(cls):
            if f.name not in row:
                raise AggregationError(f"missing column {f.name!r}")
            v = row[f.name]
            if f.type in ("int", int):
                out[f.name] = int(v)
            elif f.type in ("float", float):
                out[f.name] = float(v)
            else:
                out[f.name] = v
        return cls(**out)


def _metric(rec: BenchRecord, metric: str) -> float:
    if metric not in METRICS:
        raise ConfigurationError(f"unknown metric {metric!r}; choose from {', '.join(METRICS)}")
    return getattr(rec, metric)


def pattern_medians(records: Iterable[BenchRecord], metric: str) -> Dict[Tuple[str, str], float]:
    """Median of ``metric`` over reps for every (algo, pattern)."""
    groups: Dict[Tuple[str, str], List[float]] = {}
    for r in records:
        groups.setdefault((r.algo, r.pattern), []).append(_metric(r, metric))
    return {k: statistics.median(v) for k, v in groups.items()}


def total_kpi(records: Iterable[BenchRecord], metric: str) -> Dict[str, float]:
    """Per algo: mean over the five TOTAL patterns of the per-pattern medians."""
    records = list(records)
    sizes = {r.n for r in records}
    if len(sizes) > 1:
        raise AggregationError(f"records mix sizes {sorted(sizes)}")
    med = pattern_medians(records, metric)
    out = {}
    for algo in sorted({a for a, _ in med}):
        missing = [p for p in TOTAL_PATTERNS if (algo, p) not in med]
        if missing:
            raise AggregationError(f"{algo}: no records for pattern(s) {', '.join(missing)}")
        out[algo] = statistics.fmean(med[(algo, p)] for p in TOTAL_PATTERNS)
    return out


def _grid(records, algo):
    return sorted((r.pattern, r.n, r.seed) for r in records if r.algo == algo)


def _ratio(a, b):
    if b == 0:
        return 1.0 if a == 0 else float("inf")
    return a / b


def ratio_table(
    records: Iterable[BenchRecord],
    num: str,
    den: str,
    metrics: Sequence[str],
) -> List[Tuple[str, Dict[str, Optional[float]]]]:
    """Rows ``(label, {metric: median(num) / median(den)})`` in table order.

    Patterns absent from the records are left out. The TOTAL row is ``None``
    for a metric when the five TOTAL patterns are not all present.
    """
    records = list(records)
    gn, gd = _grid(records, num), _grid(records, den)
    if not gn:
        raise AggregationError(f"no records for {num!r}")
    if not gd:
        raise AggregationError(f"no records for {den!r}")
    if gn != gd:
        raise AggregationError(f"{num} and {den} were not measured on the same grid")
    sel = [r for r in records if r.algo in (num, den)]
    present = {r.pattern for r in sel}
    rows: List[Tuple[str, Dict[str, Optional[float]]]] = []
    cells = {label: {} for label in TABLE_ROWS}
    for m in metrics:
        med = pattern_medians(sel, m)
        try:
            tot = total_kpi(sel, m)
            cells["TOTAL"][m] = _ratio(tot[num], tot[den])
        except AggregationError:
            cells["TOTAL"][m] = None
        for p in TABLE_ROWS[1:]:
            if p in present:
                cells[p][m] = _ratio(med[(num, p)], med[(den, p)])
    for label in TABLE_ROWS:
        if label == "TOTAL" or label in present:
            rows.append((label, cells[label]))
    return rows


def format_markdown(rows, metrics: Sequence[str], title: str = "") -> str:
    lines = []
    if title:
        lines += [title, ""]
    lines.append("| pattern | " + " | ".join(f"r({m})" for m in metrics) + " |")
    lines.append("|---|" + "---:|" * len(metrics))
    for label, cell in rows:
        vals = ["-" if cell.get(m) is None else f"{cell[m]:.2f}" for m in metrics]
        lines.append(f"| {label} | " + " | ".join(vals) + " |")
    return "\n".join(lines) + "\n"
