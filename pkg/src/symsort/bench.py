"""Benchmark grid runner and its CSV/markdown writers."""

from __future__ import annotations

import csv
import io
import os
import time
from dataclasses import dataclass, field, fields
from typing import List, Sequence

from .core import ConfigurationError, SortContext
from .metrics import BenchRecord
from .patterns import PATTERNS, PatternSpec, generate, mix_seed
from .registry import get_algorithm

CSV_HEADER = [f.name for f in fields(BenchRecord)]


@dataclass
class RunConfig:
    algos: Sequence[str]
    patterns: Sequence[str]
    sizes: Sequence[int]
    reps: int = 25
    seed: int = 0
    out_path: str = "bench.csv"
    format: str = "csv"
    algos_resolved: list = field(default_factory=list, repr=False)

    def validate(self) -> None:
        if not self.algos:
            raise ConfigurationError("no algorithms given")
        self.algos_resolved = [get_algorithm(a) for a in self.algos]
        if not self.patterns:
            raise ConfigurationError("no patterns given")
        for p in self.patterns:
            if p not in PATTERNS:
                raise ConfigurationError(f"unknown pattern {p!r}; known: {', '.join(PATTERNS)}")
        if not self.sizes or any(n < 1 for n in self.sizes):
            raise ConfigurationError("sizes must be >= 1")
        if self.reps < 1:
            raise ConfigurationError("reps must be >= 1")
        if self.format not in ("csv", "markdown"):
            raise ConfigurationError(f"unknown format {self.format!r}")


def run_grid(config: RunConfig) -> List[BenchRecord]:
    """Measure every (algo, pattern, n, rep) cell, algo-major."""
    config.validate()
    out = []
    for algo in config.algos_resolved:
        for pattern in config.patterns:
            for n in config.sizes:
                for rep in range(config.reps):
                    seed = mix_seed(config.seed, pattern, n, rep)
                    data = generate(PatternSpec(pattern, n, seed))
                    ctx = SortContext(seed=seed)
                    t0 = time.perf_counter_ns()
                    algo.fn(ctx, data)
                    wall = time.perf_counter_ns() - t0
                    out.append(BenchRecord.build(algo.name, pattern, n, rep, seed, ctx.counters, wall))
    return out


def _cell(v):
    return repr(v) if isinstance(v, float) else str(v)


def to_csv(records: Sequence[BenchRecord]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_HEADER)
    for r in records:
        w.writerow([_cell(getattr(r, k)) for k in CSV_HEADER])
    return buf.getvalue()


def to_markdown(records: Sequence[BenchRecord]) -> str:
    lines = ["| " + " | ".join(CSV_HEADER) + " |", "|" + "---|" * len(CSV_HEADER)]
    for r in records:
        lines.append("| " + " | ".join(_cell(getattr(r, k)) for k in CSV_HEADER) + " |")
    return "\n".join(lines) + "\n"


def read_csv(path) -> List[BenchRecord]:
    with open(path, newline="") as fh:
        return [BenchRecord.from_row(row) for row in csv.DictReader(fh)]


def write_records(records: Sequence[BenchRecord], path, fmt: str = "csv") -> None:
    text = to_csv(records) if fmt == "csv" else to_markdown(records)
    # write to a sibling temp file first so a failed run leaves no partial output
    tmp = f"{path}.tmp{os.getpid()}"
    with open(tmp, "w", newline="") as fh:
        fh.write(text)
    os.replace(tmp, path)


def cmd_run(config: RunConfig) -> List[BenchRecord]:
    config.validate()
    records = run_grid(config)
    write_records(records, config.out_path, config.format)
    return records
