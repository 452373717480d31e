import random

import pytest

from symsort.core import AggregationError, ConfigurationError, Counters
from symsort.metrics import BenchRecord, TABLE_ROWS, footprint, format_markdown, ram_pct, ratio_table, total_kpi
from symsort.patterns import PATTERNS, TOTAL_PATTERNS


def rec(algo, pattern, value, rep=0, n=100, seed=None, peak=0):
    c = Counters(comparisons=value, moves=0, move_distance=0, peak_buffer=peak)
    return BenchRecord.build(algo, pattern, n, rep, rep if seed is None else seed, c, wall_ns=1000)


def test_ram_pct():
    assert ram_pct(1000, 1000) == 2.0
    assert ram_pct(1000, 500) == 1.5
    assert ram_pct(1000, 0) == 1.0
    with pytest.raises(ConfigurationError):
        ram_pct(0, 5)


def test_footprint():
    assert footprint(1.5, 10.0) == 15.0
    assert footprint(2.0, 1e6) == 2e6
    assert footprint(1.0, 7) == 7
    with pytest.raises(ConfigurationError):
        footprint(1.0, -1)


def test_record_derived_fields():
    c = Counters(comparisons=10, moves=5, move_distance=3, peak_buffer=50)
    r = BenchRecord.build("x", "permut", 100, 0, 1, c, wall_ns=2_000_000_000)
    assert r.ram_pct == 1.5
    assert r.c_footprint == 1.5 * 15
    assert r.t_footprint == pytest.approx(3.0)


def test_record_row_roundtrip():
    r = rec("a", "permut", 7)
    row = {k: str(v) for k, v in r.as_dict().items()}
    assert BenchRecord.from_row(row) == r
    del row["moves"]
    with pytest.raises(AggregationError):
        BenchRecord.from_row(row)


def test_total_kpi_examples():
    recs = [rec("a", p, 10) for p in TOTAL_PATTERNS]
    assert total_kpi(recs, "comparisons") == {"a": 10}
    recs = [rec("a", p, v) for p, v in zip(TOTAL_PATTERNS, (0, 10, 20, 10, 10))]
    assert total_kpi(recs, "comparisons") == {"a": 10}


def test_total_kpi_uses_medians_and_ignores_desc():
    recs = [rec("a", p, v, rep) for p in TOTAL_PATTERNS for rep, v in enumerate((1, 5, 1000))]
    recs.append(rec("a", "descall", 10 ** 9))
    assert total_kpi(recs, "comparisons") == {"a": 5}


def test_total_kpi_missing_pattern():
    recs = [rec("a", p, 10) for p in TOTAL_PATTERNS if p != "tielog2"]
    with pytest.raises(AggregationError, match="tielog2"):
        total_kpi(recs, "comparisons")


def test_total_kpi_invariants():
    rng = random.Random(3)
    recs = [rec("a", p, rng.randint(1, 100), rep) for p in TOTAL_PATTERNS for rep in range(5)]
    base = total_kpi(recs, "comparisons")["a"]
    shuffled = recs[:]
    rng.shuffle(shuffled)
    assert total_kpi(shuffled, "comparisons")["a"] == base
    scaled = [rec("a", r.pattern, r.comparisons * 3, r.rep) for r in recs]
    assert total_kpi(scaled, "comparisons")["a"] == pytest.approx(3 * base)


def test_unknown_metric():
    with pytest.raises(ConfigurationError):
        total_kpi([rec("a", p, 1) for p in TOTAL_PATTERNS], "energy")


def full_grid(algo, value, peak=0):
    return [rec(algo, p, value, rep, peak=peak) for p in PATTERNS for rep in range(3)]


def test_ratio_table_identity_and_order():
    recs = full_grid("a", 10) + full_grid("b", 20)
    rows = ratio_table(recs, "a", "a", ["comparisons", "ram_pct"])
    assert [label for label, _ in rows] == list(TABLE_ROWS)
    assert all(v == 1.0 for _, cell in rows for v in cell.values())
    rows = ratio_table(recs, "a", "b", ["comparisons"])
    assert all(cell["comparisons"] == 0.5 for _, cell in rows)


def test_ratio_table_ram_column():
    recs = full_grid("squid", 1, peak=14) + full_grid("knuth", 1, peak=100)
    rows = ratio_table(recs, "squid", "knuth", ["ram_pct"])
    assert all(cell["ram_pct"] == pytest.approx(0.57) for _, cell in rows)


def test_ratio_table_grid_mismatch():
    recs = full_grid("a", 1) + [rec("b", "permut", 1)]
    with pytest.raises(AggregationError):
        ratio_table(recs, "a", "b", ["comparisons"])
    with pytest.raises(AggregationError):
        ratio_table(recs, "a", "zzz", ["comparisons"])


def test_ratio_table_partial_patterns():
    recs = [rec(a, "permut", 4) for a in "ab"]
    rows = ratio_table(recs, "a", "b", ["comparisons"])
    assert rows == [("TOTAL", {"comparisons": None}), ("permut", {"comparisons": 1.0})]
    text = format_markdown(rows, ["comparisons"])
    assert "| TOTAL | - |" in text and "| permut | 1.00 |" in text
