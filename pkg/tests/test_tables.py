import math

import pytest

from conftest import assert_close
from whittaker import tables
from whittaker.errors import DomainError
from whittaker.verify import reproduce_table, table_tolerance

ROW_IDS = [f"{r.table}:{r.citation}" for r in tables.ROWS]


def test_every_table_has_rows():
    for tid in tables.TABLE_IDS:
        assert tables.table_rows(tid)


def test_skipped_rows_are_marked():
    skipped = [(r.table, float(r.kappa), float(r.mu)) for r in tables.ROWS if r.closed is None]
    assert sorted(skipped) == [("T2", 0.0, 1.0), ("T2", 0.0, 2.0), ("T3B", 0.0, 1.0)]
    res = reproduce_table("T2", [1.0])
    marked = [r for r in res if r.status == "skipped"]
    assert len(marked) == 2 and all("Meijer" in r.reason for r in marked)


@pytest.mark.parametrize("row", tables.ROWS, ids=ROW_IDS)
def test_row_closed_vs_independent(row):
    if row.closed is None:
        pytest.skip(row.skip_reason)
    for x in (0.5, 1.0, 2.0):
        r = tables.evaluate_row(row, x)
        assert r.rel_diff <= table_tolerance(row.table), (r.closed_value, r.independent_value)


def test_examples():
    (t5,) = [r for r in reproduce_table("T5", [1.0]) if (r.kappa, r.mu) == (0.25, -0.25)]
    assert_close(t5.closed_value, math.exp(-0.5), 1e-15)
    assert abs(t5.closed_value - t5.independent_value) < 1e-14
    (t1,) = [r for r in reproduce_table("T1", [1.0]) if (r.kappa, r.mu) == (-0.5, 0.0)]
    assert_close(t1.closed_value, t1.independent_value, 1e-9)
    (t3b,) = [r for r in reproduce_table("T3B", [1.0]) if (r.kappa, r.mu) == (0.0, 0.0)]
    assert t3b.independent_route == "J1:quad"
    assert_close(t3b.closed_value, t3b.independent_value, 1e-8)


def test_large_x_rows():
    for tid in tables.TABLE_IDS:
        for r in reproduce_table(tid, [10.0, 30.0]):
            if r.status != "skipped":
                assert r.rel_diff <= 1e-8, (tid, r.kappa, r.mu, r.x, r.rel_diff)


def test_domain():
    with pytest.raises(DomainError):
        reproduce_table("T5", [0.0])
    with pytest.raises(DomainError):
        reproduce_table("T5", [51.0])
    with pytest.raises(DomainError):
        reproduce_table("T9", [1.0])


def test_reproducible():
    a = reproduce_table("T3A", [0.5, 1.0])
    b = reproduce_table("T3A", [0.5, 1.0])
    assert [(r.closed_value, r.independent_value) for r in a] == [(r.closed_value, r.independent_value) for r in b]
