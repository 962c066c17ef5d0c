import json

import pytest

import oracles
from uniport.compat import DeltaFamily
from uniport.core import format_family
from uniport.enumeration import (
    GRID_COLUMNS_M4,
    add_one,
    apply_transform,
    build_table,
    canonical,
    conjecture_scan,
    enumerate_deltas,
    enumerate_signatures,
    minimal_representative,
    scale_two,
)
from uniport.core import UniportError


@pytest.mark.parametrize("m,count", [(2, 3), (3, 8), (4, 28)])
def test_orbit_counts(m, count):
    assert len(enumerate_deltas(m)) == count
    assert oracles.antichain_orbits(m) == count


def test_orbit_count_five_blocks():
    # inequivalent monotone Boolean functions of 5 variables, minus the two constants
    assert len(enumerate_deltas(5)) == 208


@pytest.mark.parametrize("m,total", [(2, 4), (3, 18), (4, 166)])
def test_orbit_sizes_sum_to_antichain_count(m, total):
    # Dedekind number minus the two constant functions
    assert sum(c.orbit_size for c in enumerate_deltas(m)) == total


def test_canonical_is_relabelling_invariant():
    a = DeltaFamily.parse("{1,2};{3}", 3)
    b = DeltaFamily.parse("{2,3};{1}", 3)
    assert canonical(a) == canonical(b)


def test_enumeration_bounds():
    with pytest.raises(UniportError):
        enumerate_deltas(6)


def test_signatures():
    sigs = enumerate_signatures(4)
    assert len(sigs) == 15
    assert sorted(s.representative for s in sigs) == sorted(GRID_COLUMNS_M4)
    assert [s.representative for s in sigs] == list(GRID_COLUMNS_M4)
    assert len(enumerate_signatures(3)) == 7
    assert minimal_representative((1, 0, 1, 1)) == (3, 2, 2, 1)


def test_table_matches_golden_fixture():
    columns, rows = oracles.golden_table()
    table = build_table(4)
    assert list(table.columns) == columns
    assert [format_family(r.min_sets) for r in table.rows] == [r[0] for r in rows]
    mismatches = [
        (i + 1, j + 1, want, got)
        for i, (row, cells) in enumerate(zip(rows, table.cells))
        for j, (want, got) in enumerate(zip(row[1], cells))
        if want != got
    ]
    assert mismatches == []


def test_table_three_blocks_runs():
    table = build_table(3)
    assert len(table.rows) == 8 and len(table.columns) == 7
    assert "?" not in {c for row in table.cells for c in row}


def test_transforms_keep_sign_pattern():
    assert add_one((2, 1, 1, 0)) == (3, 2, 2, 0)
    assert scale_two((2, 1, 1, 0)) == (4, 2, 2, 0)
    with pytest.raises(UniportError):
        apply_transform("bad", lambda g: (1,) * len(g), (2, 1, 0))


def test_conjecture_scan_three_blocks_is_serialisable():
    report = conjecture_scan(3)
    assert report["compared"] > 0
    json.dumps(report)
