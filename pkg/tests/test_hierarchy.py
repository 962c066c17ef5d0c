import pytest
from hypothesis import given, settings, strategies as st

import oracles
from uniport.access import build_gamma
from uniport.compat import DeltaFamily, is_compatible
from uniport.core import UniportError, elements
from uniport.enumeration import GRID_COLUMNS_M4, enumerate_deltas, table_rows
from uniport.hierarchy import (
    C,
    LAMBDA,
    LAMBDA_STAR,
    OTHER,
    T,
    OrderType,
    check_preorder,
    classify,
    compute_relation,
    generic_code,
    hierarchy,
    max_chain_length,
    table_code,
)
from uniport.polymatroid import UniformPolymatroid


def labels(d):
    return [frozenset(i + 1 for i in elements(s)) for s in d.min_sets]


def rel(m, pairs):
    r = [[x == y for x in range(m)] for y in range(m)]
    for y, x in pairs:
        r[y][x] = True
    return tuple(tuple(row) for row in r)


def test_classify_basic_types():
    assert classify(rel(3, [(a, b) for a in range(3) for b in range(3)])).kind == T
    assert classify(rel(3, [])).kind == C
    o = classify(rel(4, [(1, 0), (2, 0), (3, 0)]))
    assert (o.kind, o.X, o.Y) == (LAMBDA, 0b0001, 0b1110)
    o = classify(rel(4, [(1, 0), (2, 0), (3, 0), (1, 2), (2, 1), (1, 3), (3, 1), (2, 3), (3, 2)]))
    assert (o.kind, o.X, o.Y) == (LAMBDA_STAR, 0b0001, 0b1110)


def test_classify_other():
    # strict pairs do not form a full product
    assert classify(rel(4, [(1, 0), (3, 2)])).kind == OTHER


def test_preorder_check():
    with pytest.raises(UniportError):
        check_preorder(((True, True, False), (False, True, True), (False, False, True)))
    with pytest.raises(UniportError):
        check_preorder(((False,),))


def test_chain_length():
    assert max_chain_length(rel(3, [])) == 1
    assert max_chain_length(rel(3, [(1, 0), (2, 0)])) == 2
    assert max_chain_length(rel(3, [(2, 1), (1, 0), (2, 0)])) == 3


def test_codes():
    assert table_code(OrderType(LAMBDA, 0b0001, 0b1110)) == "M"
    assert table_code(OrderType(LAMBDA_STAR, 0b0011, 0b1100)) == "V"
    assert table_code(OrderType(OTHER)) == "?"
    assert generic_code(OrderType(LAMBDA, 0b001, 0b110)) == "L[1/23]"
    with pytest.raises(UniportError):
        table_code(OrderType(C), m=3)


def test_singleton_example_report():
    z = UniformPolymatroid.from_increments((3, 2, 1, 1))
    report = hierarchy(build_gamma(z, DeltaFamily.parse("{1}", 4)))
    assert report.code == "M"
    js = report.as_json()
    assert js["X"] == [1] and js["Y"] == [2, 3, 4] and js["maxChain"] == 2


def test_relation_matches_definition_on_table():
    """The swap test on minimal vectors agrees with the definition over
    every authorized vector of the box."""
    for g in GRID_COLUMNS_M4:
        z = UniformPolymatroid.from_increments(g)
        for d in table_rows(4):
            if is_compatible(z, d):
                got = compute_relation(build_gamma(z, d))
                assert got == oracles.relation(z.g, 4, labels(d)), (g, str(d))


@pytest.mark.parametrize("m", [2, 3])
def test_relation_matches_definition_small(m):
    for c in enumerate_deltas(m):
        for g in [(1,) + (0,) * (m - 1), (2, 1) + (0,) * (m - 2), (1,) * m, (3, 2) + (1,) * (m - 2)]:
            z = UniformPolymatroid.from_increments(g)
            if is_compatible(z, c.representative):
                got = compute_relation(build_gamma(z, c.representative))
                assert got == oracles.relation(z.g, m, labels(c.representative))


@settings(max_examples=50, deadline=None)
@given(st.sampled_from(GRID_COLUMNS_M4), st.sampled_from(table_rows(4)), st.permutations(range(4)))
def test_relabelling_permutes_relation(g, d, perm):
    z = UniformPolymatroid.from_increments(g)
    if not is_compatible(z, d):
        return
    moved = DeltaFamily.from_sets(4, [sum(1 << perm[i] for i in elements(s)) for s in d.min_sets])
    r0 = compute_relation(build_gamma(z, d))
    r1 = compute_relation(build_gamma(z, moved))
    for y in range(4):
        for x in range(4):
            assert r0[y][x] == r1[perm[y]][perm[x]]
