import pytest
from hypothesis import given, strategies as st

from uniport.core import (
    UniportError,
    elements,
    format_family,
    format_subset,
    format_vector,
    is_subset,
    leq,
    mask_of,
    minimal_elements,
    parse_family,
    parse_subset,
    parse_vector,
    popcount,
    sort_vectors,
    submasks,
    unit_vector,
)


def test_parse_subset_one_based():
    assert parse_subset("{1,3}") == 0b101
    assert parse_subset("{ }") == 0
    assert format_subset(0b1010) == "{2,4}"


@pytest.mark.parametrize("bad", ["1,2", "{a}", "{0}", "{1,,2}"])
def test_parse_subset_rejects(bad):
    with pytest.raises(UniportError):
        parse_subset(bad)


def test_parse_subset_range_check():
    with pytest.raises(UniportError):
        parse_subset("{5}", 4)


def test_family_and_vector_roundtrip():
    assert format_family(parse_family("{1};{2,3}")) == "{1};{2,3}"
    assert parse_vector("(1,0,2)") == (1, 0, 2)
    assert format_vector((1, 0, 2)) == "(1,0,2)"
    with pytest.raises(UniportError):
        parse_vector("(1,-1)")


def test_unit_vector():
    assert unit_vector(3, 2) == (0, 1, 0)
    with pytest.raises(UniportError):
        unit_vector(3, 4)


def test_submasks_ascending_and_complete():
    subs = list(submasks(0b1011))
    assert subs == sorted(subs)
    assert len(subs) == 8
    assert all(is_subset(s, 0b1011) for s in subs)


def test_sort_is_descending_lex():
    assert sort_vectors([(0, 1, 1), (1, 1, 0), (1, 0, 1)]) == [(1, 1, 0), (1, 0, 1), (0, 1, 1)]


@given(st.integers(0, 2**8 - 1))
def test_mask_elements_roundtrip(mask):
    assert mask_of(elements(mask)) == mask
    assert popcount(mask) == len(elements(mask))
    assert parse_subset(format_subset(mask)) == mask


vectors = st.lists(st.tuples(*[st.integers(0, 3)] * 3), max_size=20)


@given(vectors)
def test_minimal_elements_is_antichain_below_everything(vs):
    mins = minimal_elements(vs)
    assert len(set(mins)) == len(mins)
    for a in mins:
        assert not any(b != a and leq(b, a) for b in mins)
    for v in vs:
        assert any(leq(u, v) for u in mins)
