from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

from normtrace.monset import (
    MonomialSet,
    complement,
    family_box,
    family_degree,
    family_full,
    family_onepoint,
    lower_sets,
    validate_decreasing,
)


@st.composite
def lower_set(draw, max_a=6, max_b=4):
    A = draw(st.integers(0, max_a))
    B = draw(st.integers(0, max_b))
    heights = sorted(draw(st.lists(st.integers(0, B + 1), min_size=A + 1, max_size=A + 1)), reverse=True)
    return MonomialSet(((a, b) for a, h in enumerate(heights) for b in range(h)), A, B)


@given(lower_set())
def test_complement_is_involution_and_decreasing(M):
    Mc = complement(M)
    assert complement(Mc) == M
    assert validate_decreasing(Mc)
    assert len(M) + len(Mc) == (M.bound_a + 1) * (M.bound_b + 1)


@given(lower_set())
def test_maximal_elements_generate(M):
    maxes = M.maximal()
    assert all(m in M for m in maxes)
    assert {(a, b) for a, b in M} == {(i, j) for a, b in maxes for i in range(a + 1) for j in range(b + 1)}


@pytest.mark.parametrize("A,B", [(0, 0), (3, 1), (4, 2), (2, 3)])
def test_lower_set_count(A, B):
    sets = list(lower_sets(A, B))
    assert len(sets) == comb(A + B + 2, A + 1) == len(set(sets))
    assert all(validate_decreasing(M) for M in sets)


def test_not_decreasing():
    M = MonomialSet([(0, 0), (2, 0)], 3, 1)
    assert not validate_decreasing(M)
    assert validate_decreasing(M.add((1, 0)))


def test_outside_footprint_rejected():
    with pytest.raises(ValueError):
        MonomialSet([(4, 0)], 3, 1)


def test_mixed_footprints_rejected():
    with pytest.raises(ValueError):
        MonomialSet([(0, 0)], 3, 1) | MonomialSet([(0, 0)], 2, 1)


def test_iteration_order():
    M = MonomialSet([(1, 0), (0, 1), (0, 0)], 3, 1)
    assert list(M) == [(0, 0), (1, 0), (0, 1)]


def test_families(curve_f9_u4):
    C = curve_f9_u4
    assert len(family_degree(C, 4)) == 12
    assert len(family_degree(C, 0)) == 1
    assert family_box(C, C.a_max + 1, C.b_max + 1) == family_full(C)
    assert len(family_onepoint(C, 23)) == 21
    assert len(family_onepoint(C, 21)) == 19
    for M in (family_degree(C, 5), family_box(C, 3, 2), family_onepoint(C, 30)):
        assert validate_decreasing(M)


def test_fig4_box_is_its_own_complement():
    from normtrace.curve import make_curve
    from normtrace.gf import field_for

    C = make_curve(field_for(2, 4), 5)
    M = family_box(C, 6, 4)
    assert len(M) == 24 and complement(M, C) == M
