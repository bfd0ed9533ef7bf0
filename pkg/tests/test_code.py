import pytest
from hypothesis import given
from hypothesis import strategies as st

from normtrace import catalog, ffla
from normtrace.code import (
    BudgetExceeded,
    NoSquareRootError,
    build_code,
    classify_duality,
    codeword_weight,
    distance_bruteforce,
    distance_formula,
    dual_code,
    hull,
    singleton_gap,
    sqrt_in_field,
    witness_min_weight,
)
from normtrace.curve import make_curve
from normtrace.gf import field_for
from normtrace.monset import MonomialSet, complement, family_degree, family_full, lower_sets


def _code(ex):
    C = ex.spec.curve()
    return C, ex.spec.monomials(C)


def test_staircase_f9_parameters():
    C, M = _code(catalog.STAIRCASE_F9)
    code = build_code(C, M)
    assert (code.n, ffla.rank(C.field, code.G), distance_formula(C, M)) == (27, 10, 15)
    assert singleton_gap(C, M) == 3
    assert codeword_weight(C, witness_min_weight(C, M)) == 15


def test_staircase_f16_parameters():
    C, M = _code(catalog.STAIRCASE_F16)
    assert distance_formula(C, M) == 12
    assert codeword_weight(C, witness_min_weight(C, M)) == 12


def test_degree_zero_is_repetition(curve_f9_u4):
    M = family_degree(curve_f9_u4, 0)
    assert distance_formula(curve_f9_u4, M) == curve_f9_u4.n


@pytest.mark.parametrize("ex", catalog.LENGTH15_ROWS[:5], ids=lambda e: e.name)
def test_table_rows_brute(ex):
    C, M = _code(ex)
    assert distance_bruteforce(build_code(C, M)) == ex.d == distance_formula(C, M)


@given(st.data())
def test_formula_matches_brute_on_random_lower_sets(data):
    q, r, u = data.draw(st.sampled_from([(2, 2, 3), (2, 2, 1), (3, 2, 1), (2, 3, 7), (3, 2, 2)]))
    C = make_curve(field_for(q, r), u)
    sets = [M for M in lower_sets(C.a_max, C.b_max) if 0 < len(M) and C.field.order ** len(M) <= 10**5]
    M = data.draw(st.sampled_from(sets))
    assert distance_bruteforce(build_code(C, M)) == distance_formula(C, M)
    assert codeword_weight(C, witness_min_weight(C, M)) == distance_formula(C, M)


def test_witness_lies_in_span(curve_f9_u4):
    M = family_degree(curve_f9_u4, 4)
    f = witness_min_weight(curve_f9_u4, M)
    from normtrace.curve import normal_form

    assert set(normal_form(curve_f9_u4, f).terms) <= set(M)


def test_budget():
    C, M = _code(catalog.DEGREE4_F9)
    with pytest.raises(BudgetExceeded):
        distance_bruteforce(build_code(C, M), budget=10**6)


def test_not_decreasing_rejected(curve_f9_u4):
    with pytest.raises(ValueError):
        build_code(curve_f9_u4, MonomialSet.on(curve_f9_u4, [(1, 0)]))


def test_empty_set_distance_undefined(curve_f9_u4):
    empty = MonomialSet.on(curve_f9_u4, [])
    with pytest.raises(ValueError):
        distance_formula(curve_f9_u4, empty)
    with pytest.raises(ValueError):
        distance_bruteforce(build_code(curve_f9_u4, empty))


@given(st.data())
def test_dual_is_scaled_complement(data):
    q, r, u = data.draw(st.sampled_from([(2, 2, 3), (3, 2, 2), (3, 2, 4), (2, 4, 3), (2, 3, 7)]))
    C = make_curve(field_for(q, r), u)
    M = data.draw(st.sampled_from(list(lower_sets(C.a_max, C.b_max))))
    code = build_code(C, M)
    sv, other = dual_code(code)
    assert other.monomials == complement(M, C)
    K = ffla.kernel_basis(C.field, code.G)
    assert ffla.row_space_equal(C.field, K, ffla.scale_cols(C.field, other.G, sv.beta))


def test_full_footprint_dual_is_zero(curve_f9_u4):
    _, other = dual_code(build_code(curve_f9_u4, family_full(curve_f9_u4)))
    assert other.k == 0


def test_degree4_is_self_orthogonal():
    C, M = _code(catalog.DEGREE4_F9)
    code = build_code(C, M)
    _, h = hull(code)
    rep = classify_duality(code)
    assert len(complement(M, C)) == 15
    assert h.k == 12 and rep.kind == "self-orthogonal" and rep.confirmed


def test_box_is_self_dual():
    C, M = _code(catalog.BOX_F16)
    rep = classify_duality(build_code(C, M))
    assert rep.kind == "self-dual" and rep.hull_dim == 24 and rep.confirmed


def test_lcd_classification(curve_f9_u4):
    rep = classify_duality(build_code(curve_f9_u4, family_full(curve_f9_u4)))
    assert rep.kind == "LCD-after-scaling" and rep.hull_dim == 0 and rep.confirmed


@given(st.data())
def test_hull_dimension_matches_intersection(data):
    q, r, u = data.draw(st.sampled_from([(2, 2, 3), (3, 2, 4), (2, 4, 5), (2, 4, 1)]))
    C = make_curve(field_for(q, r), u)
    M = data.draw(st.sampled_from(list(lower_sets(C.a_max, C.b_max))))
    _, inner = hull(build_code(C, M))
    assert inner.monomials == M & complement(M, C)


def test_sqrt_in_field():
    assert sqrt_in_field(field_for(7, 3), 3) is None
    assert sqrt_in_field(field_for(3, 2), 4) == 1
    C = make_curve(field_for(7, 3), 3)
    with pytest.raises(NoSquareRootError):
        hull(build_code(C, family_degree(C, 0)))

