import itertools

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from normtrace.gf import (
    FieldParams,
    dual_basis,
    field_for,
    find_primitive_polynomial,
    make_field,
    prime_power,
)


@pytest.mark.parametrize(
    "p,m,expected",
    [(2, 2, (1, 1, 1)), (3, 2, (2, 1, 1)), (2, 4, (1, 1, 0, 0, 1)), (2, 3, (1, 1, 0, 1))],
)
def test_primitive_polynomial_choice(p, m, expected):
    assert find_primitive_polynomial(p, m) == expected


def test_prime_power():
    assert prime_power(9) == (3, 2)
    assert prime_power(2) == (2, 1)
    with pytest.raises(ValueError):
        prime_power(6)


@pytest.mark.parametrize("p,s,r", [(4, 1, 2), (2, 0, 2), (2, 1, 1), (2, 1, 21)])
def test_bad_params(p, s, r):
    with pytest.raises(ValueError):
        FieldParams(p, s, r)


def test_generator_is_primitive(field):
    powers = {field.pow(field.generator, e) for e in range(field.order - 1)}
    assert powers == set(range(1, field.order))


def test_subfield_is_fixed_by_q_power(field):
    fixed = [a for a in range(field.order) if field.pow(a, field.q) == a]
    assert list(field.subfield) == fixed
    assert len(fixed) == field.q


def test_embed_lands_in_prime_field(f9):
    assert [f9.embed(i) for i in range(5)] == [0, 1, 2, 0, 1]
    assert f9.norm(f9.generator) == 2


def test_trace_and_norm_match_definitions(field):
    Qm1 = (field.order - 1) // (field.q - 1)
    for a in range(field.order):
        conj = [field.pow(a, field.q**i) for i in range(field.r)]
        assert field.trace(a) == field.sum(conj)
        assert field.norm(a) == field.pow(a, Qm1)
        assert field.in_subfield(field.trace(a)) and field.in_subfield(field.norm(a))


def test_vector_ops_agree_with_scalar(field):
    els = field.elements()
    a, b = np.meshgrid(els, els)
    assert np.array_equal(field.vadd(a, b), np.vectorize(field.add)(a, b))
    assert np.array_equal(field.vmul(a, b), np.vectorize(field.mul)(a, b))
    assert np.array_equal(field.vsub(a, b), np.vectorize(field.sub)(a, b))
    nz = els[1:]
    assert np.array_equal(field.vinv(nz), np.array([field.inv(int(x)) for x in nz]))
    assert np.array_equal(field.vtrace(els), np.array([field.trace(int(x)) for x in els]))


def test_division_by_zero(f9):
    with pytest.raises(ZeroDivisionError):
        f9.inv(0)


def test_dual_basis_f4():
    F = field_for(2, 2)
    assert dual_basis(F, [1, 2]) == [3, 1]
    with pytest.raises(ValueError):
        dual_basis(F, [1, 1])


def test_dual_basis_all_bases_tiny_fields():
    for q, r in [(2, 2), (2, 3), (3, 2)]:
        F = field_for(q, r)
        for B in itertools.permutations(range(1, F.order), r):
            try:
                D = dual_basis(F, B)
            except ValueError:
                continue
            for i, j in itertools.product(range(r), repeat=2):
                assert F.trace(F.mul(B[i], D[j])) == (i == j)


field_strategy = st.sampled_from([(2, 4), (3, 2), (5, 2), (4, 2), (2, 5), (3, 3)])


@given(field_strategy, st.data())
def test_field_axioms(qr, data):
    F = field_for(*qr)
    el = st.integers(0, F.order - 1)
    a, b, c = data.draw(el), data.draw(el), data.draw(el)
    assert F.add(a, F.add(b, c)) == F.add(F.add(a, b), c)
    assert F.mul(a, F.mul(b, c)) == F.mul(F.mul(a, b), c)
    assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))
    assert F.add(a, F.neg(a)) == 0
    if a:
        assert F.mul(a, F.inv(a)) == 1
        assert F.pow(a, F.order - 1) == 1


@given(field_strategy, st.data())
def test_trace_linear_norm_multiplicative(qr, data):
    F = field_for(*qr)
    el = st.integers(0, F.order - 1)
    a, b = data.draw(el), data.draw(el)
    c = data.draw(st.sampled_from(F.subfield))
    assert F.trace(F.add(a, b)) == F.add(F.trace(a), F.trace(b))
    assert F.trace(F.mul(c, a)) == F.mul(c, F.trace(a))
    assert F.norm(F.mul(a, b)) == F.mul(F.norm(a), F.norm(b))
    assert F.frobenius(F.add(a, b)) == F.add(F.frobenius(a), F.frobenius(b))


def test_make_field_is_cached():
    assert make_field(FieldParams(3, 1, 2)) is field_for(3, 2)
