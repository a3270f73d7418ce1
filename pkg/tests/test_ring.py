import logging
import numpy as np
import pytest
from hypothesis import given, settings, strategies as st
from starring.ring import (Involution, InvolutionError,
                           NonCommutativeBaseError, OrderLimitError,
                           UnknownElementError, make_zmod, make_product,
                           make_matrix_ring)
from starring.ringspec import Product, Zmod


@pytest.fixture(scope='module')
def z6():
    return make_zmod(6)


@pytest.fixture(scope='module')
def z2z4():
    return make_product(make_zmod(2), make_zmod(4))


@pytest.fixture(scope='module')
def m2z2():
    return make_matrix_ring(make_zmod(2), 2)


@pytest.fixture(scope='module')
def m2z6():
    return make_matrix_ring(make_zmod(6), 2)


def test_zmod_arithmetic(z6):
    assert z6.order == 6
    assert z6.descriptor == 'Z6'
    assert z6.one == 1
    assert z6.zero == 0
    assert z6.mul(2, 3) == 0
    assert z6.add(4, 5) == 3
    assert z6.neg(2) == 4
    assert z6.sub(1, 3) == 4
    assert z6.star(5) == 5
    assert z6.mul(2, 2, 2) == 2
    assert z6.mul() == 1


def test_zmod_vectorised(z6):
    products = z6.mul(2, z6.elements)
    assert list(products) == [0, 2, 4, 0, 2, 4]


def test_zmod_labels(z6):
    assert z6.labels == ['0', '1', '2', '3', '4', '5']
    assert z6.element('4') == 4
    assert z6.element(10) == 4
    assert str(z6) == 'Z6'


def test_zmod_characteristic(z6):
    assert z6.characteristic == 6
    assert z6.is_commutative()


def test_zmod_bad_modulus():
    with pytest.raises(ValueError):
        make_zmod(1)


def test_zmod_order_limit():
    with pytest.raises(OrderLimitError):
        make_zmod(5000)
    with pytest.raises(OrderLimitError):
        make_zmod(12, max_order=10)


def test_zmod_involution_tag():
    assert make_zmod(3, 'identity').involution is Involution.IDENTITY
    with pytest.raises(InvolutionError):
        make_zmod(3, 'transpose')


def test_involution_from_tag():
    assert Involution.from_tag('id') is Involution.IDENTITY
    assert Involution.from_tag(' Transpose ') is Involution.TRANSPOSE
    with pytest.raises(InvolutionError):
        Involution.from_tag('conjugate')


def test_product_ids(z2z4):
    assert z2z4.order == 8
    assert z2z4.descriptor == 'Z2 x Z4'
    assert z2z4.element((1, 0)) == 4
    assert z2z4.label(4) == '(1,0)'
    assert z2z4.element('(1, 0)') == 4
    assert z2z4.one == 5
    assert z2z4.label(z2z4.one) == '(1,1)'


def test_product_arithmetic(z2z4):
    a = z2z4.element((1, 2))
    b = z2z4.element((1, 3))
    assert z2z4.label(z2z4.mul(a, b)) == '(1,2)'
    assert z2z4.label(z2z4.add(a, b)) == '(0,1)'
    assert z2z4.star(a) == a
    assert z2z4.characteristic == 4


def test_product_nested_right():
    R = make_product(make_zmod(2), make_zmod(2), make_zmod(2))
    assert R.descriptor == 'Z2 x Z2 x Z2'
    assert R.order == 8
    assert R.leaf_count == 3
    assert R.label(5) == '(1,0,1)'
    assert R.element((1, 0, 1)) == 5
    assert R.element((1, (0, 1))) == 5
    assert R.spec == Product(Zmod(2), Product(Zmod(2), Zmod(2)))


def test_product_order_limit():
    with pytest.raises(OrderLimitError):
        make_product(make_zmod(50), make_zmod(50))


def test_unknown_element(z2z4):
    with pytest.raises(UnknownElementError):
        z2z4.element('(2,0)')
    with pytest.raises(KeyError):
        z2z4.element((1, 2, 3, 4))


def test_matrix_ids(m2z2):
    assert m2z2.order == 16
    assert m2z2.descriptor == 'M2(Z2)@transpose'
    assert m2z2.one == 9
    assert m2z2.label(9) == '[[1,0],[0,1]]'
    assert m2z2.element([[1, 0], [0, 1]]) == 9
    assert m2z2.unit(0, 1) == 4
    assert m2z2.unit(1, 0) == 2


def test_matrix_arithmetic(m2z2):
    e12, e21 = m2z2.unit(0, 1), m2z2.unit(1, 0)
    assert m2z2.mul(e12, e21) == m2z2.unit(0, 0)
    assert m2z2.mul(e21, e12) == m2z2.unit(1, 1)
    assert m2z2.mul(e12, e12) == 0
    assert m2z2.star(e12) == e21
    assert not m2z2.is_commutative()
    assert m2z2.involution_proper


def test_matrix_identity_involution(caplog):
    with caplog.at_level(logging.WARNING):
        R = make_matrix_ring(make_zmod(2), 2, 'id')
    assert R.descriptor == 'M2(Z2)@id'
    assert not R.involution_proper
    assert R.involution_defect == (4, 2)
    assert R.star(4) == 4
    assert 'not an anti-automorphism' in caplog.text


def test_matrix_size_one_identity_is_proper():
    R = make_matrix_ring(make_zmod(3), 1, Involution.IDENTITY)
    assert R.involution_proper
    assert R.order == 3


def test_matrix_noncommutative_base(m2z2):
    with pytest.raises(NonCommutativeBaseError):
        make_matrix_ring(m2z2, 2, max_order=10 ** 5)


def test_matrix_order_limit():
    with pytest.raises(OrderLimitError):
        make_matrix_ring(make_zmod(7), 2)


def test_pseudo_involution_lifts_through_products():
    pseudo = make_matrix_ring(make_zmod(2), 2, 'id')
    right = make_product(make_zmod(2), pseudo)
    assert not right.involution_proper
    assert right.involution_defect == (4, 2)
    left = make_product(pseudo, make_zmod(2))
    assert not left.involution_proper
    assert left.involution_defect == (8, 4)


def test_large_ring_has_no_table(m2z6):
    assert m2z6.order == 1296
    assert m2z6.table is None
    assert np.array_equal(m2z6.mul_row(m2z6.one), m2z6.elements)
    assert np.array_equal(m2z6.mul_col(m2z6.one), m2z6.elements)


def test_small_ring_table(z6):
    assert z6.table.shape == (6, 6)
    assert z6.table[2, 3] == 0


elements = st.integers(min_value=0, max_value=1295)


@settings(max_examples=200, deadline=None)
@given(elements, elements, elements)
def test_m2z6_ring_axioms(m2z6, a, b, c):
    R = m2z6
    assert R.mul(R.mul(a, b), c) == R.mul(a, R.mul(b, c))
    assert R.mul(a, R.add(b, c)) == R.add(R.mul(a, b), R.mul(a, c))
    assert R.mul(R.add(a, b), c) == R.add(R.mul(a, c), R.mul(b, c))


@settings(max_examples=200, deadline=None)
@given(elements, elements)
def test_m2z6_transpose_axioms(m2z6, a, b):
    R = m2z6
    assert R.star(R.star(a)) == a
    assert R.star(R.add(a, b)) == R.add(R.star(a), R.star(b))
    assert R.star(R.mul(a, b)) == R.mul(R.star(b), R.star(a))


@pytest.mark.parametrize('left, right', [
    (make_zmod(2), make_zmod(4)),
    (make_zmod(3), make_zmod(4)),
    (make_zmod(2), make_matrix_ring(make_zmod(2), 2)),
])
def test_product_projects_onto_factors(left, right):
    R = make_product(left, right)
    for a in R:
        a1, a2 = R.split(a)
        assert R.star(a) == R.combine(left.star(a1), right.star(a2))
        assert R.neg(a) == R.combine(left.neg(a1), right.neg(a2))
        for b in R:
            b1, b2 = R.split(b)
            assert R.add(a, b) == R.combine(left.add(a1, b1),
                                            right.add(a2, b2))
            assert R.mul(a, b) == R.combine(left.mul(a1, b1),
                                            right.mul(a2, b2))


@pytest.mark.parametrize('ring', [
    make_zmod(12),
    make_product(make_zmod(2), make_zmod(4)),
    make_product(make_zmod(2), make_zmod(2), make_zmod(2)),
    make_product(make_zmod(2), make_matrix_ring(make_zmod(2), 2)),
    make_matrix_ring(make_zmod(3), 2),
])
def test_labels_are_injective(ring):
    assert len(set(ring.labels)) == ring.order
    for a in ring:
        assert ring.element(ring.label(a)) == a
