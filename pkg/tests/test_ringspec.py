import pytest
from starring.ring import (Involution, NonCommutativeBaseError,
                           OrderLimitError)
from starring.ringspec import (Matrix, Product, RingSpecSyntaxError, Zmod,
                               build, describe, order_of, parse_ring_spec)


def test_parse_zmod():
    assert parse_ring_spec('Z6') == Zmod(6)
    assert parse_ring_spec(' z6 ') == Zmod(6)


def test_parse_matrix_identity():
    spec = parse_ring_spec('M2(Z6)@id')
    assert spec == Matrix(2, Zmod(6), Involution.IDENTITY)
    assert parse_ring_spec('m2( z6 ) @ IDENTITY') == spec


def test_parse_matrix_default_transpose():
    assert parse_ring_spec('M2(Z6)') == Matrix(2, Zmod(6),
                                               Involution.TRANSPOSE)
    assert parse_ring_spec('M2(Z6)@transpose') == parse_ring_spec('M2(Z6)')


def test_parse_product_nests_right():
    spec = parse_ring_spec('Z2 x Z2 x Z2')
    assert spec == Product(Zmod(2), Product(Zmod(2), Zmod(2)))
    assert spec.involution is Involution.COMPONENTWISE
    assert parse_ring_spec('Z2*Z3') == parse_ring_spec('Z2 X Z3')


def test_parse_matrix_in_product():
    spec = parse_ring_spec('Z2 x M2(Z2)@id')
    assert spec == Product(Zmod(2), Matrix(2, Zmod(2), Involution.IDENTITY))


@pytest.mark.parametrize('text, position', [
    ('', 0),
    ('Q5', 0),
    ('Z', 1),
    ('Z1', 1),
    ('M2Z6', 2),
    ('M2(Z6', 5),
    ('M2(Z6)@foo', 7),
    ('Z6 Z2', 3),
    ('Z6 x', 4),
])
def test_syntax_errors(text, position):
    with pytest.raises(RingSpecSyntaxError) as excinfo:
        parse_ring_spec(text)
    assert excinfo.value.position == position
    assert isinstance(excinfo.value, ValueError)


def test_describe_round_trip():
    for text in ('Z6', 'Z2 x Z4', 'Z2 x Z2 x Z2', 'M2(Z6)@id',
                 'M2(Z6)@transpose', 'Z3 x M2(Z2)@id'):
        assert describe(parse_ring_spec(text)) == text


def test_order_of():
    assert order_of(parse_ring_spec('M2(Z6)')) == 1296
    assert order_of(parse_ring_spec('Z2 x Z3 x Z5')) == 30


def test_build():
    R = build('Z2 x Z4')
    assert R.descriptor == 'Z2 x Z4'
    assert R.spec == parse_ring_spec('Z2 x Z4')
    M = build('M2(Z6)@id')
    assert M.order == 1296
    assert not M.involution_proper
    assert describe(M.spec) == 'M2(Z6)@id'


def test_build_errors():
    with pytest.raises(OrderLimitError):
        build('M2(Z7)')
    with pytest.raises(OrderLimitError):
        build('Z64', max_order=32)
    with pytest.raises(NonCommutativeBaseError):
        build('M2(M2(Z2))', max_order=10 ** 5)
