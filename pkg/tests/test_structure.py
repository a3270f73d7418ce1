import pytest
from starring.ring import make_zmod, make_product, make_matrix_ring
from starring.ringspec import build
from starring.structure import (ClassificationReport, ElementSet,
                                NoCentralCover, annihilator_projection,
                                annihilator_table, central_cover,
                                central_projections, characteristic_classes,
                                classify, is_central, is_ideal,
                                is_properly_maximal, left_annihilator,
                                left_projection, principal_right_ideal,
                                projections, right_ann_of_principal,
                                right_annihilator, right_projection)


@pytest.fixture(scope='module')
def z6():
    return make_zmod(6)


@pytest.fixture(scope='module')
def z2z4():
    return make_product(make_zmod(2), make_zmod(4))


def test_element_set(z6):
    s = ElementSet.of(z6, [2, 3])
    assert s == {2, 3}
    assert len(s) == 2
    assert 3 in s and 4 not in s
    assert list(s) == [2, 3]
    assert s.labels() == ['2', '3']
    assert repr(s) == '{2, 3}'
    assert s | {4} == {2, 3, 4}
    assert s & {3, 5} == {3}
    assert s - {3} == {2}
    assert s <= {2, 3, 4}
    assert s < {2, 3, 4}
    assert not s < {2, 3}
    assert ElementSet.full(z6) == set(range(6))


def test_element_set_mask_length(z6):
    with pytest.raises(ValueError):
        ElementSet(z6, [True, False])


def test_annihilators(z6):
    assert right_annihilator(z6, [2]) == {0, 3}
    assert left_annihilator(z6, [2]) == {0, 3}
    assert right_annihilator(z6, [2, 3]) == {0}
    assert right_annihilator(z6, []) == set(range(6))
    assert right_ann_of_principal(z6, 4) == {0, 3}
    assert principal_right_ideal(z6, 2) == {0, 2, 4}


def test_matrix_annihilators_are_one_sided():
    R = make_matrix_ring(make_zmod(2), 2)
    e11 = R.unit(0, 0)
    right = right_annihilator(R, [e11])
    left = left_annihilator(R, [e11])
    assert right != left
    assert all(R.mul(e11, x) == R.zero for x in right)
    assert all(R.mul(x, e11) == R.zero for x in left)


def test_projections(z6, z2z4):
    assert projections(z6) == {0, 1, 3, 4}
    assert central_projections(z6) == {0, 1, 3, 4}
    assert central_projections(z2z4).labels() == ['(0,0)', '(0,1)',
                                                  '(1,0)', '(1,1)']


def test_matrix_projections_not_all_central():
    R = make_matrix_ring(make_zmod(2), 2)
    assert R.unit(0, 0) in projections(R)
    assert not is_central(R, R.unit(0, 0))
    assert central_projections(R) == {R.zero, R.one}


def test_is_ideal(z6):
    assert is_ideal(z6, {0, 2, 4})
    assert is_ideal(z6, {0, 3})
    assert is_ideal(z6, {0})
    assert not is_ideal(z6, {0, 2})
    assert not is_ideal(z6, {2, 4})
    assert not is_ideal(z6, {0, 1})


def test_properly_maximal(z6):
    assert is_properly_maximal(z6, 4)
    assert is_properly_maximal(z6, 3)
    assert not is_properly_maximal(z6, 4, strict=True)
    assert not is_properly_maximal(z6, 1)
    with pytest.raises(ValueError):
        is_properly_maximal(z6, 0)


def test_classify_z6(z6):
    report = classify(z6)
    assert all(report.as_dict().values())
    assert report.witnesses == {}
    assert classify(z6) is report


def test_classify_z2z4(z2z4):
    report = classify(z2z4)
    assert not report.is_pq_baer
    assert not report.is_rickart
    assert not report.is_quasi_baer
    assert not report.is_baer
    assert not report.is_semiproper
    witnesses = report.labelled_witnesses()
    assert witnesses['pq_baer'] == {'element': '(0,2)'}
    assert witnesses['rickart'] == {'element': '(0,2)'}
    assert witnesses['quasi_baer'] == {'subset': ['(0,2)']}
    assert witnesses['semiproper'] == {'element': '(0,2)'}


def test_classify_matrices_over_field():
    report = classify(make_matrix_ring(make_zmod(2), 2))
    assert not report.is_rickart
    assert report.is_semiproper
    assert 'rickart' in report.witnesses


def test_central_covers(z6):
    assert [central_cover(z6, a) for a in range(6)] == [0, 1, 4, 3, 4, 1]
    classes = characteristic_classes(z6)
    assert list(classes) == [0, 1, 3, 4]
    assert classes[0] == set()
    assert classes[1] == {1, 5}
    assert classes[3] == {3}
    assert classes[4] == {2, 4}


def test_central_cover_needs_pq_baer(z2z4):
    with pytest.raises(NoCentralCover):
        central_cover(z2z4, '(1,0)')
    with pytest.raises(LookupError):
        characteristic_classes(z2z4)


def test_annihilator_projections(z6):
    assert annihilator_projection(z6, 2) == 3
    assert right_projection(z6, 2) == 4
    assert left_projection(z6, 2) == 4
    assert right_projection(z6, 5) == 1


def test_annihilator_projection_missing():
    R = make_zmod(4)
    with pytest.raises(LookupError):
        annihilator_projection(R, 2)


@pytest.mark.parametrize('spec', ['Z6', 'Z8', 'Z12', 'Z2 x Z4', 'Z3 x Z3',
                                  'M2(Z2)', 'M2(Z3)'])
def test_principal_annihilators(spec):
    R = build(spec)
    table = annihilator_table(R)
    assert not (table.ann_principal & ~table.ann_elem).any()
    for a in R:
        assert is_ideal(R, right_ann_of_principal(R, a))


@pytest.mark.parametrize('spec', ['Z6', 'Z30', 'Z2 x Z2 x Z2', 'Z3 x Z3',
                                  'M2(Z2)', 'M2(Z3)'])
def test_principal_annihilator_of_central_cover(spec):
    R = build(spec)
    assert classify(R).is_pq_baer
    for a in R:
        assert right_ann_of_principal(R, a) == \
            right_ann_of_principal(R, central_cover(R, a))


def test_classification_implications():
    R = make_zmod(6)
    assert classify(R).implication_failures() == []
    assert classify(make_zmod(4)).implication_failures() == []
    report = ClassificationReport(R)
    report.fail('quasi_baer', subset=[2])
    assert report.implication_failures() == ['baer => quasi_baer']
    report.fail('baer', subset=[2])
    report.fail('pq_baer', element=2)
    assert report.implication_failures() == []
