import pytest
from starring.ring import make_zmod, make_product, make_matrix_ring
from starring.validation import Axiom, validate_star_ring


@pytest.fixture(scope='module')
def pseudo():
    return make_matrix_ring(make_zmod(2), 2, 'id')


def test_zmod_valid():
    report = validate_star_ring(make_zmod(12))
    assert report.ok
    assert report.failures == []
    assert report.exhaustive
    assert report.samples == 0


def test_product_valid():
    report = validate_star_ring(make_product(make_zmod(2), make_zmod(4)))
    assert report.ok
    assert all(report.results.values())


def test_matrix_transpose_valid():
    report = validate_star_ring(make_matrix_ring(make_zmod(3), 2))
    assert report.ok
    assert not report.exhaustive
    assert report.samples == 10 ** 6


def test_sampled_validation_is_deterministic():
    R = make_matrix_ring(make_zmod(3), 2)
    report = validate_star_ring(R, exhaustive_order=8, samples=5000, seed=3)
    assert report.ok
    assert report.samples == 5000


def test_identity_on_matrices_fails_anti_multiplicativity(pseudo):
    report = validate_star_ring(pseudo)
    assert not report.ok
    assert report.failures == [Axiom.STAR_ANTI_MULTIPLICATIVITY]
    assert Axiom.STAR_ANTI_MULTIPLICATIVITY in report.witnesses
    assert report.replay(Axiom.STAR_ANTI_MULTIPLICATIVITY)


def test_labelled_witnesses(pseudo):
    report = validate_star_ring(pseudo)
    labelled = report.labelled_witnesses()
    x, y = labelled['star_anti_multiplicativity']
    R = pseudo
    a, b = R.element(x), R.element(y)
    assert R.star(R.mul(a, b)) != R.mul(R.star(b), R.star(a))


def test_repr(pseudo):
    assert 'star_anti_multiplicativity' in repr(validate_star_ring(pseudo))
    assert repr(validate_star_ring(make_zmod(3))).endswith('ok>')
