import pytest
from starring import config
from starring.corpus import (CorpusSpec, TheoremViolation, canonical_key,
                             run_corpus, verify_ring)
from starring.ring import OrderLimitError
from starring.ringspec import Zmod
from starring.structure import ClassificationReport
from starring.theorems import Outcome, Theorem, registry


SMALL = ['Z2', 'Z3', 'Z4', 'Z2 x Z2', 'Z5', 'Z6', 'Z2 x Z3', 'Z7', 'Z8',
         'Z2 x Z2 x Z2', 'Z2 x Z4']


@pytest.fixture(scope='module')
def corpus():
    return CorpusSpec(zmod_max=8, product_order_max=8, matrices=())


@pytest.fixture(scope='module')
def summary(corpus):
    return run_corpus(corpus)


def test_canonical_order(corpus):
    assert corpus.descriptors() == SMALL
    assert len(corpus) == len(SMALL)
    assert canonical_key(Zmod(6)) == (6, 0, 'Z6')


def test_matrices_after_products():
    corpus = CorpusSpec(zmod_max=2, product_order_max=16, factors=(2, 4),
                        matrices=['M2(Z2)', 'M2(Z2)@transpose', 'M2(Z2)@id'])
    assert corpus.descriptors() == ['Z2', 'Z2 x Z2', 'Z2 x Z2 x Z2',
                                    'Z2 x Z4', 'Z2 x Z2 x Z2 x Z2',
                                    'Z2 x Z2 x Z4', 'Z4 x Z4', 'M2(Z2)@id',
                                    'M2(Z2)@transpose']


def test_order_cap():
    with pytest.raises(OrderLimitError):
        CorpusSpec(zmod_max=10, matrices=(), max_order=5).specs()


def test_summary(summary):
    assert summary.rings == SMALL
    assert summary.ok
    assert summary.violations == []
    assert summary.invalid == {}
    assert summary.implications == {}
    for counts in summary.counts.values():
        assert sum(counts.values()) == len(SMALL)
    lines = summary.table()
    assert lines[0] == 'rings: 11'
    assert lines[1].split() == ['theorem', 'pass', 'vacuous', 'gated',
                                'violated']
    assert len(lines) == 2 + len(registry)
    assert 'TH-PROD-CONN' in summary.uncovered()
    assert 'TH-SIDE-IDEMPOTENT' not in summary.uncovered()
    assert 'LEM-DIST3' not in summary.uncovered()


def test_deterministic(corpus, summary):
    assert str(run_corpus(corpus)) == str(summary)


def test_parallel(corpus, summary):
    assert str(run_corpus(corpus, jobs=2)) == str(summary)


def test_invalid_rings_are_reported():
    corpus = CorpusSpec(zmod_max=2, product_order_max=0,
                        matrices=['M2(Z2)@id'])
    summary = run_corpus(corpus, ids=['REM-CP2-EMPTY'])
    assert summary.invalid == {'M2(Z2)@id': ['star_anti_multiplicativity']}
    assert summary.ok
    assert 'INVALID M2(Z2)@id: star_anti_multiplicativity' in summary.table()
    assert run_corpus(corpus, ids=['REM-CP2-EMPTY'],
                      validate=False).invalid == {}


def test_classification_implications_hold():
    corpus = CorpusSpec(zmod_max=40, product_order_max=72,
                        matrices=['M2(Z2)', 'M2(Z3)', 'M2(Z2)@id'])
    summary = run_corpus(corpus, ids=[], validate=False)
    assert len(summary.rings) == len(corpus)
    assert summary.implications == {}
    assert summary.ok


def rickart_failure(ring):
    report = ClassificationReport(ring)
    report.fail('rickart', element=ring.zero)
    return report


def test_broken_implications_are_reported(monkeypatch):
    monkeypatch.setattr('starring.corpus.classify', rickart_failure)
    corpus = CorpusSpec(zmod_max=3, product_order_max=0, matrices=())
    summary = run_corpus(corpus, ids=[], validate=False)
    assert summary.implications == {'Z2': ['baer => rickart'],
                                    'Z3': ['baer => rickart']}
    assert not summary.ok
    assert 'IMPLICATION Z2: baer => rickart' in summary.table()


class AlwaysViolated(Theorem):
    id = 'TEST-VIOLATED'

    def conclusion(self, analysis):
        return Outcome(False, 1, {'ring': analysis.ring.descriptor})


def test_strict(monkeypatch):
    monkeypatch.setitem(registry, AlwaysViolated.id, AlwaysViolated())
    corpus = CorpusSpec(zmod_max=3, product_order_max=0, matrices=())
    summary = run_corpus(corpus, ids=['TEST-VIOLATED'])
    assert not summary.ok
    assert summary.counts['TEST-VIOLATED']['violated'] == 2
    assert "VIOLATED TEST-VIOLATED on Z2: {'ring': 'Z2'}" in summary.table()
    with pytest.raises(TheoremViolation) as excinfo:
        run_corpus(corpus, ids=['TEST-VIOLATED'], strict=True)
    assert [d for d, _ in excinfo.value.violations] == ['Z2', 'Z3']
    assert run_corpus(corpus, ids=['REM-CP2-EMPTY'], strict=True).ok


def test_verify_ring():
    row = verify_ring(Zmod(6))
    assert row.descriptor == 'Z6'
    assert row.order == 6
    assert row.invalid == []
    assert len(row.results) == len(registry)
    assert all(result.elapsed == 0.0 for result in row.results)


def test_verify_ring_overrides():
    with pytest.raises(OrderLimitError):
        verify_ring(Zmod(6), overrides={'max_order': 4})
    assert 'max_order' not in config.global_overrides
