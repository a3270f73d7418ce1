import pytest
from starring.ring import make_zmod, make_product
from starring.graph import (SplitLimitError, component_sides,
                            components_without, is_split, splits_via,
                            strong_graph)


@pytest.fixture(scope='module')
def graph():
    return strong_graph(make_product(make_zmod(2), make_zmod(4)))


def test_components_without(graph):
    assert components_without(graph, 4) == [[1], [2, 6], [3]]
    assert components_without(graph, 2) == [[1, 3, 4], [6]]


def test_splits(graph):
    splits = [(list(x), list(y)) for x, y in splits_via(graph, 4)]
    assert splits == [([4, 1], [4, 2, 3, 6]),
                      ([4, 1, 2, 6], [4, 3]),
                      ([4, 1, 3], [4, 2, 6])]
    for x, y in splits:
        assert is_split(graph, 4, x, y)


def test_split_via_label(graph):
    assert len(splits_via(graph, '(1,0)')) == 3
    assert len(splits_via(graph, '(0,2)')) == 1


def test_no_split_without_cut(graph):
    assert splits_via(graph, 1) == []
    assert component_sides(graph, 6) == []


def test_split_cap(graph):
    with pytest.raises(SplitLimitError) as excinfo:
        splits_via(graph, 4, cap=2)
    assert excinfo.value.components == 3


def test_component_sides(graph):
    sides = [(list(x), list(y)) for x, y in component_sides(graph, 4)]
    assert sides == [([4, 1], [2, 3, 4, 6]),
                     ([4, 2, 6], [1, 3, 4]),
                     ([4, 3], [1, 2, 4, 6])]


def test_is_split_rejects(graph):
    assert not is_split(graph, 4, [4], [4, 1, 2, 3, 6])
    assert not is_split(graph, 4, [4, 1, 2], [4, 3, 6])
    assert not is_split(graph, 4, [4, 1], [4, 2, 3])
    assert not is_split(graph, 1, [1, 4], [1, 2, 3, 6])
