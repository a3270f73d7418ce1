import io
import json
import pytest
from lxml import etree
from starring.graph import complement, strong_graph
from starring.innerutils import INFINITY
from starring.ring import make_zmod, make_product
from starring.theorems import check, find_converse_counterexample
from starring.validation import validate_star_ring
from starring.exports import (DotWriter, EdgeListWriter, GraphMLWriter,
                              JsonWriter, dumps, get_writer, json_number,
                              ring_report, to_dict, write_graph)
from starring.exports.edgelist import token
from starring.exports.graphml import GRAPHML_URL


@pytest.fixture(scope='module')
def z6():
    return strong_graph(make_zmod(6))


@pytest.fixture(scope='module')
def z2z4():
    return strong_graph(make_product(make_zmod(2), make_zmod(4)))


def test_dot(z6):
    assert DotWriter().serialize(z6).decode() == (
        'graph "strong(Z6)" {\n'
        '  "2";\n'
        '  "3";\n'
        '  "4";\n'
        '  "2" -- "3";\n'
        '  "3" -- "4";\n'
        '}\n')


def test_dot_indent(z6):
    text = DotWriter(indent=4).serialize(complement(z6)).decode()
    assert text.splitlines()[0] == 'graph "complement-of-strong(Z6)" {'
    assert '    "2" -- "4";' in text.splitlines()


def test_edgelist(z2z4):
    assert EdgeListWriter().serialize(z2z4).decode() == (
        '(0,1) (1,0)\n'
        '(0,2) (1,0)\n'
        '(0,2) (1,2)\n'
        '(0,3) (1,0)\n')
    assert token('a b') == '"a b"'
    assert token('[[0,2],[0,2]]') == '[[0,2],[0,2]]'


def test_json(z6):
    document = json.loads(JsonWriter().serialize(z6).decode())
    assert document == {'name': 'strong(Z6)', 'kind': 'strong',
                        'complement': False, 'ring': 'Z6',
                        'vertices': ['2', '3', '4'],
                        'edges': [['2', '3'], ['3', '4']], 'loops': []}


def test_json_loops():
    document = to_dict(strong_graph(make_zmod(4)))
    assert document['vertices'] == ['2']
    assert document['loops'] == ['2']
    assert document['edges'] == []


def test_graphml(z6):
    root = etree.fromstring(GraphMLWriter().serialize(z6))
    ns = {'g': GRAPHML_URL}
    nodes = root.findall('g:graph/g:node', ns)
    assert [node.get('id') for node in nodes] == ['n2', 'n3', 'n4']
    assert [node.findtext('g:data', namespaces=ns) for node in nodes] == \
        ['2', '3', '4']
    edges = root.findall('g:graph/g:edge', ns)
    assert [(e.get('source'), e.get('target')) for e in edges] == \
        [('n2', 'n3'), ('n3', 'n4')]
    assert root.find('g:graph', ns).get('edgedefault') == 'undirected'


def test_get_writer():
    assert isinstance(get_writer(), DotWriter)
    assert isinstance(get_writer('JSON'), JsonWriter)
    assert isinstance(get_writer(output='out.graphml'), GraphMLWriter)
    assert isinstance(get_writer(output='out.EDGELIST'), EdgeListWriter)
    assert isinstance(get_writer(output='out.txt'), DotWriter)
    assert isinstance(get_writer('dot', 'out.json'), DotWriter)
    with pytest.raises(ValueError):
        get_writer('png')


def test_write_graph_to_path(z6, tmpdir):
    output = tmpdir.join('z6.json')
    write_graph(z6, str(output))
    assert json.loads(output.read())['edges'] == [['2', '3'], ['3', '4']]


def test_write_graph_to_stream(z6):
    stream = io.BytesIO()
    data = write_graph(z6, stream, 'edgelist')
    assert stream.getvalue() == data == b'2 3\n3 4\n'


def test_json_numbers():
    assert json_number(None) is None
    assert json_number(INFINITY) == 'infinity'
    assert json_number(3) == 3


def test_metrics_to_dict(z6):
    from starring.graph import metrics
    assert to_dict(metrics(complement(z6))) == {
        'vertices': 3, 'edges': 1, 'connected': False, 'components': 2,
        'diameter': 'infinity', 'girth': 'infinity'}
    empty = to_dict(metrics(strong_graph(make_zmod(7))))
    assert empty['diameter'] is None


def test_check_to_dict():
    R = make_product(make_zmod(2), make_zmod(4))
    assert to_dict(check('TH-CUT-IFF-PENDANT', R)) == {
        'id': 'TH-CUT-IFF-PENDANT', 'status': 'hypothesis_not_met',
        'witness': {'element': '(0,2)'}, 'hypothesis': 'not p.q.-Baer'}


def test_validation_to_dict():
    from starring.ring import make_matrix_ring
    report = validate_star_ring(make_matrix_ring(make_zmod(2), 2, 'id'))
    document = to_dict(report)
    assert document['ok'] is False
    assert document['exhaustive'] is True
    assert document['axioms']['star_anti_multiplicativity'] is False
    assert list(document['witnesses']) == ['star_anti_multiplicativity']


def test_converse_to_dict():
    found = find_converse_counterexample('PROP-NONZD-SUM', ['Z4'])
    assert to_dict(found) == {'converse': 'PROP-NONZD-SUM', 'ring': 'Z4',
                              'witness': {'vertices': ['2'],
                                          'cut_vertices': []},
                              'examined': 1}


def test_unsupported():
    with pytest.raises(TypeError):
        to_dict(object())


def test_ring_report():
    R = make_zmod(6)
    report = json.loads(dumps(ring_report(R, checks=[check('TH-GIRTH', R)])))
    assert list(report) == ['spec', 'order', 'involution_proper',
                            'classification', 'cp', 'graphs', 'checks']
    assert report['spec'] == 'Z6'
    assert report['cp'] == {'count': 4, 'atoms': ['3', '4']}
    strong = report['graphs']['strong']
    assert strong['vertices'] == 3
    assert strong['edges'] == 2
    assert strong['girth'] == 'infinity'
    assert strong['complete_bipartite'] == [2, 1]
    assert report['graphs']['complement']['connected'] is False
    assert report['checks'][0]['id'] == 'TH-GIRTH'
    assert report['classification']['witnesses'] == {}
